#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "covering.hpp"
#include "search.hpp"

namespace osclab {

using json = nlohmann::json;

inline constexpr const char* tool_version = "0.1.0";
inline constexpr const char* format_version = "1";

inline json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InvalidInput("expected [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

// ---------------------------------------------------------------------------
// Domains and polynomials

inline json domain_to_json(const ConvexDomain& k) {
    if (k.is_disk()) return {{"kind", "disk"}, {"center", to_json(k.center())}, {"radius", k.radius()}};
    json v = json::array();
    for (auto z : k.vertices()) v.push_back(to_json(z));
    return {{"kind", "polygon"}, {"vertices", v}};
}

inline ConvexDomain domain_from_json(const json& j) {
    try {
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "disk") return ConvexDomain::disk(complex_from_json(j.at("center")), j.at("radius").get<double>());
        if (kind == "polygon") {
            std::vector<cplx> v;
            for (auto& p : j.at("vertices")) v.push_back(complex_from_json(p));
            return ConvexDomain::polygon(std::move(v));
        }
        throw InvalidDomain("unknown domain kind: " + kind);
    } catch (const json::exception& e) {
        throw InvalidDomain(std::string("malformed domain: ") + e.what());
    } catch (const InvalidInput& e) {
        throw InvalidDomain(std::string("malformed domain: ") + e.what());
    }
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

inline ConvexDomain read_domain(const std::string& path) { return domain_from_json(read_json_file(path)); }

inline json polynomial_to_json(const RootPolynomial& p) {
    json r = json::array();
    for (auto z : p.roots()) r.push_back(to_json(z));
    return {{"lead", to_json(p.lead())}, {"roots", r}};
}

inline RootPolynomial polynomial_from_json(const json& j) {
    try {
        std::vector<cplx> roots;
        for (auto& z : j.at("roots")) roots.push_back(complex_from_json(z));
        cplx lead = j.contains("lead") ? complex_from_json(j.at("lead")) : cplx(1.0);
        return RootPolynomial(std::move(roots), lead);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed polynomial: ") + e.what());
    }
}

inline json norm_record_to_json(const NormRecord& r) {
    return {{"q", is_infinite_q(r.q) ? json("inf") : json(r.q)}, {"norm_p", r.norm_p}, {"norm_dp", r.norm_dp}, {"M", r.M}};
}

// ---------------------------------------------------------------------------
// Reports

/// Non-finite doubles become strings so that every line stays valid JSON.
inline json number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

inline json report_to_json(const AuditReport& r) {
    json detail = json::object();
    for (auto& [k, v] : r.detail) detail[k] = number(v);
    json j = {{"audit_id", r.audit_id}, {"verdict", to_string(r.verdict)}, {"applicable", r.applicable},
              {"lhs", number(r.lhs)},   {"rhs", number(r.rhs)},           {"margin", number(r.margin)},
              {"tol", number(r.tol)},   {"detail", detail}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline json summary_to_json(const BatchSummary& s) {
    return {{"pass", s.pass},
            {"fail", s.fail},
            {"not_applicable", s.not_applicable},
            {"excluded", s.excluded},
            {"worst_margin", number(s.worst_margin)},
            {"worst_id", s.worst_id}};
}

// ---------------------------------------------------------------------------
// Covering and search

inline json arc_to_json(const BoundaryArc& a) {
    return {{"start_s", a.start_s}, {"end_s", a.end_s}, {"length", a.length}, {"kind", to_string(a.kind)},
            {"variation", a.variation}};
}

inline json covering_to_json(const Covering& c) {
    json comps = json::array();
    for (auto& m : c.components)
        comps.push_back({{"arc", arc_to_json(m.arc)},
                         {"central", arc_to_json(m.central)},
                         {"minus_length", m.minus_length},
                         {"plus_length", m.plus_length},
                         {"members", m.members}});
    json fam = json::array();
    for (auto& a : c.family) fam.push_back(arc_to_json(a));
    json checks = json::array();
    for (auto& r : c.checks) checks.push_back(report_to_json(r));
    return {{"r", c.r},
            {"theta", c.theta},
            {"pad", c.pad},
            {"cut_point", c.cut_point},
            {"k0", c.k0()},
            {"measure", c.measure},
            {"measure_bound", 48 * c.pad / 4},
            {"elementary_count", c.elementary_count},
            {"family", fam},
            {"components", comps},
            {"verification_points", c.verification_points},
            {"verification_exceptions", c.verification_exceptions},
            {"r_gate", c.r_gate},
            {"checks", checks},
            {"invariants_hold", c.invariants_hold()}};
}

inline json case_split_to_json(const CaseSplit& cs) {
    json checks = json::array();
    for (auto& r : cs.checks) checks.push_back(report_to_json(r));
    json gates = json::object();
    for (auto& [k, v] : cs.gates) gates[k] = v;
    return {{"case", to_string(cs.kind)}, {"best_component", cs.best_component}, {"u", number(cs.u)},
            {"v", number(cs.v)},          {"checks", checks},                    {"gates", gates}};
}

/// Keeps at most `limit` trace points, always including the first and last.
inline std::vector<std::pair<long, double>> decimate(const std::vector<std::pair<long, double>>& t, std::size_t limit) {
    if (t.size() <= limit) return t;
    std::vector<std::pair<long, double>> out;
    for (std::size_t i = 0; i < limit; ++i) out.push_back(t[i * (t.size() - 1) / (limit - 1)]);
    return out;
}

inline json search_to_json(const SearchConfig& cfg, const SearchResult& r) {
    json trace = json::array();
    for (auto [e, M] : decimate(r.trace, 1000)) trace.push_back({e, M});
    json checks = json::object();
    for (auto& [k, v] : r.bound_checks) checks[k] = number(v);
    return {{"config",
             {{"n", cfg.n},
              {"q", is_infinite_q(cfg.q) ? json("inf") : json(cfg.q)},
              {"budget", cfg.budget},
              {"seed", cfg.seed},
              {"restarts", cfg.restarts},
              {"init", to_string(cfg.init)}}},
            {"best", polynomial_to_json(r.best_p)},
            {"best_M", r.best_M},
            {"evaluations", r.evaluations},
            {"bound_margins", checks},
            {"trace", trace}};
}

// ---------------------------------------------------------------------------
// Run manifests

struct RunManifest {
    std::string command;
    std::string domain_file;
    json params = json::object();
    std::vector<std::string> outputs;
    json versions = {{"tool", tool_version}, {"format", format_version}};
};

inline json manifest_to_json(const RunManifest& m) {
    return {{"command", m.command}, {"domain_file", m.domain_file}, {"params", m.params}, {"outputs", m.outputs},
            {"versions", m.versions}};
}

inline RunManifest manifest_from_json(const json& j) {
    try {
        RunManifest m;
        m.command = j.at("command").get<std::string>();
        m.domain_file = j.value("domain_file", "");
        m.params = j.value("params", json::object());
        m.outputs = j.value("outputs", std::vector<std::string>{});
        if (j.contains("versions")) m.versions = j.at("versions");
        return m;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed manifest: ") + e.what());
    }
}

/// FNV-1a over the canonical (sorted-key, compact) JSON of the manifest without outputs.
inline std::string manifest_hash(const RunManifest& m) {
    json j = manifest_to_json(m);
    j.erase("outputs");
    std::string s = j.dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline std::string format_q(double q) {
    if (is_infinite_q(q)) return "inf";
    std::ostringstream os;
    os << q;
    return os.str();
}

inline double parse_q(const std::string& s) {
    if (s == "inf" || s == "infinity") return q_inf;
    try {
        std::size_t pos = 0;
        double q = std::stod(s, &pos);
        if (pos != s.size() || !(q >= 1.0)) throw InvalidInput("q must be >= 1 or inf");
        return q;
    } catch (const std::logic_error&) {
        throw InvalidInput("invalid q: " + s);
    }
}

}  // namespace osclab
