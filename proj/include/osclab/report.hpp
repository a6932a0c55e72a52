#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace osclab {

enum class Verdict { pass, fail, not_applicable, excluded };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::not_applicable: return "not_applicable";
        case Verdict::excluded: return "excluded";
    }
    return "?";
}

/// One inequality check: pass iff lhs - rhs >= -tol.
struct AuditReport {
    std::string audit_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double tol = 0.0;
    bool applicable = true;
    Verdict verdict = Verdict::pass;
    std::string note;
    std::map<std::string, double> detail;

    bool passed() const { return verdict == Verdict::pass; }
    bool failed() const { return verdict == Verdict::fail; }
};

inline constexpr double audit_rel_tol = 1e-9;

inline AuditReport make_report(std::string id, double lhs, double rhs, std::map<std::string, double> detail = {}) {
    AuditReport r;
    r.audit_id = std::move(id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = lhs - rhs;
    r.tol = audit_rel_tol * (std::abs(lhs) + std::abs(rhs));
    r.verdict = r.margin >= -r.tol ? Verdict::pass : Verdict::fail;
    r.detail = std::move(detail);
    return r;
}

inline AuditReport not_applicable(std::string id, std::string why, std::map<std::string, double> detail = {}) {
    AuditReport r;
    r.audit_id = std::move(id);
    r.applicable = false;
    r.verdict = Verdict::not_applicable;
    r.note = std::move(why);
    r.detail = std::move(detail);
    return r;
}

inline AuditReport excluded(std::string id, std::string why) {
    AuditReport r;
    r.audit_id = std::move(id);
    r.applicable = false;
    r.verdict = Verdict::excluded;
    r.note = std::move(why);
    return r;
}

/// Keep the report with the smallest relative margin; verdicts combine as fail > pass.
inline AuditReport worst_of(std::string id, const std::vector<AuditReport>& parts) {
    const AuditReport* worst = nullptr;
    auto rel = [](const AuditReport& r) { return r.margin / std::max(1e-300, std::abs(r.lhs) + std::abs(r.rhs)); };
    for (auto& p : parts) {
        if (!p.applicable) continue;
        if (!worst || (p.failed() && !worst->failed()) || (p.failed() == worst->failed() && rel(p) < rel(*worst)))
            worst = &p;
    }
    if (!worst) {
        AuditReport r = parts.empty() ? not_applicable(id, "no applicable checks") : parts.front();
        r.audit_id = std::move(id);
        return r;
    }
    AuditReport out = *worst;
    for (auto& p : parts) {
        if (!p.applicable) continue;
        out.detail[p.audit_id + ".margin"] = p.margin;
    }
    out.audit_id = std::move(id);
    return out;
}

}  // namespace osclab
