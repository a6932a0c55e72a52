#include "osclab/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "osclab/io.hpp"

namespace fs = std::filesystem;

namespace osclab {
namespace {

struct Options {
    std::string domain;
    std::string out_dir;
    std::string format = "json";
    std::string q = "2";
    std::string audit_id;
    std::string init = "center";
    std::string poly;
    std::vector<std::string> manifests;
    int n = 0;
    int trials = 100;
    int fan = 8;
    int restarts = 4;
    long budget = 10000;
    std::uint64_t seed = 1;
    double r = 0.0;
    double theta = 0.0;
    bool cluster = false;
};

std::vector<double> parse_q_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_q(item));
    if (out.empty()) throw InvalidInput("empty q list");
    return out;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw InvalidInput("cannot write " + path.string());
    f << text;
}

/// Writes the manifest next to the outputs and returns its hash.
std::string finish_manifest(RunManifest& m, const Options& o, const std::vector<std::string>& outputs) {
    m.domain_file = o.domain;
    m.outputs = outputs;
    std::string hash = manifest_hash(m);
    if (!o.out_dir.empty()) {
        fs::create_directories(o.out_dir);
        json j = manifest_to_json(m);
        j["hash"] = hash;
        write_file(fs::path(o.out_dir) / "manifest.json", j.dump(2) + "\n");
    }
    return hash;
}

int cmd_geometry(const Options& o, std::ostream& out) {
    auto k = read_domain(o.domain);
    auto fek = transfinite_diameter_estimate(k, 32);
    json vertices = json::array();
    if (!k.is_disk())
        for (std::size_t i = 0; i < k.vertex_count(); ++i) {
            auto b = k.boundary_point(k.vertex_s()[i]);
            vertices.push_back({{"index", i}, {"s", b.s}, {"z", to_json(b.z)}, {"omega", b.omega}});
        }
    json rep = {{"kind", k.is_disk() ? "disk" : "polygon"},
                {"d", k.diameter()},
                {"w", k.width()},
                {"L", k.perimeter()},
                {"h", depth(k)},
                {"transfinite", {{"lower", fek.lower}, {"upper", fek.upper}, {"fekete", fek.fekete}}},
                {"vertices", vertices}};
    if (o.format == "csv") {
        out << "index,s,x,y,omega\n";
        for (auto& v : vertices)
            out << v["index"] << ',' << v["s"] << ',' << v["z"][0] << ',' << v["z"][1] << ',' << v["omega"] << '\n';
    } else {
        out << rep.dump(2) << '\n';
    }
    if (!o.out_dir.empty()) {
        RunManifest m;
        m.command = "geometry";
        std::string hash = finish_manifest(m, o, {"geometry.json"});
        rep["manifest"] = hash;
        write_file(fs::path(o.out_dir) / "geometry.json", rep.dump(2) + "\n");
    }
    return exit_ok;
}

int cmd_audit(const Options& o, std::ostream& out, std::ostream& err) {
    BatchParams bp;
    if (!o.domain.empty()) bp.domain = read_domain(o.domain);
    bp.trials = o.trials;
    bp.seed = o.seed;
    bp.n = o.n;
    bp.q = parse_q_list(o.q);
    bp.fan = o.fan;
    bp.cluster_near_corner = o.cluster;
    auto results = run_audit_batch(o.audit_id, bp);
    auto summary = summarize(results);

    RunManifest m;
    m.command = "audit";
    m.params = {{"audit", o.audit_id}, {"trials", o.trials}, {"seed", o.seed}, {"n", o.n},
                {"q", o.q},            {"fan", o.fan},       {"cluster", o.cluster}};
    std::string file = "audit_" + o.audit_id + (o.format == "csv" ? ".csv" : ".jsonl");
    std::string hash = finish_manifest(m, o, {file});
    std::ostringstream body;
    if (o.format == "csv") {
        body << "# manifest " << hash << "\ntrial,audit_id,verdict,lhs,rhs,margin,note\n";
        for (auto& t : results)
            for (auto& r : t.reports)
                body << t.trial << ',' << r.audit_id << ',' << to_string(r.verdict) << ',' << std::setprecision(17)
                     << r.lhs << ',' << r.rhs << ',' << r.margin << ",\"" << r.note << "\"\n";
    } else {
        for (auto& t : results)
            for (auto& r : t.reports) {
                auto j = report_to_json(r);
                j["manifest"] = hash;
                body << j.dump() << '\n';
            }
    }
    if (o.out_dir.empty()) {
        out << body.str();
    } else {
        write_file(fs::path(o.out_dir) / file, body.str());
    }
    json s = summary_to_json(summary);
    s["audit_id"] = o.audit_id;
    err << s.dump() << '\n';
    return summary.fail > 0 ? exit_audit_failure : exit_ok;
}

int cmd_search(const Options& o, std::ostream& out) {
    auto k = read_domain(o.domain);
    SearchConfig cfg;
    cfg.n = o.n;
    cfg.q = parse_q(o.q);
    cfg.budget = o.budget;
    cfg.seed = o.seed;
    cfg.restarts = o.restarts;
    cfg.init = parse_init(o.init);
    if (cfg.init == InitStrategy::user) {
        if (o.poly.empty()) throw InvalidInput("--init user needs --poly");
        auto p = polynomial_from_json(read_json_file(o.poly));
        cfg.user_roots.assign(p.roots().begin(), p.roots().end());
    }
    auto res = minimize_oscillation(k, cfg);
    auto upper = upper_witness_check(k, cfg.n, cfg.q, res);
    auto floor = floor_consistency_check(k, cfg.n, cfg.q, res);

    RunManifest m;
    m.command = "search";
    m.params = {{"n", cfg.n},       {"q", o.q},           {"budget", cfg.budget},
                {"seed", cfg.seed}, {"restarts", o.restarts}, {"init", o.init}};
    std::string hash = finish_manifest(m, o, {"search.json", "trace.csv"});
    json j = search_to_json(cfg, res);
    j["upper_witness"] = report_to_json(upper);
    j["floor"] = report_to_json(floor);
    j["manifest"] = hash;
    if (!o.out_dir.empty()) {
        write_file(fs::path(o.out_dir) / "search.json", j.dump(2) + "\n");
        std::ostringstream csv;
        csv << "# manifest " << hash << "\nevaluation,best_M\n" << std::setprecision(17);
        for (auto [e, M] : decimate(res.trace, 1000)) csv << e << ',' << M << '\n';
        write_file(fs::path(o.out_dir) / "trace.csv", csv.str());
    }
    out << std::setprecision(12) << "best_M " << res.best_M << "\nupper_15n_over_d_margin " << upper.margin
        << "\nnlogn_floor_margin " << (floor.applicable ? floor.margin : std::nan("")) << '\n';
    if (upper.failed()) out << upper.note << '\n';
    return search_exit_code(upper);
}

int cmd_covering(const Options& o, std::ostream& out, std::ostream& err) {
    auto k = read_domain(o.domain);
    double r = o.r;
    if (r <= 0 && o.n >= 2) r = r_schedule(o.n, k);
    if (!(r > 0)) throw InvalidInput("covering needs --r > 0 or --n >= 2");
    CoveringOptions opt;
    opt.fan = o.fan;
    if (o.theta > 0) opt.theta = o.theta;
    Covering cov;
    try {
        cov = build_covering(k, r, opt);
    } catch (const NoCutPoint& e) {
        double suggest = max_r_with_cut(k, r * 1e-6, r, opt);
        err << "NoCutPoint: " << e.what() << "; largest r with a cut point is about " << suggest << '\n';
        return exit_covering_failure;
    } catch (const FamilyTooLarge& e) {
        err << "FamilyTooLarge: " << e.what() << '\n';
        return exit_covering_failure;
    }
    RunManifest m;
    m.command = "covering";
    m.params = {{"r", r}, {"theta", cov.theta}, {"n", o.n}, {"fan", o.fan}};
    std::string hash = finish_manifest(m, o, {"covering.json"});
    json j = covering_to_json(cov);
    j["manifest"] = hash;
    if (!o.poly.empty()) {
        auto p = polynomial_from_json(read_json_file(o.poly));
        j["case_split"] = case_split_to_json(case_split(p, k, parse_q(o.q), cov));
    }
    if (!o.out_dir.empty()) {
        write_file(fs::path(o.out_dir) / "covering.json", j.dump(2) + "\n");
    }
    out << std::setprecision(12) << "k0 " << cov.k0() << "\nmeasure " << cov.measure << "\nmeasure_bound_margin "
        << 48 * r * k.diameter() / k.width() - cov.measure << "\nverification_exceptions "
        << cov.verification_exceptions << "\ninvariants " << (cov.invariants_hold() ? "ok" : "violated") << '\n';
    return cov.invariants_hold() ? exit_ok : exit_covering_failure;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.manifests.empty()) throw InvalidInput("table needs at least one manifest");
    struct Row {
        std::string domain;
        int n;
        std::string q;
        double best_M, d, w;
        bool disk;
    };
    std::vector<Row> rows;
    for (auto& path : o.manifests) {
        auto m = manifest_from_json(read_json_file(path));
        if (m.command != "search") throw InvalidInput(path + ": not a search manifest");
        auto k = read_domain(m.domain_file);
        auto res = read_json_file((fs::path(path).parent_path() / "search.json").string());
        rows.push_back({m.domain_file, m.params.at("n").get<int>(), m.params.at("q").get<std::string>(),
                        res.at("best_M").get<double>(), k.diameter(), k.width(), k.is_disk()});
    }
    std::ostringstream csv;
    csv << std::setprecision(12) << "domain,n,q,best_M,half_n,upper_15n_over_d,corollary_001,nlogn_floor\n";
    for (auto& r : rows) {
        csv << r.domain << ',' << r.n << ',' << r.q << ',' << r.best_M << ',';
        if (r.disk) csv << r.n / 2.0;
        csv << ',' << 15 * r.n / r.d << ',' << 0.001 * r.w / (r.d * r.d) * r.n << ',';
        if (r.n >= 2) csv << r.w * r.w / (240000 * r.d * r.d * r.d) * r.n / std::log(r.n);
        csv << '\n';
    }
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].domain == rows[i - 1].domain && rows[i].q == rows[i - 1].q && rows[i].n > rows[i - 1].n &&
            rows[i].best_M < rows[i - 1].best_M)
            err << "warning: best_M decreases from n=" << rows[i - 1].n << " to n=" << rows[i].n << " on "
                << rows[i].domain << '\n';
    if (o.out_dir.empty()) {
        out << csv.str();
    } else {
        write_file(fs::path(o.out_dir) / "table.csv", csv.str());
    }
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical lab for converse Markov inequalities on convex domains", "osclab"};
    app.require_subcommand(1);
    Options o;
    auto domain_opt = [&](CLI::App* c, bool required) {
        auto opt = c->add_option("--domain", o.domain, "domain JSON file");
        if (required) opt->required();
    };
    auto* geo = app.add_subcommand("geometry", "diameter, width, perimeter, depth and vertex table");
    domain_opt(geo, true);
    auto* aud = app.add_subcommand("audit", "run an audit batch and stream JSON-lines reports");
    domain_opt(aud, false);
    aud->add_option("--id", o.audit_id, "audit identifier")->required()->check(CLI::IsMember(audit_ids()));
    aud->add_option("--trials", o.trials)->check(CLI::NonNegativeNumber);
    aud->add_option("--fan", o.fan, "supporting directions per vertex")->check(CLI::PositiveNumber);
    aud->add_flag("--cluster", o.cluster, "two-point trials with more than n/2 roots near the tangent corner");
    auto* sea = app.add_subcommand("search", "minimize the inverse Markov factor over root sets");
    domain_opt(sea, true);
    sea->add_option("--budget", o.budget);
    sea->add_option("--restarts", o.restarts)->check(CLI::PositiveNumber);
    sea->add_option("--init", o.init, "boundary-uniform|interior-uniform|corner-clustered|center|user");
    sea->add_option("--poly", o.poly, "polynomial JSON for --init user");
    auto* cov = app.add_subcommand("covering", "build the covering of non-good boundary points");
    domain_opt(cov, true);
    cov->add_option("--r", o.r);
    cov->add_option("--theta", o.theta);
    cov->add_option("--fan", o.fan)->check(CLI::PositiveNumber);
    cov->add_option("--poly", o.poly, "polynomial JSON; adds the case split");
    auto* tab = app.add_subcommand("table", "aggregate search manifests into a CSV table");
    tab->add_option("--manifest", o.manifests, "search manifest.json files");
    for (auto* c : {geo, aud, sea, cov, tab}) {
        c->add_option("--out", o.out_dir, "output directory");
        c->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
    }
    for (auto* c : {aud, sea, cov}) {
        c->add_option("--n", o.n, "degree");
        c->add_option("--q", o.q, "exponent >= 1 or inf (audit: comma list)");
        c->add_option("--seed", o.seed);
    }
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_input_error;
    }
    try {
        if (geo->parsed()) return cmd_geometry(o, out);
        if (aud->parsed()) return cmd_audit(o, out, err);
        if (sea->parsed()) {
            if (o.n < 1) throw InvalidInput("search needs --n >= 1");
            return cmd_search(o, out);
        }
        if (cov->parsed()) return cmd_covering(o, out, err);
        if (tab->parsed()) return cmd_table(o, out, err);
    } catch (const InvalidDomain& e) {
        err << "invalid domain: " << e.what() << '\n';
        return exit_input_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_input_error;
}

}  // namespace osclab
