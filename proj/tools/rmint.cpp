// rmint: certification and search toolkit for rank-metric intersecting codes.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rmint/code_file.hpp"
#include "rmint/report.hpp"
#include "rmint/verify.hpp"

namespace {

using namespace rmint;

struct Common {
    unsigned threads = 1;
    std::string report_path;
    Caps caps;
};

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--threads", common.threads, "worker threads (deterministic output regardless)");
    cmd->add_option("--report", common.report_path, "write the JSON report to this path");
    cmd->add_option("--cap-table", common.caps.table, "largest table-backed field");
    cmd->add_option("--cap-enum", common.caps.enumeration, "vector enumeration cap");
    cmd->add_option("--cap-sweep", common.caps.sweep, "point/hyperplane sweep cap");
    cmd->add_option("--cap-pairs", common.caps.pairs, "pair sweep cap");
}

void emit(const Common& common, Json& report) {
    if (!common.report_path.empty()) {
        std::ofstream out(common.report_path);
        out << render_report(report);
    }
}

std::pair<FieldCtxPtr, RankCode> load(const std::string& path, Json& report) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), Errc::validation_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    attach_input(report, path, ss.str());
    auto data = parse_code_file_text(ss.str());
    return build_code(data);
}

std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint64_t q) {
    require(is_prime_power(q), Errc::precondition_violated, "q must be a prime power");
    for (std::uint64_t p = 2; p <= q; ++p) {
        if (q % p) continue;
        std::uint32_t e = 0;
        std::uint64_t v = q;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        return {static_cast<std::uint32_t>(p), e};
    }
    fail(Errc::precondition_violated, "unreachable");
}

int run(int argc, char** argv) {
    CLI::App app{"rank-metric intersecting code toolkit"};
    app.require_subcommand(1);
    std::string full_command;
    for (int i = 0; i < argc; ++i) full_command += std::string(i ? " " : "") + argv[i];

    // ---- analyze ----
    auto* analyze = app.add_subcommand("analyze", "n, k, d, nondegeneracy and weight distribution");
    Common an_common;
    std::string an_file;
    analyze->add_option("file", an_file, "code file")->required();
    add_common(analyze, an_common);

    // ---- certify ----
    auto* certify = app.add_subcommand("certify", "certify a code property");
    Common ce_common;
    std::string ce_property, ce_file, ce_method = "both";
    certify->add_option("property", ce_property, "property to certify (intersecting)")->required();
    certify->add_option("file", ce_file, "code file")->required();
    certify->add_option("--method", ce_method, "definitional | geometric | both");
    add_common(certify, ce_common);

    // ---- dual ----
    auto* dual = app.add_subcommand("dual", "trace-dual of the associated system");
    Common du_common;
    std::string du_file;
    dual->add_option("file", du_file, "code file")->required();
    add_common(dual, du_common);

    // ---- evasive ----
    auto* evasive_cmd = app.add_subcommand("evasive", "(h, r)-evasiveness certificate for the system");
    evasive_cmd->set_help_flag("--help", "print help"); // frees -h for the spec's --h flag
    Common ev_common;
    std::string ev_file;
    std::uint32_t ev_h = 1;
    std::uint64_t ev_r = 1;
    bool ev_dual = false;
    evasive_cmd->add_option("file", ev_file, "code file")->required();
    evasive_cmd->add_option("--h", ev_h, "subspace dimension h")->required();
    evasive_cmd->add_option("--r", ev_r, "weight cap r")->required();
    evasive_cmd->add_flag("--dual", ev_dual, "certify the trace-dual system instead");
    add_common(evasive_cmd, ev_common);

    // ---- linset ----
    auto* linset = app.add_subcommand("linset", "linear-set statistics of the system");
    Common ls_common;
    std::string ls_file;
    bool ls_lines = false;
    linset->add_option("file", ls_file, "code file")->required();
    linset->add_flag("--lines", ls_lines, "also sweep lines (k = 3)");
    add_common(linset, ls_common);

    // ---- tau-solve ----
    auto* tau = app.add_subcommand("tau-solve", "exact tau-profile solve");
    Common ta_common;
    std::uint64_t ta_q = 2;
    std::uint32_t ta_m = 5;
    std::string ta_card, ta_support;
    std::vector<std::string> ta_fixed;
    tau->add_option("--q", ta_q, "field size q")->required();
    tau->add_option("--m", ta_m, "exponent m (lines counted in PG(2, q^m))")->required();
    tau->add_option("--card", ta_card, "|L_U|")->required();
    tau->add_option("--support", ta_support, "comma-separated intersection sizes")->required();
    tau->add_option("--fix", ta_fixed, "SIZE=VALUE assignments (repeatable)");
    add_common(tau, ta_common);

    // ---- bounds ----
    auto* bounds_cmd = app.add_subcommand("bounds", "parameter bounds and existence classification");
    Common bo_common;
    std::uint64_t bo_q = 2;
    std::uint32_t bo_m = 6, bo_k = 3;
    std::int64_t bo_n = -1;
    bounds_cmd->add_option("--q", bo_q)->required();
    bounds_cmd->add_option("--m", bo_m)->required();
    bounds_cmd->add_option("--k", bo_k)->required();
    bounds_cmd->add_option("--n", bo_n, "classify a single length (default: table over n)");
    add_common(bounds_cmd, bo_common);

    // ---- search ----
    auto* search_cmd = app.add_subcommand("search", "seeded randomized search");
    Common se_common;
    std::string se_kind, se_strategy = "uniform", se_archive;
    std::uint64_t se_q = 2, se_budget = 1000000, se_seed = 0;
    std::uint32_t se_m = 6, se_k = 3, se_n = 0;
    std::size_t se_dim = 0;
    bool se_override = false;
    search_cmd->add_option("--kind", se_kind, "scattered | intersecting")->required();
    search_cmd->add_option("--q", se_q)->required();
    search_cmd->add_option("--m", se_m)->required();
    search_cmd->add_option("--k", se_k)->required();
    search_cmd->add_option("--n", se_n, "code length (intersecting)");
    search_cmd->add_option("--dim", se_dim, "subspace dimension (scattered)");
    search_cmd->add_option("--budget", se_budget);
    search_cmd->add_option("--seed", se_seed);
    search_cmd->add_option("--strategy", se_strategy, "uniform | hill_climb");
    search_cmd->add_flag("--override-notexists", se_override, "run even when provably non-existent");
    search_cmd->add_option("--archive", se_archive, "certificate archive directory");
    add_common(search_cmd, se_common);

    // ---- puncture-scan ----
    auto* puncture = app.add_subcommand("puncture-scan", "exhaustive codimension-1 puncture scan");
    Common pu_common;
    std::string pu_file, pu_archive;
    puncture->add_option("file", pu_file, "code file")->required();
    puncture->add_option("--archive", pu_archive, "certificate archive directory");
    add_common(puncture, pu_common);

    // ---- verify-paper ----
    auto* verify_cmd = app.add_subcommand("verify-paper", "run the full verification suite");
    Common ve_common;
    std::string ve_file, ve_archive;
    verify_cmd->add_option("--code-file", ve_file, "cross-check this golden code file");
    verify_cmd->add_option("--archive", ve_archive, "certificate archive directory");
    add_common(verify_cmd, ve_common);

    CLI11_PARSE(app, argc, argv);

    if (*analyze) {
        Json report = make_report(full_command);
        auto [ctx, code] = load(an_file, report);
        report["params"] = {{"q", ctx->q()}, {"m", ctx->m()}, {"n", code.n()}, {"k", code.k()}};
        bool nondeg = is_nondegenerate(code);
        report["nondegenerate"] = nondeg;
        if (nondeg) {
            auto dist = weight_distribution(code, an_common.caps, an_common.threads);
            Json dj = Json::object();
            for (auto [w, c] : dist) dj[std::to_string(w)] = c;
            report["weight_distribution"] = dj;
            report["d"] = dist.begin()->first;
            std::cout << "[" << code.n() << "," << code.k() << "," << dist.begin()->first << "]_{"
                      << ctx->qm() << "/" << ctx->q() << "}  nondegenerate\n";
            for (auto [w, c] : dist) std::cout << "  weight " << w << ": " << c << " classes\n";
        } else {
            std::cout << "degenerate code (columns are F_q-dependent)\n";
        }
        emit(an_common, report);
        return 0;
    }

    if (*certify) {
        require(ce_property == "intersecting", Errc::precondition_violated,
                "only 'intersecting' certification is available");
        Json report = make_report(full_command);
        auto [ctx, code] = load(ce_file, report);
        bool run_def = ce_method == "definitional" || ce_method == "both";
        bool run_geo = ce_method == "geometric" || ce_method == "both";
        require(run_def || run_geo, Errc::precondition_violated, "unknown method '" + ce_method + "'");
        std::optional<IntersectingResult> def, geo;
        if (run_def) {
            def = is_intersecting_definitional(code, ce_common.caps, ce_common.threads);
            report["definitional"] = to_json(*ctx, *def);
            std::cout << "definitional: " << (def->intersecting ? "intersecting" : "NOT intersecting")
                      << " (" << def->pairs_swept << " pairs)\n";
        }
        if (run_geo) {
            geo = is_intersecting_geometric(code, ce_common.caps, ce_common.threads);
            report["geometric"] = to_json(*ctx, *geo);
            std::cout << "geometric:    " << (geo->intersecting ? "intersecting" : "NOT intersecting")
                      << " (" << geo->pairs_swept << " pairs)\n";
        }
        if (def && geo && def->intersecting != geo->intersecting) {
            // the project's most important tripwire
            std::cerr << "TRIPWIRE: definitional and geometric certifiers disagree\n";
            emit(ce_common, report);
            return 4;
        }
        emit(ce_common, report);
        return 0;
    }

    if (*dual) {
        Json report = make_report(full_command);
        auto [ctx, code] = load(du_file, report);
        QSystem s = QSystem::from_code(code);
        auto duality = DualityCtx::make(ctx, s.k());
        auto dual_flat = perp_trace(duality, s.flat());
        report["system"] = to_json(s.flat());
        report["dual"] = to_json(dual_flat);
        std::cout << "dim U = " << s.flat().dim() << ", dim U-dual = " << dual_flat.dim() << " (ambient "
                  << dual_flat.ambient() << ")\n";
        emit(du_common, report);
        return 0;
    }

    if (*evasive_cmd) {
        Json report = make_report(full_command);
        auto [ctx, code] = load(ev_file, report);
        QSystem s = QSystem::from_code(code);
        if (ev_dual) {
            auto duality = DualityCtx::make(ctx, s.k());
            s = QSystem::from_subspace(ctx, s.k(), perp_trace(duality, s.flat()));
        }
        auto cert = is_evasive(s, {ev_h, ev_r}, ev_common.caps, ev_common.threads);
        report["evasive"] = to_json(*ctx, cert);
        report["params"] = {{"h", ev_h}, {"r", ev_r}, {"dual", ev_dual}};
        std::cout << "(" << ev_h << "," << ev_r << ")-evasive: " << (cert.pass ? "PASS" : "FAIL") << " ("
                  << cert.swept << " subspaces)\n";
        emit(ev_common, report);
        return 0;
    }

    if (*linset) {
        Json report = make_report(full_command);
        auto [ctx, code] = load(ls_file, report);
        QSystem s = QSystem::from_code(code);
        LinearSetStats st = ls_lines ? line_profile(s, ls_common.caps, ls_common.threads)
                                     : weight_spectrum(s, ls_common.caps);
        report["linear_set"] = to_json(st);
        std::cout << "rank " << st.rank << ", |L_U| = " << st.cardinality << "\n";
        for (auto [w, c] : st.points) std::cout << "  N_" << w << " = " << c << "\n";
        if (st.has_tau)
            for (auto [j, c] : st.tau) std::cout << "  tau_" << j << " = " << c << "\n";
        emit(ls_common, report);
        return 0;
    }

    if (*tau) {
        Json report = make_report(full_command);
        std::vector<std::uint64_t> support;
        {
            std::stringstream ss(ta_support);
            std::string item;
            while (std::getline(ss, item, ',')) support.push_back(std::stoull(item));
        }
        std::map<std::uint64_t, BigInt> fixed;
        for (const auto& f : ta_fixed) {
            auto eq = f.find('=');
            require(eq != std::string::npos, Errc::precondition_violated, "--fix expects SIZE=VALUE");
            fixed[std::stoull(f.substr(0, eq))] = BigInt(f.substr(eq + 1));
        }
        auto prof = solve_tau_profile(ta_q, ta_m, BigInt(ta_card), support, fixed);
        report["tau_profile"] = to_json(prof);
        for (const auto& [sz, v] : prof.values) {
            std::cout << "tau_" << sz << " = " << numerator(v).str();
            if (denominator(v) != 1) std::cout << "/" << denominator(v).str();
            std::cout << "\n";
        }
        if (prof.negative) std::cout << "FLAG: negative count\n";
        if (prof.non_integral) std::cout << "FLAG: non-integral count\n";
        emit(ta_common, report);
        return 0;
    }

    if (*bounds_cmd) {
        Json report = make_report(full_command);
        Json rows = Json::array();
        auto emit_row = [&](std::uint32_t n) {
            auto v = classify({bo_q, bo_m, n, bo_k, std::nullopt});
            Json row{{"n", n}, {"verdict", to_json(v)}};
            rows.push_back(row);
            std::cout << "n = " << n << ": " << to_string(v.status) << "  [";
            for (std::size_t i = 0; i < v.reasons.size(); ++i) std::cout << (i ? ", " : "") << v.reasons[i];
            std::cout << "]\n";
        };
        if (bo_n >= 0) {
            emit_row(static_cast<std::uint32_t>(bo_n));
        } else {
            for (std::uint32_t n = 1; n <= 2 * bo_m; ++n) emit_row(n);
        }
        report["params"] = {{"q", bo_q}, {"m", bo_m}, {"k", bo_k}};
        report["classification"] = rows;
        if (bo_k >= 3) {
            report["bounds"] = {{"length", {length_bounds(bo_k, bo_m).first, length_bounds(bo_k, bo_m).second}},
                                {"window", {existence_window(bo_k, bo_m).first, existence_window(bo_k, bo_m).second}},
                                {"refined_length", refined_length_bound(bo_k, bo_m)}};
        }
        emit(bo_common, report);
        return 0;
    }

    if (*search_cmd) {
        Json report = make_report(full_command);
        auto [p, e] = factor_prime_power(se_q);
        FieldSpec spec;
        spec.p = p;
        spec.e = e;
        spec.m = se_m;
        auto ctx = FieldCtx::build(spec);
        SearchResult res;
        if (se_kind == "scattered") {
            require(se_dim > 0, Errc::precondition_violated, "--dim required for scattered search");
            auto strat = se_strategy == "hill_climb" ? SearchStrategy::hill_climb : SearchStrategy::uniform;
            res = search_scattered(ctx, se_k, se_dim, se_budget, se_seed, strat, se_common.caps,
                                   se_common.threads);
        } else if (se_kind == "intersecting") {
            require(se_n > 0, Errc::precondition_violated, "--n required for intersecting search");
            auto strat = se_strategy == "hill_climb" ? SearchStrategy::hill_climb : SearchStrategy::uniform;
            res = search_intersecting(ctx, se_k, se_n, se_budget, se_seed, strat, se_override,
                                      se_common.caps, se_common.threads);
        } else {
            fail(Errc::precondition_violated, "unknown search kind '" + se_kind + "'");
        }
        report["search"] = to_json(*ctx, res);
        report["params"] = {{"kind", se_kind}, {"q", se_q},     {"m", se_m},
                            {"k", se_k},      {"seed", se_seed}, {"budget", se_budget}};
        std::cout << (res.found ? "FOUND" : "not found") << " after " << res.trials_used << " trials\n";
        if (res.found && !se_archive.empty() && res.subspace) {
            std::ofstream out(se_archive + "/" + digest_hex(subspace_digest(*res.subspace)) + ".json");
            out << render_report(report["search"]);
        }
        emit(se_common, report);
        return 0;
    }

    if (*puncture) {
        Json report = make_report(full_command);
        auto [ctx, code] = load(pu_file, report);
        auto res = puncture_scan(code, pu_common.caps, pu_common.threads);
        report["puncture_scan"] = to_json(*ctx, res);
        std::cout << res.enumerated << " candidates, " << res.intersecting_hits
                  << " intersecting punctures\n";
        if (res.found && !pu_archive.empty()) {
            std::ofstream out(pu_archive + "/puncture_hits.json");
            out << render_report(report["puncture_scan"]);
        }
        emit(pu_common, report);
        return 0;
    }

    if (*verify_cmd) {
        VerifyOptions opts;
        if (!ve_file.empty()) opts.code_file_path = ve_file;
        if (!ve_archive.empty()) opts.archive_dir = ve_archive;
        opts.threads = ve_common.threads;
        auto summary = run_verification(opts);
        for (const auto& c : summary.criteria)
            std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << "  ("
                      << static_cast<std::uint64_t>(c.wall_ms) << " ms)\n";
        std::cout << (summary.all_pass ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED") << "\n";
        Json report = summary.report;
        report["command"] = full_command;
        emit(ve_common, report);
        return summary.all_pass ? 0 : 1;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const rmint::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_cap() ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
