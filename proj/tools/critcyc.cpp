// Command-line front end.
//
// Machine-readable output goes to stdout as JSON records, one per line (or
// one JSON array where noted); human-readable summaries go to stderr, so
// pipelines stay clean.  Exit codes: 0 = success, 1 = a verification verdict
// failed (verify / lists --realize / selftest), 2 = usage or domain errors.
//
// Subcommands:
//   pairs     admissible splittings d = a + b and their invariants
//   tau       lattice parameters, sigma matrix and critical value for (a,k,p)
//   family    evaluate a theta family on Z/dZ and emit its values
//   verify    read function values and test criticality
//   lists     known catalogs of critical values, optionally realized
//   theta     evaluate the series, parity pieces, characteristics or phi
//   negsign   negative-sign existence criterion and witness search
//   selftest  run the bundled end-to-end check suite

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "critcyc/critcyc.hpp"

namespace {

using critcyc::cplx;
using critcyc::int64;
using json = nlohmann::json;

struct GlobalOptions {
    critcyc::AppConfig cfg;
    int digits = 15;
};

std::string fmt(const GlobalOptions& g, cplx v) { return critcyc::format_complex(v, g.digits); }
std::string fmt(const GlobalOptions& g, double v) { return critcyc::format_number(v, g.digits); }

json pair_record(int64 d, int64 a) {
    const int64 b = d - a;
    return json{{"type", "pair"},
                {"d", d},
                {"a", a},
                {"b", b},
                {"m0", critcyc::cm_m0(d, a, b)},
                {"n0", critcyc::cm_n0(d, a, b)},
                {"lambda0", critcyc::complex_json(critcyc::lambda_zero(a, b).value())},
                {"lambda0_exact", critcyc::lambda_zero(a, b).str()},
                {"negative_sign", critcyc::negative_sign_exists(a, b)}};
}

int run_pairs(const GlobalOptions& g, int64 d, int64 to) {
    if (d == 0 && to == 0) {
        std::cerr << "pairs: give --d <modulus> or --to <max modulus>\n";
        return 2;
    }
    std::vector<int64> ds;
    if (to != 0)
        for (int64 m = 3; m <= to; m += 2) ds.push_back(m);
    else
        ds.push_back(d);
    int64 total = 0;
    for (int64 m : ds) {
        for (const critcyc::CMPair& pr : critcyc::enumerate_pairs(m)) {
            ++total;
            critcyc::emit_record(std::cout, pair_record(pr.d, pr.a));
            std::cerr << "d=" << pr.d << "  a=" << pr.a << " b=" << pr.b << "  lambda0 = "
                      << fmt(g, critcyc::lambda_zero(pr.a, pr.b).value()) << "  negative sign: "
                      << (critcyc::negative_sign_exists(pr.a, pr.b) ? "yes" : "no") << "\n";
        }
    }
    std::cerr << total << " admissible splitting(s)\n";
    return 0;
}

int run_tau(const GlobalOptions& g, int64 d, int64 a, int64 k, int64 p) {
    const int64 b = d - a;
    const critcyc::CMTau tau = critcyc::associated_tau(d, a, b, k, p);
    const critcyc::SigmaMatrix s = critcyc::sigma_matrix(d, a, b, k, p);
    const critcyc::SurdValue lam = critcyc::critical_value_exact(d, a, b, k, p);
    const json rec{{"type", "tau"},
                   {"d", d},
                   {"a", a},
                   {"b", b},
                   {"k", k},
                   {"p", p},
                   {"n_k", critcyc::cm_nk(d, a, b, k)},
                   {"epsilon", critcyc::sign_epsilon(k, p)},
                   {"tau", critcyc::complex_json(tau.value())},
                   {"tau_exact", tau.str()},
                   {"sigma", json{{"alpha", s.alpha}, {"beta", s.beta}, {"gamma", s.gamma}, {"delta", s.delta}}},
                   {"lambda", critcyc::complex_json(lam.value())},
                   {"lambda_exact", lam.str()}};
    critcyc::emit_record(std::cout, rec);
    std::cerr << "tau = " << tau.str() << " = " << fmt(g, tau.value()) << "\n"
              << "sigma = [[" << s.alpha << ", " << s.beta << "], [" << s.gamma << ", " << s.delta
              << "]]  epsilon = " << critcyc::sign_epsilon(k, p) << "\n"
              << "lambda = " << lam.str() << " = " << fmt(g, lam.value()) << "\n";
    return 0;
}

int run_family(const GlobalOptions& g, int64 d, std::optional<int64> a, int64 k, int64 p,
               std::optional<double> tau_re, std::optional<double> tau_im, cplx z) {
    cplx tau;
    json header{{"type", "family"}, {"d", d}, {"z", critcyc::complex_json(z)}};
    if (a.has_value()) {
        const int64 b = d - *a;
        const critcyc::CMTau ct = critcyc::associated_tau(d, *a, b, k, p);
        tau = ct.value();
        const critcyc::SurdValue lam = critcyc::critical_value_exact(d, *a, b, k, p);
        header["a"] = *a;
        header["k"] = k;
        header["p"] = p;
        header["tau_exact"] = ct.str();
        header["lambda_expected"] = critcyc::complex_json(lam.value());
        header["lambda_exact"] = lam.str();
    } else if (tau_re && tau_im) {
        tau = {*tau_re, *tau_im};
    } else {
        std::cerr << "family: give either --a (with --k, --p) or --tau-re and --tau-im\n";
        return 2;
    }
    header["tau"] = critcyc::complex_json(tau);
    const critcyc::CyclicFunction f = critcyc::critical_family(d, z, tau, g.cfg.theta);
    critcyc::emit_record(std::cout, header);
    for (int64 l = 0; l < d; ++l)
        critcyc::emit_record(std::cout, json{{"type", "value"},
                                             {"k", l},
                                             {"re", f[l].real()},
                                             {"im", f[l].imag()}});
    const cplx lam_hat = critcyc::estimate_lambda(f);
    const critcyc::ResidualReport rep = critcyc::residual_report(f, lam_hat);
    const bool critical = rep.relative <= g.cfg.tolerance;
    critcyc::emit_record(std::cout, json{{"type", "residual"},
                                         {"lambda", critcyc::complex_json(lam_hat)},
                                         {"max_abs", rep.max_abs},
                                         {"relative", rep.relative},
                                         {"critical", critical}});
    std::cerr << "family on Z/" << d << "Z at tau = " << fmt(g, tau) << ", z = " << fmt(g, z)
              << "\nlambda estimate = " << fmt(g, lam_hat) << ", relative residual = "
              << fmt(g, rep.relative) << (critical ? " (critical)" : " (not critical)") << "\n";
    return 0;
}

int run_verify(const GlobalOptions& g, const std::string& input, std::optional<cplx> lambda,
               double tol) {
    critcyc::CyclicFunction f(1);
    if (input == "-") {
        f = critcyc::read_values(std::cin);
    } else {
        std::ifstream is(input);
        if (!is) {
            std::cerr << "verify: cannot open '" << input << "'\n";
            return 2;
        }
        f = critcyc::read_values(is);
    }
    const cplx lam = lambda ? *lambda : critcyc::estimate_lambda(f);
    const critcyc::ResidualReport rep = critcyc::residual_report(f, lam);
    const bool critical = rep.relative <= tol;
    critcyc::emit_record(std::cout, json{{"type", "verdict"},
                                         {"d", f.modulus()},
                                         {"lambda", critcyc::complex_json(lam)},
                                         {"lambda_estimated", !lambda.has_value()},
                                         {"max_abs", rep.max_abs},
                                         {"scale", rep.scale},
                                         {"relative", rep.relative},
                                         {"argmax", rep.argmax},
                                         {"tolerance", tol},
                                         {"critical", critical}});
    std::cerr << "d = " << f.modulus() << ", lambda = " << fmt(g, lam)
              << (lambda ? " (given)" : " (estimated)") << ", relative residual = "
              << fmt(g, rep.relative) << "\n"
              << (critical ? "critical" : "NOT critical") << " at tolerance " << fmt(g, tol)
              << "\n";
    return critical ? 0 : 1;
}

int run_lists(const GlobalOptions& g, int64 d, bool realize) {
    const critcyc::FixtureList list = critcyc::fixture_list(d);
    int64 in_scope = 0;
    for (const auto& e : list.entries)
        if (e.route != critcyc::Route::deferred) ++in_scope;
    critcyc::emit_record(std::cout, json{{"type", "catalog"},
                                         {"d", list.d},
                                         {"complete", list.complete},
                                         {"count", static_cast<int64>(list.entries.size())},
                                         {"realizable", in_scope},
                                         {"deferred", static_cast<int64>(list.entries.size()) - in_scope}});
    std::cerr << "catalog for Z/" << d << "Z: " << list.entries.size() << " value(s)"
              << (list.complete ? " (complete)" : " (known values; list not proved complete)")
              << "\n";
    bool all_ok = true;
    std::optional<critcyc::RealizedList> rl;
    if (realize) rl = critcyc::realize_fixtures(d, g.cfg.theta);
    for (size_t i = 0; i < list.entries.size(); ++i) {
        const critcyc::FixtureEntry& e = list.entries[i];
        json rec{{"type", "fixture"},
                 {"d", d},
                 {"index", static_cast<int64>(i)},
                 {"label", e.label},
                 {"lambda", critcyc::complex_json(e.lambda)},
                 {"route", critcyc::route_name(e.route)},
                 {"params", json::array({e.p1, e.p2, e.p3, e.p4})}};
        std::string note;
        if (rl) {
            const critcyc::RealizedFixture& r = rl->entries[i];
            rec["realized"] = r.pair.has_value();
            if (r.pair) {
                rec["residual"] = r.report.relative;
                rec["lambda_err"] = r.lambda_err;
                const bool ok = r.report.relative <= g.cfg.tolerance && r.lambda_err <= 1e-7;
                if (!ok) all_ok = false;
                note = ok ? "  [ok]" : "  [FAILED]";
            } else {
                note = "  [not built]";
            }
        }
        critcyc::emit_record(std::cout, rec);
        std::cerr << "  " << e.label << "  =  " << fmt(g, e.lambda) << "  ["
                  << critcyc::route_name(e.route) << "]" << note << "\n";
    }
    if (realize && !all_ok) {
        std::cerr << "some catalog entries failed to realize at tolerance "
                  << fmt(g, g.cfg.tolerance) << "\n";
        return 1;
    }
    return 0;
}

int run_theta(const GlobalOptions& g, cplx z, cplx tau, const std::string& parity,
              const std::vector<int>& half, bool want_phi) {
    cplx value;
    std::string kind;
    if (want_phi) {
        value = critcyc::phi(tau, g.cfg.theta);
        kind = "phi";
    } else if (!half.empty()) {
        value = critcyc::theta_half(half[0], half[1], z, tau, g.cfg.theta);
        kind = "half(" + std::to_string(half[0]) + "," + std::to_string(half[1]) + ")";
    } else if (parity == "even") {
        value = critcyc::theta_even(z, tau, g.cfg.theta);
        kind = "even";
    } else if (parity == "odd") {
        value = critcyc::theta_odd(z, tau, g.cfg.theta);
        kind = "odd";
    } else {
        value = critcyc::theta(z, tau, g.cfg.theta);
        kind = "theta";
    }
    critcyc::emit_record(std::cout, json{{"type", "theta"},
                                         {"kind", kind},
                                         {"z", critcyc::complex_json(z)},
                                         {"tau", critcyc::complex_json(tau)},
                                         {"value", critcyc::complex_json(value)},
                                         {"terms", critcyc::theta_terms(z, tau, g.cfg.theta)}});
    std::cerr << kind << "(z = " << fmt(g, z) << ", tau = " << fmt(g, tau) << ") = "
              << fmt(g, value) << "\n";
    return 0;
}

int run_negsign(const GlobalOptions&, int64 d, int64 a, bool search, int64 k_max, int64 p_max) {
    const int64 b = d - a;
    const bool exists = critcyc::negative_sign_exists(a, b);
    json rec{{"type", "negsign"}, {"d", d}, {"a", a}, {"b", b}, {"exists", exists}};
    std::optional<std::pair<int64, int64>> witness;
    if (search) {
        witness = critcyc::search_negative_sign(d, a, b, k_max, p_max);
        if (witness)
            rec["witness"] = json{{"k", witness->first}, {"p", witness->second}};
        else
            rec["witness"] = nullptr;
    }
    const critcyc::SurdValue lam = critcyc::lambda_zero(a, b).negated();
    rec["lambda_negative"] = critcyc::complex_json(lam.value());
    rec["lambda_negative_exact"] = lam.str();
    critcyc::emit_record(std::cout, rec);
    std::cerr << "d = " << d << " = " << a << " + " << b << ": the negative branch " << lam.str()
              << (exists ? " IS attained" : " is NOT attained") << " by the construction\n";
    if (search) {
        if (witness)
            std::cerr << "witness: k = " << witness->first << ", p = " << witness->second
                      << "  (epsilon = " << critcyc::sign_epsilon(witness->first, witness->second)
                      << ")\n";
        else
            std::cerr << "no witness with |k| <= " << k_max << ", p <= " << p_max << "\n";
    }
    return 0;
}

int run_selftest(const GlobalOptions& g, bool full, unsigned seed) {
    critcyc::CheckOptions opt;
    opt.full = full;
    opt.seed = seed;
    opt.theta = g.cfg.theta;
    const std::vector<critcyc::CheckResult> results = critcyc::run_all_checks(opt);
    int failed = 0;
    for (const critcyc::CheckResult& r : results) {
        critcyc::emit_record(std::cout, json{{"type", "check"},
                                             {"id", r.id},
                                             {"name", r.name},
                                             {"passed", r.passed},
                                             {"seconds", r.seconds},
                                             {"detail", r.detail}});
        if (!r.passed) ++failed;
        std::cerr << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " ("
                  << critcyc::format_number(r.seconds, 3) << "s) " << r.detail << "\n";
    }
    critcyc::emit_record(std::cout, json{{"type", "summary"},
                                         {"mode", full ? "full" : "quick"},
                                         {"passed", static_cast<int>(results.size()) - failed},
                                         {"failed", failed}});
    std::cerr << (results.size() - failed) << "/" << results.size() << " checks passed ("
              << (full ? "full" : "quick") << " mode)\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "critical functions of the convolution-square equation on cyclic groups:\n"
        "constructions, catalogs, and the theta machinery behind them"};
    app.require_subcommand(1);
    std::string config_path;
    GlobalOptions g;
    app.add_option("--config", config_path, "JSON configuration file")
        ->check(CLI::ExistingFile);
    app.add_option("--digits", g.digits, "significant digits in human-readable output")
        ->check(CLI::Range(3, 17));

    auto* sub_pairs = app.add_subcommand("pairs", "admissible splittings d = a + b");
    int64 pairs_d = 0, pairs_to = 0;
    sub_pairs->add_option("--d", pairs_d, "one odd modulus");
    sub_pairs->add_option("--to", pairs_to, "sweep every odd modulus 3..max");

    auto* sub_tau = app.add_subcommand("tau", "lattice parameters and critical value");
    int64 tau_d = 0, tau_a = 0, tau_k = 0, tau_p = 1;
    sub_tau->add_option("--d", tau_d, "odd modulus")->required();
    sub_tau->add_option("--a", tau_a, "first summand of the splitting")->required();
    sub_tau->add_option("--k", tau_k, "translate index");
    sub_tau->add_option("--p", tau_p, "divisor of N_k");

    auto* sub_family = app.add_subcommand("family", "evaluate a theta family on Z/dZ");
    int64 fam_d = 0, fam_a = 0, fam_k = 0, fam_p = 1;
    double fam_tau_re = 0.0, fam_tau_im = 0.0, fam_z_re = critcyc::kFamilySample, fam_z_im = 0.0;
    sub_family->add_option("--d", fam_d, "odd modulus")->required();
    auto* fam_a_opt = sub_family->add_option("--a", fam_a, "splitting summand (selects a lattice point)");
    sub_family->add_option("--k", fam_k, "translate index");
    sub_family->add_option("--p", fam_p, "divisor of N_k");
    auto* fam_tr = sub_family->add_option("--tau-re", fam_tau_re, "Re tau (free evaluation)");
    auto* fam_ti = sub_family->add_option("--tau-im", fam_tau_im, "Im tau > 0 (free evaluation)");
    sub_family->add_option("--z-re", fam_z_re, "Re z of the sample point");
    sub_family->add_option("--z-im", fam_z_im, "Im z of the sample point");

    auto* sub_verify = app.add_subcommand("verify", "read values, test criticality");
    std::string verify_input = "-";
    double verify_lam_re = 0.0, verify_lam_im = 0.0, verify_tol = -1.0;
    sub_verify->add_option("input", verify_input, "file of values, or - for stdin");
    auto* v_lr = sub_verify->add_option("--lambda-re", verify_lam_re, "expected Re lambda");
    auto* v_li = sub_verify->add_option("--lambda-im", verify_lam_im, "expected Im lambda");
    sub_verify->add_option("--tolerance", verify_tol, "relative residual tolerance");

    auto* sub_lists = app.add_subcommand("lists", "known catalogs of critical values");
    int64 lists_d = 0;
    bool lists_realize = false;
    sub_lists->add_option("--d", lists_d, "odd modulus with a catalog")->required();
    sub_lists->add_flag("--realize", lists_realize, "build every in-scope entry and measure it");

    auto* sub_theta = app.add_subcommand("theta", "evaluate the series and its relatives");
    double th_tau_re = 0.0, th_tau_im = 0.0, th_z_re = 0.0, th_z_im = 0.0;
    std::string th_parity = "all";
    std::vector<int> th_half;
    bool th_phi = false;
    sub_theta->add_option("--tau-re", th_tau_re, "Re tau")->required();
    sub_theta->add_option("--tau-im", th_tau_im, "Im tau > 0")->required();
    sub_theta->add_option("--z-re", th_z_re, "Re z");
    sub_theta->add_option("--z-im", th_z_im, "Im z");
    sub_theta->add_option("--parity", th_parity, "all, even or odd")
        ->check(CLI::IsMember({"all", "even", "odd"}));
    sub_theta->add_option("--half", th_half, "half characteristics a b (two values in {0,1})")
        ->expected(2);
    sub_theta->add_flag("--phi", th_phi, "evaluate phi(tau) = theta_odd / theta_even at z = 0");

    auto* sub_negsign = app.add_subcommand("negsign", "negative-sign existence and witnesses");
    int64 ns_d = 0, ns_a = 0, ns_b = 0, ns_kmax = -1, ns_pmax = -1;
    bool ns_search = false;
    sub_negsign->add_option("--d", ns_d, "odd modulus (or give --b)");
    sub_negsign->add_option("--a", ns_a, "first summand, a perfect square for a finite answer")
        ->required();
    sub_negsign->add_option("--b", ns_b, "second summand (or give --d)");
    sub_negsign->add_flag("--search", ns_search, "hunt for a witness (k, p)");
    sub_negsign->add_option("--k-max", ns_kmax, "witness search bound on |k|");
    sub_negsign->add_option("--p-max", ns_pmax, "witness search bound on p");

    auto* sub_selftest = app.add_subcommand("selftest", "run the end-to-end check suite");
    bool st_full = false;
    unsigned st_seed = 20260822;
    sub_selftest->add_flag("--full", st_full, "full sweeps (the quick mode trims them)");
    sub_selftest->add_option("--seed", st_seed, "seed for the randomized grids");

    for (CLI::App* s : app.get_subcommands({}))
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) {
            std::ifstream is(config_path);
            if (!is) {
                std::cerr << "cannot open config file '" << config_path << "'\n";
                return 2;
            }
            g.cfg = critcyc::load_config(is);
        }
        if (sub_pairs->parsed()) return run_pairs(g, pairs_d, pairs_to);
        if (sub_tau->parsed()) return run_tau(g, tau_d, tau_a, tau_k, tau_p);
        if (sub_family->parsed()) {
            std::optional<int64> a;
            if (fam_a_opt->count() > 0) a = fam_a;
            std::optional<double> tr, ti;
            if (fam_tr->count() > 0) tr = fam_tau_re;
            if (fam_ti->count() > 0) ti = fam_tau_im;
            return run_family(g, fam_d, a, fam_k, fam_p, tr, ti, {fam_z_re, fam_z_im});
        }
        if (sub_verify->parsed()) {
            std::optional<cplx> lam;
            if (v_lr->count() > 0 || v_li->count() > 0) lam = cplx{verify_lam_re, verify_lam_im};
            return run_verify(g, verify_input, lam,
                              verify_tol > 0.0 ? verify_tol : g.cfg.tolerance);
        }
        if (sub_lists->parsed()) return run_lists(g, lists_d, lists_realize);
        if (sub_theta->parsed()) {
            if (!th_half.empty() && ((th_half[0] != 0 && th_half[0] != 1) ||
                                     (th_half[1] != 0 && th_half[1] != 1))) {
                std::cerr << "theta: --half takes two values in {0, 1}\n";
                return 2;
            }
            return run_theta(g, {th_z_re, th_z_im}, {th_tau_re, th_tau_im}, th_parity, th_half,
                             th_phi);
        }
        if (sub_negsign->parsed()) {
            if (ns_d == 0 && ns_b == 0) {
                std::cerr << "negsign: give --d or --b\n";
                return 2;
            }
            if (ns_d == 0) ns_d = ns_a + ns_b;
            if (ns_b != 0 && ns_a + ns_b != ns_d) {
                std::cerr << "negsign: a + b must equal d\n";
                return 2;
            }
            return run_negsign(g, ns_d, ns_a, ns_search,
                               ns_kmax > 0 ? ns_kmax : g.cfg.k_max,
                               ns_pmax > 0 ? ns_pmax : g.cfg.p_max);
        }
        if (sub_selftest->parsed()) return run_selftest(g, st_full, st_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "no subcommand given\n";
    return 2;
}
