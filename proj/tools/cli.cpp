#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "hyp2/hahn_banach.hpp"
#include "hyp2/instance.hpp"
#include "hyp2/sampling.hpp"
#include "support/acceptance.hpp"

namespace hyp2::cli {

namespace {

using Json = nlohmann::json;

// A failed verification; maps to exit code 1.
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::optional<double> tol;
    std::optional<int> samples;
    std::uint64_t seed = 1;
};

// --tol beats HYP2_TOL, which beats the per-command default.
double resolve_tol(const Common& c, double fallback) {
    if (c.tol) return *c.tol;
    if (const char* env = std::getenv("HYP2_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0)) {
            throw Error(ErrorCode::ParseError, std::string("HYP2_TOL is not a positive number: ") + env);
        }
        return v;
    }
    return fallback;
}

Json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

DVector sample_in(const DSubmodule& m, Rng& rng) {
    DVector x = DVector::zero(m.dim());
    std::normal_distribution<double> g;
    for (const auto& b : m.basis1()) x = x + DVector::pure_e1(g(rng) * b);
    for (const auto& b : m.basis2()) x = x + DVector::pure_e2(g(rng) * b);
    return x;
}

double rel_diff(Hyperbolic a, Hyperbolic b) {
    return std::max(std::abs(a.p - b.p) / std::max(1.0, std::abs(b.p)),
                    std::abs(a.q - b.q) / std::max(1.0, std::abs(b.q)));
}

// ---------------------------------------------------------------------------

struct GenArgs {
    std::uint64_t seed = 1;
    int n = 3;
    std::vector<int> dims = {1, 1};
    bool degenerate_z = false;
    std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    if (a.dims.size() != 2) throw Error(ErrorCode::BadDims, "--dims takes two values d1,d2");
    const InstanceFile inst = generate_instance({a.seed, a.n, a.dims[0], a.dims[1], a.degenerate_z});
    if (a.output.empty() || a.output == "-") {
        emit(out, encode(inst));
    } else {
        std::ofstream f(a.output);
        if (!f) throw Error(ErrorCode::ParseError, "cannot write " + a.output);
        emit(f, encode(inst));
    }
    return kExitOk;
}

int cmd_check_axioms(const std::string& path, const Common& c, std::ostream& out) {
    const InstanceFile inst = parse_instance(read_json(path));
    const AxiomCheckOptions opts{c.samples.value_or(1000), c.seed, resolve_tol(c, 1e-9)};
    const AxiomReport r = axiom_check(inst.norm, inst.n, opts);
    Json report = json::encode(r);
    report["tol"] = opts.tol;
    emit(out, report);
    return r.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_norm(const std::string& path, const Common& c, std::ostream& out) {
    const InstanceFile inst = parse_instance(read_json(path));
    const double tol = resolve_tol(c, 1e-9);
    const NormCertificate sigma = norm_spectral(inst.functional, inst.norm);
    const BruteForceResult bf =
        norm_bruteforce(inst.functional, inst.norm, {.budget = c.samples.value_or(100000), .refine_steps = 100, .seed = c.seed});
    const BoundednessResult bounded = is_bounded_check(inst.functional, inst.norm, sigma.value, 2000, c.seed, tol);
    const Hyperbolic domain = norm_on_domain(inst.functional, inst.m, inst.z);

    Hyperbolic gap;
    bool below = true, not_above = true, forms = true;
    for (int l = 0; l < 2; ++l) {
        const double s = sigma.value[l], q = bf.quotient.value[l];
        const double g = s > 0.0 ? (s - q) / s : 0.0;
        (l == 0 ? gap.p : gap.q) = g;
        below = below && q >= 0.98 * s;
        not_above = not_above && q <= s + tol * std::max(1.0, s);
        forms = forms && std::abs(bf.unit_form[l] - q) <= tol * std::max(1.0, q);
    }
    const bool domain_ok = leq(domain, sigma.value, tol * std::max({1.0, sigma.value.p, sigma.value.q}));

    Json report = {{"spectral", json::encode(sigma)},
                   {"bruteforce", json::encode(bf.quotient)},
                   {"unit_form", json::encode(bf.unit_form)},
                   {"accepted_samples", bf.accepted},
                   {"relative_gap", json::encode(gap)},
                   {"bounded", bounded.bounded},
                   {"norm_on_domain", json::encode(domain)},
                   {"tol", tol}};
    report["checks"] = {{"bruteforce_within_2pct", below},
                        {"bruteforce_not_above_spectral", not_above},
                        {"sup_forms_agree", forms},
                        {"bounded_by_spectral", bounded.bounded},
                        {"domain_norm_below_spectral", domain_ok}};
    const bool pass = below && not_above && forms && bounded.bounded && domain_ok;
    report["pass"] = pass;
    emit(out, report);
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_extend(const std::string& path, const Common& c, bool swap, double norm_tol, std::ostream& out) {
    const InstanceFile inst = parse_instance(read_json(path));
    const double tol = resolve_tol(c, 1e-10);
    const ExtensionProblem p = inst.problem(swap);
    const ExtensionTrace tr = full_extend(p);

    Rng rng(c.seed);
    double restriction = 0.0;
    for (int s = 0; s < c.samples.value_or(1000); ++s) {
        const DVector x = sample_in(p.m, rng);
        const Hyperbolic a = random_hyperbolic(rng);
        const Hyperbolic want = swap ? p.f(a * p.z, x) : p.f(x, a * p.z);
        restriction = std::max(restriction, rel_diff(tr.apply(x, p.z, a), want));
    }
    double norm_drift = 0.0;
    for (int l = 0; l < 2; ++l) {
        norm_drift = std::max(norm_drift, std::abs(tr.norm_F[l] - tr.norm_f[l]) / std::max(tr.norm_f[l], 1e-300));
    }
    const bool norm_ok = norm_drift <= norm_tol ||
                         (std::abs(tr.norm_F.p - tr.norm_f.p) <= 1e-12 && std::abs(tr.norm_F.q - tr.norm_f.q) <= 1e-12);
    bool bracket = true;
    for (const auto& st : tr.steps) {
        const double sc = 1e-12 * std::max({1.0, std::abs(st.m0.p), std::abs(st.m0.q), std::abs(st.m.p), std::abs(st.m.q)});
        bracket = bracket && leq(st.m0, st.r, sc) && leq(st.r, st.m, sc);
    }

    Json report = json::encode(tr);
    report["checks"] = {{"restriction", {{"worst", restriction}, {"tol", tol}, {"pass", restriction <= tol}}},
                        {"norm_preserved", {{"worst_relative", norm_drift}, {"tol", norm_tol}, {"pass", norm_ok}}},
                        {"bracket", bracket}};
    const bool pass = restriction <= tol && norm_ok && bracket;
    report["pass"] = pass;
    emit(out, report);
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_corollary(const std::string& path, const Common& c, std::ostream& out) {
    const Json in = read_json(path);
    if (!in.is_object() || !in.contains("x0") || !in.contains("y0")) {
        throw Error(ErrorCode::ParseError, "corollary input needs \"x0\" and \"y0\"");
    }
    const DVector x0 = json::parse_dvector(in["x0"]);
    const DVector y0 = json::parse_dvector(in["y0"]);
    const D2Norm norm = in.contains("norm") ? json::parse_norm(in["norm"]) : D2Norm::gram_det();
    const int n = x0.size();
    if (in.contains("n") && in["n"] != n) throw Error(ErrorCode::DimensionMismatch, "n differs from the length of x0");
    const double tol = resolve_tol(c, 1e-9);

    const CorollaryResult r = corollary_functional(n, x0, y0, norm);
    const bool norm_one = std::abs(r.norm_f.p - 1.0) <= tol && std::abs(r.norm_f.q - 1.0) <= tol;
    const double value_err = rel_diff(r.f_at_pair, r.pair_norm);
    const bool value_ok = value_err <= std::max(tol, 1e-10);

    Json report = {{"f0", json::encode(r.f0)},
                   {"pair_norm", json::encode(r.pair_norm)},
                   {"norm_f0", json::encode(r.norm_f0)},
                   {"f", {{"F", json::encode(r.trace.F)}, {"norm", json::encode(r.norm_f)}}},
                   {"f_at_pair", json::encode(r.f_at_pair)},
                   {"steps", r.trace.steps.size()}};
    report["checks"] = {{"norm_is_one", norm_one}, {"value_at_pair", value_ok}, {"tol", tol}};
    report["pass"] = norm_one && value_ok;
    emit(out, report);
    return norm_one && value_ok ? kExitOk : kExitCheckFailed;
}

int cmd_selftest(const Common& c, int only, std::ostream& out) {
    bool all = true;
    for (int id = 1; id <= acceptance::kCriterionCount; ++id) {
        if (only != 0 && id != only) continue;
        const auto r = acceptance::run_criterion(id, c.seed);
        out << acceptance::format_line(r) << std::endl;
        all = all && r.pass;
    }
    return all ? kExitOk : kExitCheckFailed;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::OptimizationFailure:
        case ErrorCode::AxiomViolation:
            return kExitCheckFailed;
        default:
            return kExitParseError;
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"hyperbolic-valued 2-functionals: norms and norm-preserving extensions", "hyp2"};
    app.require_subcommand(1);

    Common common;
    app.add_option("--tol", common.tol, "tolerance (default: HYP2_TOL, else per command)");
    app.add_option("--samples", common.samples, "sample count or search budget");
    app.add_option("--seed", common.seed, "random seed");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "write a random instance");
    gen_cmd->add_option("--seed", gen.seed);
    gen_cmd->add_option("--n", gen.n, "module dimension (2..8)");
    gen_cmd->add_option("--dims", gen.dims, "component dimensions of M, d1,d2")->delimiter(',')->expected(2);
    gen_cmd->add_flag("--degenerate-z", gen.degenerate_z, "draw z as a zero divisor");
    gen_cmd->add_option("-o,--output", gen.output, "output file (default stdout)");

    std::string path;
    bool swap = false;
    double norm_tol = 1e-5;
    int only = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tol", common.tol);
        sub->add_option("--samples", common.samples);
        sub->add_option("--seed", common.seed);
    };
    auto* axioms_cmd = app.add_subcommand("check-axioms", "check the 2-norm axioms for an instance's norm");
    axioms_cmd->add_option("instance", path)->required();
    add_common(axioms_cmd);
    auto* norm_cmd = app.add_subcommand("norm", "spectral and brute-force functional norms");
    norm_cmd->add_option("instance", path)->required();
    add_common(norm_cmd);
    auto* extend_cmd = app.add_subcommand("extend", "extend f from M x [z] to X x [z]");
    extend_cmd->add_option("instance", path)->required();
    extend_cmd->add_flag("--swap-domain", swap, "treat f as given on [z] x M");
    extend_cmd->add_option("--norm-tol", norm_tol, "relative norm-preservation tolerance");
    add_common(extend_cmd);
    auto* corollary_cmd = app.add_subcommand("corollary", "norm-attaining functional for a pair {x0, y0}");
    corollary_cmd->add_option("input", path)->required();
    add_common(corollary_cmd);
    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");
    selftest_cmd->add_option("--criterion", only, "run one criterion (1..8)")->check(CLI::Range(0, acceptance::kCriterionCount));
    add_common(selftest_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParseError;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, out);
        if (*axioms_cmd) return cmd_check_axioms(path, common, out);
        if (*norm_cmd) return cmd_norm(path, common, out);
        if (*extend_cmd) return cmd_extend(path, common, swap, norm_tol, out);
        if (*corollary_cmd) return cmd_corollary(path, common, out);
        if (*selftest_cmd) return cmd_selftest(common, only, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const nlohmann::json::exception& e) {
        err << "error: ParseError: " << e.what() << '\n';
        return kExitParseError;
    }
    return kExitParseError;
}

}  // namespace hyp2::cli
