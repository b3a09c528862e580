#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "hyp2/hahn_banach.hpp"
#include "oracles.hpp"

namespace hyp2::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

// Accumulates the worst value of a named measurement and any hard failures.
class Tally {
public:
    void worst(const std::string& key, double v) {
        for (auto& [k, w] : worst_) {
            if (k == key) {
                w = std::max(w, v);
                return;
            }
        }
        worst_.emplace_back(key, v);
    }
    void fail(const std::string& what) {
        if (failures_++ == 0) first_failure_ = what;
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
    double get(const std::string& key) const {
        for (const auto& [k, w] : worst_)
            if (k == key) return w;
        return 0.0;
    }
    int failures() const { return failures_; }
    std::string summary() const {
        std::ostringstream os;
        os << std::setprecision(3);
        bool first = true;
        for (const auto& [k, w] : worst_) {
            os << (first ? "" : ", ") << k << "=" << w;
            first = false;
        }
        if (failures_ > 0) os << (first ? "" : "; ") << failures_ << " failure(s), first: " << first_failure_;
        return os.str();
    }

private:
    std::vector<std::pair<std::string, double>> worst_;
    int failures_ = 0;
    std::string first_failure_;
};

double scale_of(Hyperbolic a, Hyperbolic b) {
    return std::max({1.0, std::abs(a.p), std::abs(a.q), std::abs(b.p), std::abs(b.q)});
}

// Excess of x over y in the order, relative to scale; <= 0 when x <=' y.
double order_excess(Hyperbolic x, Hyperbolic y) {
    return std::max(x.p - y.p, x.q - y.q) / scale_of(x, y);
}

DVector sample_in(const DSubmodule& m, Rng& rng) {
    DVector x = DVector::zero(m.dim());
    std::normal_distribution<double> g;
    for (const auto& b : m.basis1()) x = x + DVector::pure_e1(g(rng) * b);
    for (const auto& b : m.basis2()) x = x + DVector::pure_e2(g(rng) * b);
    return x;
}

DSubmodule random_submodule(Rng& rng, int n, int d1, int d2) {
    for (;;) {
        std::vector<RealVec> b1, b2;
        for (int i = 0; i < d1; ++i) b1.push_back(random_real_vector(rng, n));
        for (int i = 0; i < d2; ++i) b2.push_back(random_real_vector(rng, n));
        try {
            return DSubmodule(n, b1, b2);
        } catch (const Error&) {
        }
    }
}

DBilinear2Functional random_functional(Rng& rng, int n) {
    return {random_antisymmetric(rng, n), random_antisymmetric(rng, n)};
}

// ---------------------------------------------------------------------------

void ring_order(Tally& t, std::uint64_t seed) {
    Rng rng(seed);
    auto draw = [&](int i) { return i % 4 == 0 ? random_corner_scalar(rng) : random_hyperbolic(rng, 3.0); };
    auto eq = [&](const char* key, Hyperbolic a, Hyperbolic b) { t.worst(key, oracle::rel_err(a, b)); };

    for (int i = 0; i < 10000; ++i) {
        const Hyperbolic x = draw(i), y = draw(i + 1), w = draw(i + 2);
        const Hyperbolic one = Hyperbolic::one(), zero = Hyperbolic::zero();

        eq("ring", x * y, y * x);
        eq("ring", x + y, y + x);
        eq("ring", (x * y) * w, x * (y * w));
        eq("ring", (x + y) + w, x + (y + w));
        eq("ring", x * (y + w), x * y + x * w);
        eq("ring", x * one, x);
        eq("ring", x + zero, x);
        eq("ring", x + (-x), zero);
        eq("ring", x * y, Hyperbolic::from_cartesian(x.a() * y.a() + x.b() * y.b(), x.a() * y.b() + x.b() * y.a()));
        if (x.is_invertible(1e-3)) eq("ring", x * inverse(x), one);

        eq("conj", conj_dagger(conj_dagger(x)), x);
        eq("conj", conj_dagger(x + y), conj_dagger(x) + conj_dagger(y));
        eq("conj", conj_dagger(x * y), conj_dagger(x) * conj_dagger(y));
        const Hyperbolic xx = x * conj_dagger(x);
        eq("conj", xx, Hyperbolic::real(xx.a()));
        eq("conj", Hyperbolic::from_cartesian(x.a(), -x.b()), conj_dagger(x));

        eq("modulus", modulus_k(x * y), modulus_k(x) * modulus_k(y));
        t.worst("triangle", std::max(0.0, order_excess(modulus_k(x + y), modulus_k(x) + modulus_k(y))));
        t.expect(modulus_k(x).is_nonnegative(0.0), "modulus outside D+");

        // order and lattice
        t.expect(leq(x, x), "reflexivity");
        if (leq(x, y) && leq(y, x)) t.expect(approx_equal(x, y), "antisymmetry");
        if (leq(x, y) && leq(y, w)) t.expect(leq(x, w), "transitivity");
        const bool incomparable = (x.p - y.p) * (x.q - y.q) < 0.0 && !approx_equal(x, y);
        const bool mixed = std::min(std::abs(x.p - y.p), std::abs(x.q - y.q)) > kEps;
        if (mixed) t.expect((leq_prime(x, y) == Order::Incomparable) == incomparable, "incomparability");
        const Order ro = leq_prime(Hyperbolic::real(x.p), Hyperbolic::real(y.p));
        if (x.p < y.p - kEps) t.expect(ro == Order::LessEq, "real embedding");
        if (x.p > y.p + kEps) t.expect(ro == Order::GreaterEq, "real embedding");

        const Hyperbolic set[] = {x, y, w};
        const Hyperbolic s = sup_d(set), in = inf_d(set);
        eq("lattice", s, Hyperbolic(std::max({x.p, y.p, w.p}), std::max({x.q, y.q, w.q})));
        eq("lattice", in, Hyperbolic(std::min({x.p, y.p, w.p}), std::min({x.q, y.q, w.q})));
        for (const auto& v : set) t.expect(leq(v, s) && leq(in, v), "sup/inf bound");
        const Hyperbolic above = s + modulus_k(random_hyperbolic(rng));
        t.expect(leq(s, above), "least upper bound");
        eq("lattice", join(x, meet(x, y)), x);
        eq("lattice", meet(x, join(x, y)), x);
        eq("lattice", x + y, join(x, y) + meet(x, y));
    }
    for (const char* key : {"ring", "conj", "modulus", "triangle", "lattice"})
        if (t.get(key) > 1e-12) t.fail(std::string(key) + " above 1e-12");
}

void axioms(Tally& t, std::uint64_t seed) {
    for (int n : {2, 3, 4}) {
        const AxiomReport r = axiom_check(D2Norm::gram_det(), n, {.samples = 1000, .seed = seed + n, .tol = 1e-9});
        for (int a = 0; a < 4; ++a) t.worst(std::string("gramdet_") + kAxiomNames[a], r.worst[a]);
        t.expect(r.all_pass(), "gramdet fails an axiom at n=" + std::to_string(n));
        t.expect(r.independent_zero_hits == 0, "independent pair with zero norm");
    }
    // In R^2 there is a single wedge coordinate, so the quasi-norm fixture
    // coincides with the Gram determinant there; it is exercised for n >= 3.
    for (int n : {3, 4}) {
        const AxiomReport r = axiom_check(oracle::broken_d2norm(), n, {.samples = 1000, .seed = seed + n, .tol = 1e-9});
        t.worst("broken_iv", r.worst[3]);
        t.expect(!r.pass[3], "broken fixture passes (iv) at n=" + std::to_string(n));
        t.expect(r.pass[0] && r.pass[1] && r.pass[2], "broken fixture fails (i)-(iii)");
    }
}

void decomposition(Tally& t, std::uint64_t seed) {
    Rng rng(seed);
    const D2Norm norm = D2Norm::gram_det();
    for (int n : {2, 3, 4}) {
        const NormDecomposition d = decompose(norm.as_function(), n, seed);
        for (int i = 0; i < 334; ++i) {
            const DVector x = random_dvector(rng, n), y = random_dvector(rng, n);
            t.worst("reconstruct", oracle::rel_err(d.reconstruct(x, y), norm(x, y)));
            const DVector ex = Hyperbolic::e1() * x, ey = Hyperbolic::e1() * y;
            t.expect(d.psi(ex.x2(), ey.x2()) == 0.0, "Psi(e1 x, e1 y) != 0");
            t.expect(norm(ex, ey).q == 0.0, "e2 part of ||e1 x, e1 y|| != 0");
        }
    }
    if (t.get("reconstruct") > 1e-12) t.fail("reconstruction above 1e-12");
}

void functional_norms(Tally& t, std::uint64_t seed) {
    Rng rng(seed);
    const D2Norm norm = D2Norm::gram_det();
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + i % 3;
        const DBilinear2Functional f = random_functional(rng, n);
        const Hyperbolic sigma = norm_spectral(f, norm).value;
        const BruteForceResult bf = norm_bruteforce(f, norm, {.budget = 100000, .refine_steps = 100, .seed = seed + i});
        for (int l = 0; l < 2; ++l) {
            const double q = bf.quotient.value[l];
            t.worst("below", (sigma[l] - q) / sigma[l]);
            t.worst("above", q - sigma[l]);
            t.worst("sup_forms", std::abs(bf.unit_form[l] - q) / std::max(1.0, q));
            t.expect(q >= 0.98 * sigma[l], "bruteforce more than 2% below spectral");
            t.expect(q <= sigma[l] + 1e-9, "bruteforce above spectral");
            t.expect(std::abs(bf.unit_form[l] - q) <= 1e-9 * std::max(1.0, q), "sup forms disagree");
        }
    }
}

void k_decomposition(Tally& t, std::uint64_t seed) {
    Rng rng(seed);
    const Hyperbolic k = Hyperbolic::k();
    for (int i = 0; i < 1000; ++i) {
        const int n = 2 + i % 3;
        const DBilinear2Functional f = random_functional(rng, n);
        const KDecomposition kd = k_decompose(f);
        const DVector x = random_dvector(rng, n), y = random_dvector(rng, n);
        const Hyperbolic v = f(x, y);
        const double phi = kd.phi(x, y);
        t.worst("phi_k_psi", oracle::rel_err(Hyperbolic::from_cartesian(phi, kd.psi(x, y)), v));
        t.worst("phi_kx", oracle::rel_err(Hyperbolic::from_cartesian(phi, kd.phi(k * x, y)), v));
        t.worst("phi_ky", oracle::rel_err(Hyperbolic::from_cartesian(phi, kd.phi(x, k * y)), v));
        t.worst("psi_kx", std::abs(kd.psi(k * x, y) - phi) / std::max(1.0, std::abs(phi)));
    }
    for (const char* key : {"phi_k_psi", "phi_kx", "phi_ky", "psi_kx"})
        if (t.get(key) > 1e-12) t.fail(std::string(key) + " above 1e-12");
}

void extension(Tally& t, std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_int_distribution<int> coin(0, 1);
    int grid_checks = 0, degenerate = 0, swapped = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = 2 + i % 3;
        std::uniform_int_distribution<int> dim(0, n);
        ExtensionProblem p;
        p.m = random_submodule(rng, n, dim(rng), dim(rng));
        p.f = random_functional(rng, n);
        p.z = random_dvector(rng, n);
        if (i % 4 == 3) {
            p.z = coin(rng) ? DVector::pure_e1(p.z.x1()) : DVector::pure_e2(p.z.x2());
            ++degenerate;
        }
        p.swap_domain = i % 5 == 4;
        swapped += p.swap_domain;
        const std::string tag = " (problem " + std::to_string(i) + ")";

        const ExtensionTrace tr = full_extend(p);

        // (a) restriction on M x [z]
        for (int s = 0; s < 1000; ++s) {
            const DVector x = sample_in(p.m, rng);
            const Hyperbolic a = random_hyperbolic(rng);
            const Hyperbolic want = p.swap_domain ? p.f(a * p.z, x) : p.f(x, a * p.z);
            const double e = oracle::rel_err(tr.apply(x, p.z, a), want);
            t.worst("restriction", e);
            if (e > 1e-10) {
                t.fail("restriction" + tag);
                break;
            }
        }

        // (b) norm audit
        for (int l = 0; l < 2; ++l) {
            const double e = std::abs(tr.norm_F[l] - tr.norm_f[l]);
            t.worst("norm_rel", e / std::max(tr.norm_f[l], 1e-300));
            t.expect(e <= 1e-5 * tr.norm_f[l] + 1e-12, "norm not preserved" + tag);
        }

        // (c) bracket, per-step invariants and grid oracle
        ExtensionProblem work = p;
        if (p.swap_domain) work.f = p.f.negated();
        if (tr.normalized_z) work = normalize_degenerate_z(work);
        PartialFunctional prev = PartialFunctional::from_matrices(work.f, work.m, work.z);
        const Hyperbolic norm_f = prev.norm();
        for (const ExtensionStep& st : tr.steps) {
            const double sc = scale_of(st.m0, st.m);
            t.worst("bracket", std::max({0.0, order_excess(st.m0, st.r), order_excess(st.r, st.m)}));
            t.expect(leq(st.m0, st.r, 1e-12 * sc) && leq(st.r, st.m, 1e-12 * sc), "bracket" + tag);

            for (int s = 0; s < 20; ++s) {
                const DVector x = sample_in(prev.domain, rng);
                t.worst("step_restriction", oracle::rel_err(st.g(x), prev(x)));
                // |f(x,z) + r|_k <=' ||f|| ||x + x', z||
                const Hyperbolic lhs = modulus_k(prev(x) + st.r);
                const Hyperbolic rhs = norm_f * D2Norm::gram_det()(x + st.x_prime, work.z);
                t.worst("pointwise_bound", std::max(0.0, order_excess(lhs, rhs)));
            }
            const Hyperbolic gn = st.g.norm();
            for (int l = 0; l < 2; ++l) t.worst("step_norm", std::abs(gn[l] - norm_f[l]) / std::max(norm_f[l], 1e-300));

            for (int l = 0; l < 2; ++l) {
                const RealVec& xl = st.x_prime.component(l);
                if (xl.norm() == 0.0 || prev.domain.component_dim(l) > 2) continue;
                const oracle::GridGap g =
                    oracle::grid_gap(prev.domain.basis(l), prev.ell(l), work.z.component(l), xl, norm_f[l]);
                const double s = std::max(1.0, std::abs(st.m[l]));
                const double e = std::max(std::abs(g.m - st.m[l]), std::abs(g.m0 - st.m0[l])) / s;
                t.worst("grid_gap", e);
                t.expect(e <= 1e-4, "grid oracle disagrees" + tag);
                ++grid_checks;
            }
            prev = st.g;
        }
    }
    if (t.get("step_restriction") > 1e-10) t.fail("step restriction above 1e-10");
    if (t.get("step_norm") > 1e-5) t.fail("step norm drift above 1e-5");
    if (t.get("pointwise_bound") > 1e-9) t.fail("pointwise bound violated");
    t.worst("grid_checks", grid_checks);
    t.worst("degenerate_z", degenerate);
    t.worst("swapped", swapped);
}

void corollary(Tally& t, std::uint64_t seed) {
    Rng rng(seed);
    const D2Norm norm = D2Norm::gram_det();
    std::normal_distribution<double> g;
    auto nz = [&] {
        double v = 0.0;
        while (std::abs(v) < 0.1) v = g(rng);
        return v;
    };
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + i % 3;
        const DVector x0 = random_dvector(rng, n), y0 = random_dvector(rng, n);
        const CorollaryResult c = corollary_functional(n, x0, y0, norm);
        for (int l = 0; l < 2; ++l) {
            t.worst("norm_f", std::abs(c.norm_f[l] - 1.0));
            t.worst("norm_f0", std::abs(c.norm_f0[l] - 1.0));
        }
        t.worst("f_at_pair", oracle::rel_err(c.f_at_pair, c.pair_norm));
        t.worst("f0_at_pair", oracle::rel_err(c.f0(x0, y0), c.pair_norm));

        const double a1 = nz(), a2 = nz(), b1 = nz(), b2 = nz();
        const Hyperbolic e1 = Hyperbolic::e1(), e2 = Hyperbolic::e2();
        struct Case {
            Hyperbolic alpha, beta;
            bool vanishes;
        };
        const Case cases[] = {{e1 * a1, e2 * b2, true},
                              {e2 * a2, e1 * b1, true},
                              {e1 * a1, e1 * b1, false},
                              {e2 * a2, e2 * b2, false},
                              {Hyperbolic(a1, a2), Hyperbolic(b1, b2), false}};
        for (const Case& cs : cases) {
            const DVector ax = cs.alpha * x0, by = cs.beta * y0;
            for (const DBilinear2Functional* f : {&c.f0, &c.trace.F}) {
                const Hyperbolic v = modulus_k((*f)(ax, by));
                const Hyperbolic bound = norm(ax, by);
                t.worst("case_bound", std::max(0.0, order_excess(v, bound)));
                if (cs.vanishes) t.expect(v == Hyperbolic::zero(), "mixed zero pattern does not vanish");
            }
            t.worst("case_value", oracle::rel_err(c.f0(ax, by), corollary_f0_value(c.pair_norm, cs.alpha, cs.beta)));
        }
    }
    if (t.get("norm_f") > 1e-9 || t.get("norm_f0") > 1e-9) t.fail("norm differs from 1 by more than 1e-9");
    if (t.get("f_at_pair") > 1e-10 || t.get("f0_at_pair") > 1e-10) t.fail("value at (x0, y0) off by more than 1e-10");
    if (t.get("case_bound") > 1e-10) t.fail("zero-pattern bound violated");
    if (t.get("case_value") > 1e-10) t.fail("f0 differs from its defining formula");
}

void decoupling(Tally& t, std::uint64_t seed) {
    Rng rng(seed);
    const D2Norm norm = D2Norm::gram_det();
    auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + i % 3;
        std::uniform_int_distribution<int> dim(0, n);
        const DSubmodule m = random_submodule(rng, n, dim(rng), dim(rng));
        const DBilinear2Functional f = random_functional(rng, n);
        const DVector z = random_dvector(rng, n);
        const ExtensionTrace tr = full_extend({m, z, f, norm, false});
        const Hyperbolic sigma = norm_spectral(f, norm).value;
        const Hyperbolic dom = norm_on_domain(f, m, z);

        std::size_t offset = 0;
        for (int l = 0; l < 2; ++l) {
            const RealMat& c = f.component(l);
            const RealVec& zl = z.component(l);
            Eigen::JacobiSVD<RealMat> svd(c);
            t.worst("spectral", rel(sigma[l], svd.singularValues()(0)));
            t.worst("domain_norm", rel(dom[l], component_domain_norm(OrthoBasis(n, m.basis(l)), c * zl, zl)));

            const component::Trace ct = component::extend(c, m.basis(l), zl);
            t.worst("extension", (ct.matrix - tr.F.component(l)).lpNorm<Eigen::Infinity>() /
                                     std::max(1.0, ct.matrix.lpNorm<Eigen::Infinity>()));
            t.worst("norm_F", rel(tr.norm_F[l], ct.norm_F));
            t.worst("norm_f", rel(tr.norm_f[l], ct.norm_f));
            t.expect(offset + ct.steps.size() <= tr.steps.size(), "step count differs");
            for (std::size_t s = 0; s < ct.steps.size() && offset + s < tr.steps.size(); ++s) {
                const ExtensionStep& ds = tr.steps[offset + s];
                t.worst("steps", std::max({rel(ds.m0[l], ct.steps[s].m0), rel(ds.m[l], ct.steps[s].m),
                                           rel(ds.r[l], ct.steps[s].r)}));
            }
            offset += ct.steps.size();

            for (int s = 0; s < 20; ++s) {
                const DVector x = random_dvector(rng, n), y = random_dvector(rng, n);
                t.worst("evaluation", rel(f(x, y)[l], x.component(l).dot(c * y.component(l))));
                t.worst("two_norm", rel(norm(x, y)[l], gram_det_2norm(x.component(l), y.component(l))));
            }
        }
        t.expect(offset == tr.steps.size(), "step count differs");
    }
    for (const char* key : {"spectral", "domain_norm", "extension", "norm_F", "norm_f", "steps", "evaluation", "two_norm"})
        if (t.get(key) > 1e-12) t.fail(std::string(key) + " above 1e-12");
}

struct Criterion {
    const char* name;
    std::function<void(Tally&, std::uint64_t)> body;
    double time_limit;  // seconds; 0 for none
};

const Criterion kCriteria[kCriterionCount] = {
    {"ring and order laws", ring_order, 5.0},
    {"2-norm axioms", axioms, 0.0},
    {"norm decomposition", decomposition, 0.0},
    {"functional norm: bruteforce vs spectral", functional_norms, 30.0},
    {"k-decomposition identities", k_decomposition, 0.0},
    {"extension engine", extension, 60.0},
    {"norm-attaining functional", corollary, 0.0},
    {"componentwise decoupling", decoupling, 0.0},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
    if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id out of range");
    const Criterion& c = kCriteria[id - 1];
    CriterionResult out;
    out.id = id;
    out.name = c.name;
    Tally t;
    const auto start = Clock::now();
    try {
        c.body(t, seed);
    } catch (const std::exception& e) {
        t.fail(std::string("exception: ") + e.what());
    }
    out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.time_limit > 0.0 && out.seconds >= c.time_limit) {
        std::ostringstream os;
        os << "runtime " << out.seconds << " s over the " << c.time_limit << " s limit";
        t.fail(os.str());
    }
    out.pass = t.failures() == 0;
    out.detail = t.summary();
    return out;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
    return out;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " (" << std::fixed << std::setprecision(2)
       << r.seconds << " s): " << r.detail;
    return os.str();
}

}  // namespace hyp2::acceptance
