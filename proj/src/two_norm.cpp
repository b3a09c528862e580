#include "hyp2/two_norm.hpp"

#include <algorithm>
#include <cmath>

#include "hyp2/sampling.hpp"

namespace hyp2 {

double gram_det_2norm(const RealVec& x, const RealVec& y) { return wedge_norm(x, y); }

Real2Norm Real2Norm::gram_det() { return {"gramdet", &gram_det_2norm}; }

Hyperbolic D2Norm::operator()(const DVector& x, const DVector& y) const {
    if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "2-norm arguments differ in length");
    return {norm1(x.x1(), y.x1()), norm2(x.x2(), y.x2())};
}

D2NormFn D2Norm::as_function() const {
    return [self = *this](const DVector& x, const DVector& y) { return self(x, y); };
}

Hyperbolic eval_d(const D2Norm& norm, const DVector& x, const DVector& y) { return norm(x, y); }

namespace {

double max_abs(Hyperbolic z) { return std::max(std::abs(z.p), std::abs(z.q)); }

double rel(double diff, double scale) { return diff / std::max(1.0, scale); }

// Occasionally swap a random vector for a structured one: zero, a standard
// basis vector, or an element living in a single idempotent component.
DVector corner_vector(Rng& rng, int n) {
    std::uniform_int_distribution<int> pick(0, 7);
    std::uniform_int_distribution<int> axis(0, n - 1);
    switch (pick(rng)) {
        case 0: return DVector::zero(n);
        case 1: return DVector::real(RealVec::Unit(n, axis(rng)));
        case 2: return DVector::pure_e1(random_real_vector(rng, n));
        case 3: return DVector::pure_e2(random_real_vector(rng, n));
        default: return random_dvector(rng, n);
    }
}

}  // namespace

AxiomReport axiom_check(const D2NormFn& norm, int n, const AxiomCheckOptions& opts) {
    AxiomReport report;
    report.dim = n;
    report.samples = opts.samples;
    Rng rng(opts.seed);
    auto& worst = report.worst;

    for (int s = 0; s < opts.samples; ++s) {
        const DVector x = random_dvector(rng, n);
        const DVector y = corner_vector(rng, n);
        const DVector z = corner_vector(rng, n);
        const Hyperbolic alpha = random_corner_scalar(rng);

        // (i) dependent pairs vanish ...
        const DVector dep = alpha * x;
        const double dep_scale = x.x1().norm() * dep.x1().norm() + x.x2().norm() * dep.x2().norm();
        worst[0] = std::max(worst[0], rel(max_abs(norm(x, dep)), dep_scale));
        worst[0] = std::max(worst[0], max_abs(norm(x, DVector::zero(n))));

        // ... and D-independent pairs do not. One component may be dependent.
        const DVector w = random_dvector(rng, n);
        const DVector half_dep(w.x1(), 2.5 * x.x2());
        for (const DVector* other : {&w, &half_dep}) {
            if (linear_dependent(x, *other)) continue;
            const Hyperbolic v = norm(x, *other);
            const double scale = std::max(x.x1().norm() * other->x1().norm(), x.x2().norm() * other->x2().norm());
            if (max_abs(v) <= opts.tol * std::max(1.0, scale)) ++report.independent_zero_hits;
        }

        // (ii)
        const Hyperbolic xy = norm(x, y);
        worst[1] = std::max(worst[1], rel(max_abs(xy - norm(y, x)), max_abs(xy)));

        // (iii)
        const Hyperbolic expect = modulus_k(alpha) * xy;
        worst[2] = std::max(worst[2], rel(max_abs(norm(alpha * x, y) - expect), max_abs(expect)));

        // (iv)
        const Hyperbolic lhs = norm(x + y, z);
        const Hyperbolic rhs = norm(x, z) + norm(y, z);
        const Hyperbolic excess = lhs - rhs;
        worst[3] = std::max(worst[3], rel(std::max({0.0, excess.p, excess.q}), max_abs(rhs)));
    }

    report.pass[0] = worst[0] <= opts.tol && report.independent_zero_hits == 0;
    for (int a = 1; a < 4; ++a) report.pass[a] = worst[a] <= opts.tol;
    return report;
}

AxiomReport axiom_check(const D2Norm& norm, int n, const AxiomCheckOptions& opts) {
    return axiom_check(norm.as_function(), n, opts);
}

NormDecomposition decompose(const D2NormFn& norm, int n, std::uint64_t seed) {
    const AxiomReport spot = axiom_check(norm, n, {.samples = 64, .seed = seed, .tol = 1e-9});
    if (!spot.all_pass()) {
        std::string failed;
        for (int a = 0; a < 4; ++a)
            if (!spot.pass[a]) failed += std::string(failed.empty() ? "" : ",") + kAxiomNames[a];
        throw Error(ErrorCode::AxiomViolation, "probe inputs violate axiom(s) " + failed);
    }
    Real2Norm phi("induced-e1", [norm](const RealVec& x1, const RealVec& y1) {
        return norm(DVector::pure_e1(x1), DVector::pure_e1(y1)).p;
    });
    Real2Norm psi("induced-e2", [norm](const RealVec& x2, const RealVec& y2) {
        return norm(DVector::pure_e2(x2), DVector::pure_e2(y2)).q;
    });
    return {std::move(phi), std::move(psi)};
}

bool sequence_converges(const D2Norm& norm, std::span<const DVector> seq, const DVector& x0,
                        std::span<const DVector> probes, double tol) {
    if (seq.empty() || probes.empty()) return false;
    const std::size_t start = (seq.size() * 3) / 4;
    for (std::size_t k = start; k < seq.size(); ++k) {
        const DVector diff = seq[k] - x0;
        for (const auto& y : probes) {
            const Hyperbolic v = norm(diff, y);
            if (!(v.p < tol && v.q < tol)) return false;
        }
    }
    return true;
}

}  // namespace hyp2
