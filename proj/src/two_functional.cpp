#include "hyp2/two_functional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dual.hpp"
#include "hyp2/sampling.hpp"

namespace hyp2 {

namespace {

RealMat checked_antisymmetric(const RealMat& c, int n, double tol, const char* which) {
    if (c.rows() != n || c.cols() != n) {
        throw Error(ErrorCode::DimensionMismatch, std::string(which) + " must be a square n x n matrix");
    }
    const RealMat sym = 0.5 * (c + c.transpose());
    const double worst = n == 0 ? 0.0 : sym.cwiseAbs().maxCoeff();
    if (worst > tol) {
        throw Error(ErrorCode::NotAntisymmetric,
                    std::string(which) + " symmetric part has max |entry| " + std::to_string(worst));
    }
    return 0.5 * (c - c.transpose());
}

// Nearly parallel pairs are skipped: there x^T C y is pure rounding noise
// relative to the small area, and the climb would chase it.
constexpr double kMinSine = 1e-4;

double ratio(const RealMat& c, const Real2Norm& norm, const RealVec& x, const RealVec& y) {
    const double d = norm(x, y);
    if (!(d > kEps) || d < kMinSine * x.norm() * y.norm()) return 0.0;
    return std::abs(x.dot(c * y)) / d;
}

// Coordinate-wise hill climbing on (x, y) for |x^T C y| / ||x, y||.
double hill_climb(const RealMat& c, const Real2Norm& norm, RealVec& x, RealVec& y, int steps) {
    const int n = static_cast<int>(x.size());
    double best = ratio(c, norm, x, y);
    double step = 0.1 * std::max(x.norm(), y.norm());
    for (int s = 0; s < steps; ++s) {
        bool improved = false;
        for (int i = 0; i < 2 * n; ++i) {
            RealVec& v = i < n ? x : y;
            const int j = i % n;
            for (double sign : {1.0, -1.0}) {
                const double saved = v[j];
                v[j] = saved + sign * step;
                const double r = ratio(c, norm, x, y);
                if (r > best) {
                    best = r;
                    improved = true;
                    break;
                }
                v[j] = saved;
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

}  // namespace

DBilinear2Functional::DBilinear2Functional(const RealMat& c1, const RealMat& c2, double tol) {
    const int n = static_cast<int>(c1.rows());
    c1_ = checked_antisymmetric(c1, n, tol, "C1");
    c2_ = checked_antisymmetric(c2, n, tol, "C2");
}

DBilinear2Functional DBilinear2Functional::zero(int n) {
    return {RealMat::Zero(n, n), RealMat::Zero(n, n)};
}

Hyperbolic DBilinear2Functional::operator()(const DVector& x, const DVector& y) const {
    if (x.size() != dim() || y.size() != dim()) {
        throw Error(ErrorCode::DimensionMismatch, "functional arguments must have length n");
    }
    return {x.x1().dot(c1_ * y.x1()), x.x2().dot(c2_ * y.x2())};
}

DBilinear2Functional DBilinear2Functional::scaled(Hyperbolic alpha) const {
    return {alpha.p * c1_, alpha.q * c2_};
}

Hyperbolic eval(const DBilinear2Functional& f, const DVector& x, const DVector& y) { return f(x, y); }

ComponentSplit component_split(const DBilinear2Functional& f) {
    return {RealBilinear2Functional(f.c1()), RealBilinear2Functional(f.c2())};
}

double KDecomposition::phi(const DVector& x, const DVector& y) const {
    return 0.5 * (parts_.f1(x.x1(), y.x1()) + parts_.f2(x.x2(), y.x2()));
}

double KDecomposition::psi(const DVector& x, const DVector& y) const {
    return 0.5 * (parts_.f1(x.x1(), y.x1()) - parts_.f2(x.x2(), y.x2()));
}

KDecomposition k_decompose(const DBilinear2Functional& f) { return KDecomposition(component_split(f)); }

const char* to_string(NormMethod m) noexcept {
    return m == NormMethod::Spectral ? "spectral" : "bruteforce";
}

NormCertificate norm_spectral(const DBilinear2Functional& f, const D2Norm& norm) {
    if (!norm.is_gram_det()) {
        throw Error(ErrorCode::UnsupportedNorm, "spectral norm needs Gram-determinant components");
    }
    if (f.dim() < 1) throw Error(ErrorCode::DimensionMismatch, "empty functional");
    NormCertificate cert;
    cert.method = NormMethod::Spectral;
    RealVec wx[2], wy[2];
    double sigma[2];
    for (int l = 0; l < 2; ++l) {
        Eigen::JacobiSVD<RealMat> svd(f.component(l), Eigen::ComputeFullU | Eigen::ComputeFullV);
        sigma[l] = svd.singularValues()(0);
        // C v = sigma u, so u^T C v = sigma with u orthogonal to v.
        wx[l] = svd.matrixU().col(0);
        wy[l] = svd.matrixV().col(0);
    }
    cert.value = {sigma[0], sigma[1]};
    cert.witness_x = DVector(wx[0], wx[1]);
    cert.witness_y = DVector(wy[0], wy[1]);
    return cert;
}

BruteForceResult norm_bruteforce(const DBilinear2Functional& f, const D2Norm& norm, const BruteForceOptions& opts) {
    const int n = f.dim();
    Rng rng(opts.seed);
    BruteForceResult out;
    out.quotient.method = NormMethod::BruteForce;

    double best[2] = {0.0, 0.0};
    RealVec bx[2] = {RealVec::Unit(n, 0), RealVec::Unit(n, 0)};
    RealVec by[2] = {RealVec::Unit(n, n > 1 ? 1 : 0), RealVec::Unit(n, n > 1 ? 1 : 0)};
    Hyperbolic unit_best;

    auto unit_value = [&](const DVector& x, const DVector& y, Hyperbolic nv) {
        const DVector xs = inverse(nv) * x;  // now ||xs, y||_D = 1
        return modulus_k(f(xs, y));
    };

    // The sampling loop works on the idempotent components directly, with
    // preallocated buffers; a pair counts only when both component norms are
    // nonzero, i.e. ||x, y||_D is invertible.
    std::normal_distribution<double> gauss;
    auto fill_unit = [&](RealVec& v) {
        double len = 0.0;
        while (len <= 1e-6) {
            for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = gauss(rng);
            len = v.norm();
        }
        v /= len;
    };
    RealVec x[2] = {RealVec(n), RealVec(n)}, y[2] = {RealVec(n), RealVec(n)};
    RealVec cy(n), xs(n);
    for (long s = 0; s < std::max(1L, opts.budget); ++s) {
        double d[2];
        for (int l = 0; l < 2; ++l) {
            fill_unit(x[l]);
            fill_unit(y[l]);
            d[l] = norm.component(l)(x[l], y[l]);
        }
        if (!Hyperbolic(d[0], d[1]).is_invertible()) continue;
        ++out.accepted;
        Hyperbolic unit;
        for (int l = 0; l < 2; ++l) {
            if (d[l] < kMinSine) continue;  // unit vectors, so d is the sine
            cy.noalias() = f.component(l) * y[l];
            const double r = std::abs(x[l].dot(cy)) / d[l];
            if (r > best[l]) {
                best[l] = r;
                bx[l] = x[l];
                by[l] = y[l];
            }
            xs = x[l] / d[l];
            (l == 0 ? unit.p : unit.q) = std::abs(xs.dot(cy));
        }
        unit_best = join(unit_best, unit);
    }

    for (int l = 0; l < 2; ++l) {
        best[l] = std::max(best[l], hill_climb(f.component(l), norm.component(l), bx[l], by[l], opts.refine_steps));
    }
    out.quotient.value = {best[0], best[1]};
    out.quotient.witness_x = DVector(bx[0], bx[1]);
    out.quotient.witness_y = DVector(by[0], by[1]);
    const Hyperbolic wn = norm(out.quotient.witness_x, out.quotient.witness_y);
    if (wn.is_invertible()) {
        unit_best = join(unit_best, unit_value(out.quotient.witness_x, out.quotient.witness_y, wn));
    }
    out.unit_form = unit_best;
    return out;
}

BoundednessResult is_bounded_check(const DBilinear2Functional& f, const D2Norm& norm, Hyperbolic delta,
                                   int samples, std::uint64_t seed, double tol) {
    const int n = f.dim();
    Rng rng(seed);
    BoundednessResult out;
    out.worst_excess = {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    double worst_rel = 0.0;

    auto test_pair = [&](const DVector& x, const DVector& y) {
        const Hyperbolic lhs = modulus_k(f(x, y));
        const Hyperbolic rhs = delta * norm(x, y);
        const Hyperbolic excess = lhs - rhs;
        out.worst_excess = join(out.worst_excess, excess);
        for (int l = 0; l < 2; ++l) {
            const double rel = excess[l] / std::max(1.0, lhs[l] + rhs[l]);
            if (rel > tol && rel > worst_rel) {
                worst_rel = rel;
                out.bounded = false;
                out.witness = std::make_pair(x, y);
            }
        }
    };

    if (norm.is_gram_det()) {
        const NormCertificate spectral = norm_spectral(f, norm);
        test_pair(spectral.witness_x, spectral.witness_y);
    }
    for (int s = 0; s < samples; ++s) test_pair(random_dvector(rng, n), random_dvector(rng, n));
    return out;
}

double component_domain_norm(const OrthoBasis& domain, const RealVec& ell, const RealVec& z) {
    const detail::DualMultiplier dual = detail::min_norm_multiplier(domain, ell, z);
    if (!dual.feasible) return std::numeric_limits<double>::infinity();
    return dual.mu0.norm();
}

Hyperbolic norm_on_domain(const DBilinear2Functional& f, const DSubmodule& m, const DVector& z) {
    if (m.dim() != f.dim() || z.size() != f.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "functional, submodule and z must share n");
    }
    double v[2];
    for (int l = 0; l < 2; ++l) {
        v[l] = component_domain_norm(m.ortho(l), f.component(l) * z.component(l), z.component(l));
    }
    return {v[0], v[1]};
}

}  // namespace hyp2
