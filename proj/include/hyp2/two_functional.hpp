#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "hyp2/dmodule.hpp"
#include "hyp2/two_norm.hpp"

namespace hyp2 {

// Largest |C - C^T| / 2 entry accepted when loading a functional.
inline constexpr double kAntisymmetryTol = 1e-12;

// Real bilinear 2-functional (x, y) -> x^T C y on R^n.
class RealBilinear2Functional {
public:
    RealBilinear2Functional() = default;
    explicit RealBilinear2Functional(RealMat c) : c_(std::move(c)) {}

    double operator()(const RealVec& x, const RealVec& y) const { return x.dot(c_ * y); }
    const RealMat& matrix() const { return c_; }

private:
    RealMat c_;
};

// D-linear 2-functional on D^n x D^n:
//   f(x, y) = e1 * (x1^T C1 y1) + e2 * (x2^T C2 y2)
// with antisymmetric C1, C2, so f vanishes on dependent pairs.
class DBilinear2Functional {
public:
    DBilinear2Functional() = default;
    // Throws NotAntisymmetric when the symmetric part exceeds tol, and
    // DimensionMismatch when the matrices are not square of equal size.
    DBilinear2Functional(const RealMat& c1, const RealMat& c2, double tol = kAntisymmetryTol);

    static DBilinear2Functional zero(int n);

    int dim() const { return static_cast<int>(c1_.rows()); }
    const RealMat& c1() const { return c1_; }
    const RealMat& c2() const { return c2_; }
    const RealMat& component(int l) const { return l == 0 ? c1_ : c2_; }

    Hyperbolic operator()(const DVector& x, const DVector& y) const;

    // alpha * f, still antisymmetric.
    DBilinear2Functional scaled(Hyperbolic alpha) const;
    DBilinear2Functional negated() const { return scaled(-Hyperbolic::one()); }

private:
    RealMat c1_;
    RealMat c2_;
};

Hyperbolic eval(const DBilinear2Functional& f, const DVector& x, const DVector& y);

// f = e1 f1 + e2 f2 with real f_l acting on the l-th idempotent components.
struct ComponentSplit {
    RealBilinear2Functional f1;
    RealBilinear2Functional f2;

    Hyperbolic reconstruct(const DVector& x, const DVector& y) const {
        return {f1(x.x1(), y.x1()), f2(x.x2(), y.x2())};
    }
};

ComponentSplit component_split(const DBilinear2Functional& f);

// f = phi + k psi with real-valued phi = (f1 + f2)/2 and psi = (f1 - f2)/2.
class KDecomposition {
public:
    explicit KDecomposition(ComponentSplit parts) : parts_(std::move(parts)) {}

    double phi(const DVector& x, const DVector& y) const;
    double psi(const DVector& x, const DVector& y) const;
    Hyperbolic reconstruct(const DVector& x, const DVector& y) const {
        return Hyperbolic::from_cartesian(phi(x, y), psi(x, y));
    }

private:
    ComponentSplit parts_;
};

KDecomposition k_decompose(const DBilinear2Functional& f);

enum class NormMethod { Spectral, BruteForce };
const char* to_string(NormMethod m) noexcept;

struct NormCertificate {
    Hyperbolic value;  // in D+
    DVector witness_x;
    DVector witness_y;
    NormMethod method = NormMethod::Spectral;
};

// ||f||_D = e1 sigma_max(C1) + e2 sigma_max(C2); requires Gram-determinant
// components (UnsupportedNorm otherwise). The witness is the top singular pair.
NormCertificate norm_spectral(const DBilinear2Functional& f, const D2Norm& norm = D2Norm::gram_det());

struct BruteForceOptions {
    long budget = 100000;
    int refine_steps = 100;
    std::uint64_t seed = 1;
};

struct BruteForceResult {
    NormCertificate quotient;  // sup_D |f(x,y)|_k / ||x,y||_D
    Hyperbolic unit_form;      // sup_D |f(x,y)|_k over pairs rescaled to ||x,y||_D = 1
    long accepted = 0;         // sampled pairs whose norm was invertible
};

// Sampling lower estimate of ||f||_D for any lifted 2-norm.
BruteForceResult norm_bruteforce(const DBilinear2Functional& f, const D2Norm& norm,
                                 const BruteForceOptions& opts = {});

struct BoundednessResult {
    bool bounded = true;
    Hyperbolic worst_excess;  // max over samples of |f|_k - delta*||x,y||_D, componentwise
    std::optional<std::pair<DVector, DVector>> witness;
};

// Tests |f(x,y)|_k <=' delta * ||x,y||_D (+ tol, relative) on random pairs.
BoundednessResult is_bounded_check(const DBilinear2Functional& f, const D2Norm& norm, Hyperbolic delta,
                                   int samples, std::uint64_t seed = 1, double tol = 1e-9);

// Exact D-norm of x -> (x, alpha z) -> alpha * f(x, z) on M x [z] under the
// Gram-determinant 2-norm.
Hyperbolic norm_on_domain(const DBilinear2Functional& f, const DSubmodule& m, const DVector& z);

// Exact real norm of x -> ell . x on span(domain) x [z]: the least Delta with
// |ell . x| <= Delta * ||x, z|| there. Returns +inf when unbounded, i.e. when
// z lies in the domain but ell . z != 0.
double component_domain_norm(const OrthoBasis& domain, const RealVec& ell, const RealVec& z);

}  // namespace hyp2
