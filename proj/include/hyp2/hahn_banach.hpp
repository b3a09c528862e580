#pragma once

#include <vector>

#include "hyp2/two_functional.hpp"

namespace hyp2 {

// A D-bounded linear 2-functional f on M x [z] (or on [z] x M when
// swap_domain is set) that is to be extended to X x [z] without growing its
// norm. f is given by antisymmetric matrices; only its values on the domain
// matter.
struct ExtensionProblem {
    DSubmodule m;
    DVector z;
    DBilinear2Functional f;
    D2Norm norm = D2Norm::gram_det();
    bool swap_domain = false;

    int dim() const { return m.dim(); }
};

// A functional on domain x [z] in the form
//     (x, alpha z) -> alpha * (e1 ell1 . x1 + e2 ell2 . x2),
// meaningful for x in the domain. This is the representation the extension
// steps act on.
struct PartialFunctional {
    DSubmodule domain;
    DVector z;
    RealVec ell1;
    RealVec ell2;

    static PartialFunctional from_matrices(const DBilinear2Functional& f, const DSubmodule& m, const DVector& z);

    const RealVec& ell(int l) const { return l == 0 ? ell1 : ell2; }
    RealVec& ell(int l) { return l == 0 ? ell1 : ell2; }

    // f(x, alpha z)
    Hyperbolic operator()(const DVector& x, Hyperbolic alpha = Hyperbolic::one()) const;

    // Exact norm on domain x [z]; components are +inf when unbounded.
    Hyperbolic norm() const;

    // Antisymmetric representative (ell z^T - z ell^T) / |z|^2 per component.
    // It reproduces the functional on X x [z] when ell is orthogonal to z,
    // which holds for every bounded functional whose domain contains z.
    DBilinear2Functional to_matrices() const;
};

struct GapInterval {
    Hyperbolic m0;  // sup over y in M of  -||f|| ||y + x', z|| - f(y, z)
    Hyperbolic m;   // inf over x in M of   ||f|| ||x + x', z|| - f(x, z)
};

struct ExtensionStep {
    DVector x_prime;
    Hyperbolic m0;
    Hyperbolic m;
    Hyperbolic r;
    PartialFunctional g;  // on (M + D x') x [z]
};

struct ExtensionTrace {
    std::vector<ExtensionStep> steps;
    DVector z_used;             // z, or its repaired z' when z was a zero divisor
    bool normalized_z = false;
    bool zero_branch = false;   // z = 0: F is identically zero
    bool swapped = false;       // domain is [z] x X instead of X x [z]
    DBilinear2Functional F;     // final extension on X x [z]
    Hyperbolic norm_f;          // exact norm of f on its domain
    Hyperbolic norm_F;          // spectral norm of F

    // F(x, alpha z), or F(alpha z, x) in the swapped orientation.
    Hyperbolic apply(const DVector& x, const DVector& z, Hyperbolic alpha) const;
};

// Gap values per idempotent component, from the exact Lagrangian dual of the
// norm-plus-linear objectives. Throws OptimizationFailure when m0 <=' m fails,
// which means norm_f does not bound the functional on its domain.
GapInterval gap_interval(const PartialFunctional& current, const DVector& x_prime, Hyperbolic norm_f);
GapInterval gap_interval(const ExtensionProblem& problem, const DVector& x_prime);

// One extension step g(x + beta x', alpha z) = alpha f(x, z) + alpha beta r
// with r the componentwise midpoint of [m0, m]. Throws DegenerateZ when z is
// zero or a zero divisor. A generator already in the domain yields an
// identity step whose r is the forced value f(x', z).
ExtensionStep one_step_extend(const PartialFunctional& current, const DVector& x_prime, Hyperbolic norm_f);
ExtensionStep one_step_extend(const ExtensionProblem& problem, const DVector& x_prime);

// Replaces a zero-divisor z by z' = z + e_l u, where l is the vanishing
// component and u is the first standard basis vector scaled to |z|; the
// functional is set to zero on the new component.
ExtensionProblem normalize_degenerate_z(const ExtensionProblem& problem);

// Extends f to X x [z] by adjoining standard basis vectors one component at a
// time (all e1 steps, then all e2 steps), skipping those already in the span.
ExtensionTrace full_extend(const ExtensionProblem& problem);

struct CorollaryResult {
    DSubmodule domain;            // [x0]
    DBilinear2Functional f0;      // f0(alpha x0, beta y0) = alpha beta ||x0, y0||_D
    Hyperbolic pair_norm;         // ||x0, y0||_D
    Hyperbolic norm_f0;
    ExtensionTrace trace;
    Hyperbolic norm_f;            // of the extension
    Hyperbolic f_at_pair;         // extension evaluated at (x0, y0)
};

// Throws DependentPair when (x0, y0) is dependent in either component and
// ZeroDivisorInput when x0 or y0 lies in NC_X.
CorollaryResult corollary_functional(int n, const DVector& x0, const DVector& y0,
                                     const D2Norm& norm = D2Norm::gram_det());

// f0(alpha x0, beta y0) evaluated from the defining formula.
Hyperbolic corollary_f0_value(Hyperbolic pair_norm, Hyperbolic alpha, Hyperbolic beta);

// The same engine on a single real idempotent component: the functional
// x -> ell . x on span(basis) x [z], extended over R^n.
namespace component {

struct Gap {
    double m0 = 0.0;
    double m = 0.0;
};

struct Step {
    RealVec x_prime;
    double m0 = 0.0;
    double m = 0.0;
    double r = 0.0;
};

struct Trace {
    std::vector<Step> steps;
    RealVec ell;
    RealMat matrix;
    double norm_f = 0.0;
    double norm_F = 0.0;
};

Gap gap(const OrthoBasis& domain, const RealVec& ell, const RealVec& z, const RealVec& x_prime, double norm_f);

// Extends in place; returns the step record.
Step extend_step(OrthoBasis& domain, RealVec& ell, const RealVec& z, const RealVec& x_prime, double norm_f);

Trace extend(const RealMat& c, const std::vector<RealVec>& basis, const RealVec& z);

}  // namespace component

}  // namespace hyp2
