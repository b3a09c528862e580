#pragma once

// Shared by the domain-norm and gap-interval computations.
//
// For x = U c ranging over the span of an orthonormal basis U, the Gram
// 2-norm against a fixed z is ||x, z|| = |A c| with A = |z| (I - zz^T/|z|^2) U,
// and the functional is x -> ell . x = g . c with g = U^T ell. Lagrangian
// duality for  inf_c  a |A c + b| - g . c  gives
//     max { mu . b : A^T mu = g, |mu| <= a },
// so everything reduces to the minimum-norm multiplier mu0 of A^T mu = g.

#include "hyp2/linalg.hpp"

namespace hyp2::detail {

struct DualMultiplier {
    RealMat a;         // n x k
    RealVec mu0;       // minimum-norm solution of A^T mu = g
    bool feasible = true;
};

DualMultiplier min_norm_multiplier(const OrthoBasis& domain, const RealVec& ell, const RealVec& z);

// Applies the operator x -> |z| (I - zz^T/|z|^2) x.
RealVec gram_operator(const RealVec& z, const RealVec& x);

}  // namespace hyp2::detail
