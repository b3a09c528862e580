#pragma once

#include <random>

#include "hyp2/dmodule.hpp"

namespace hyp2 {

using Rng = std::mt19937_64;

RealVec random_real_vector(Rng& rng, int n);            // iid N(0,1) entries
RealVec random_unit_vector(Rng& rng, int n);
Hyperbolic random_hyperbolic(Rng& rng, double scale = 1.0);  // uniform in [-scale, scale]^2
DVector random_dvector(Rng& rng, int n);
RealMat random_antisymmetric(Rng& rng, int n);

// Scalars that stress the module axioms: 0, 1, -1, e1, e2, k, and random
// zero divisors, mixed in with ordinary random scalars.
Hyperbolic random_corner_scalar(Rng& rng);

}  // namespace hyp2
