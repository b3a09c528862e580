#include "hyp2/sampling.hpp"

namespace hyp2 {

RealVec random_real_vector(Rng& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    RealVec v(n);
    for (int i = 0; i < n; ++i) v[i] = g(rng);
    return v;
}

RealVec random_unit_vector(Rng& rng, int n) {
    for (;;) {
        RealVec v = random_real_vector(rng, n);
        const double len = v.norm();
        if (len > 1e-6) return v / len;
    }
}

Hyperbolic random_hyperbolic(Rng& rng, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    const double p = u(rng);
    const double q = u(rng);
    return {p, q};
}

DVector random_dvector(Rng& rng, int n) {
    RealVec x1 = random_real_vector(rng, n);
    RealVec x2 = random_real_vector(rng, n);
    return {std::move(x1), std::move(x2)};
}

RealMat random_antisymmetric(Rng& rng, int n) {
    const RealMat a = [&] {
        RealMat m(n, n);
        std::normal_distribution<double> g(0.0, 1.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = g(rng);
        return m;
    }();
    return 0.5 * (a - a.transpose());
}

Hyperbolic random_corner_scalar(Rng& rng) {
    std::uniform_int_distribution<int> pick(0, 9);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    switch (pick(rng)) {
        case 0: return Hyperbolic::zero();
        case 1: return Hyperbolic::one();
        case 2: return -Hyperbolic::one();
        case 3: return Hyperbolic::e1();
        case 4: return Hyperbolic::e2();
        case 5: return Hyperbolic::k();
        case 6: return {u(rng), 0.0};
        case 7: return {0.0, u(rng)};
        default: return random_hyperbolic(rng, 2.0);
    }
}

}  // namespace hyp2
