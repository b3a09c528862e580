#include <doctest.h>

#include <vector>

#include "hyp2/two_norm.hpp"
#include "support/oracles.hpp"

using namespace hyp2;

namespace {
RealVec v2(double a, double b) { return (RealVec(2) << a, b).finished(); }
}  // namespace

TEST_CASE("eval_d on the standard pair") {
    const D2Norm norm = D2Norm::gram_det();
    const DVector x(v2(1, 0), v2(1, 0));
    const DVector y(v2(0, 1), v2(0, 2));
    const Hyperbolic v = eval_d(norm, x, y);
    CHECK(v.p == doctest::Approx(1.0));
    CHECK(v.q == doctest::Approx(2.0));
    CHECK(eval_d(norm, x, x) == Hyperbolic::zero());
    CHECK_THROWS_AS(eval_d(norm, x, DVector::zero(3)), Error);
}

TEST_CASE("wedge evaluation matches the Gram matrix determinant") {
    Rng rng(8);
    for (int n = 2; n <= 6; ++n) {
        for (int i = 0; i < 200; ++i) {
            const RealVec x = random_real_vector(rng, n), y = random_real_vector(rng, n);
            CHECK(gram_det_2norm(x, y) == doctest::Approx(oracle::gram_matrix_2norm(x, y)).epsilon(1e-10));
        }
    }
    // Nearly parallel vectors: the Gram formula cancels, the wedge sum does not.
    const RealVec x = v2(1, 1e-9), y = v2(1, 0);
    CHECK(gram_det_2norm(x, y) == doctest::Approx(1e-9).epsilon(1e-12));
}

TEST_CASE("axiom_check passes for the Gram-determinant norm") {
    for (int n : {2, 3, 4}) {
        const AxiomReport r = axiom_check(D2Norm::gram_det(), n, {.samples = 1000, .seed = 3, .tol = 1e-9});
        CHECK(r.all_pass());
        CHECK(r.independent_zero_hits == 0);
        for (double w : r.worst) CHECK(w <= 1e-9);
    }
}

TEST_CASE("axiom_check flags the quasi-norm fixture on the triangle inequality") {
    for (int n : {3, 4}) {
        const AxiomReport r = axiom_check(oracle::broken_d2norm(), n, {.samples = 1000, .seed = 3, .tol = 1e-9});
        CHECK(r.pass[0]);
        CHECK(r.pass[1]);
        CHECK(r.pass[2]);
        CHECK_FALSE(r.pass[3]);
        CHECK(r.worst[3] > 1e-3);
    }
}

TEST_CASE("axiom_check flags an asymmetric map") {
    const D2NormFn lopsided = [](const DVector& x, const DVector& y) {
        const Hyperbolic g = D2Norm::gram_det()(x, y);
        return Hyperbolic{g.p * (1.0 + x.x1().norm()), g.q};
    };
    const AxiomReport r = axiom_check(lopsided, 3);
    CHECK_FALSE(r.pass[1]);
}

TEST_CASE("decompose reconstructs the norm") {
    const D2Norm norm = D2Norm::gram_det();
    const NormDecomposition d = decompose(norm.as_function(), 3);
    Rng rng(9);
    for (int i = 0; i < 500; ++i) {
        const DVector x = random_dvector(rng, 3), y = random_dvector(rng, 3);
        CHECK(oracle::rel_err(d.reconstruct(x, y), norm(x, y)) <= 1e-12);
        CHECK(norm(DVector::pure_e1(x.x1()), DVector::pure_e1(y.x1())).q == 0.0);
    }
    CHECK_THROWS_AS(decompose(oracle::broken_d2norm(), 3), Error);
}

TEST_CASE("sequence_converges") {
    const D2Norm norm = D2Norm::gram_det();
    const DVector x0(v2(1, 2), v2(-1, 0));
    const std::vector<DVector> probes = {DVector::real(v2(1, 0)), DVector::real(v2(0, 1))};

    std::vector<DVector> tending;
    for (int k = 1; k <= 200; ++k) {
        tending.push_back(x0 + Hyperbolic::real(1.0 / (k * k)) * DVector::real(v2(1, 1)));
    }
    CHECK(sequence_converges(norm, tending, x0, probes, 1e-3));

    std::vector<DVector> stuck(200, x0 + DVector::pure_e2(v2(1, 1)));
    CHECK_FALSE(sequence_converges(norm, stuck, x0, probes, 1e-3));

    // A sequence moving only along a probe direction is invisible to that probe.
    const std::vector<DVector> single = {probes[0]};
    std::vector<DVector> along(50, x0 + DVector::real(v2(5, 0)));
    CHECK(sequence_converges(norm, along, x0, single, 1e-9));

    CHECK_FALSE(sequence_converges(norm, {}, x0, probes, 1e-3));
    CHECK_FALSE(sequence_converges(norm, tending, x0, {}, 1e-3));
}

TEST_CASE("invariance under adding multiples and exact symmetry") {
    const D2Norm norm = D2Norm::gram_det();
    Rng rng(10);
    for (int i = 0; i < 500; ++i) {
        const DVector x = random_dvector(rng, 3), y = random_dvector(rng, 3);
        const Hyperbolic a = random_corner_scalar(rng);
        CHECK(oracle::rel_err(eval_d(norm, x, y + a * x), eval_d(norm, x, y)) <= 1e-12);
        CHECK(norm(x, y) == norm(y, x));
        CHECK(linear_dependent(x, a * x));
        CHECK(oracle::rel_err(norm(x, a * x), Hyperbolic::zero()) <= 1e-12);
    }
}

TEST_CASE("sequence_converges on constant and alternating sequences") {
    const D2Norm norm = D2Norm::gram_det();
    const DVector x0 = DVector::real((RealVec(3) << 1, 0, 2).finished());
    const std::vector<DVector> probes = {DVector::real((RealVec(3) << 0, 1, 0).finished()),
                                         DVector::real((RealVec(3) << 0, 0, 1).finished())};
    const std::vector<DVector> constant(40, x0);
    CHECK(sequence_converges(norm, constant, x0, probes, 1e-12));

    const DVector other = DVector::real((RealVec(3) << -1, 3, 0).finished());
    std::vector<DVector> alternating;
    for (int k = 0; k < 40; ++k) alternating.push_back(k % 2 ? x0 : other);
    CHECK_FALSE(sequence_converges(norm, alternating, x0, probes, 1e-3));
}
