#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "hyp2/dmodule.hpp"

namespace hyp2 {

// Real 2-norm on R^n: a symmetric, absolutely homogeneous function of a pair
// that vanishes exactly on dependent pairs and is subadditive in each slot.
class Real2Norm {
public:
    using Fn = std::function<double(const RealVec&, const RealVec&)>;

    Real2Norm(std::string kind, Fn fn) : kind_(std::move(kind)), fn_(std::move(fn)) {}

    // sqrt(|x|^2 |y|^2 - <x,y>^2), the area of the parallelogram on x and y.
    static Real2Norm gram_det();

    double operator()(const RealVec& x, const RealVec& y) const { return fn_(x, y); }
    const std::string& kind() const { return kind_; }
    bool is_gram_det() const { return kind_ == "gramdet"; }

private:
    std::string kind_;
    Fn fn_;
};

double gram_det_2norm(const RealVec& x, const RealVec& y);

using D2NormFn = std::function<Hyperbolic(const DVector&, const DVector&)>;

// D-valued 2-norm lifted from one real 2-norm per idempotent component:
// ||x, y||_D = e1 ||x1, y1||_1 + e2 ||x2, y2||_2.
struct D2Norm {
    Real2Norm norm1 = Real2Norm::gram_det();
    Real2Norm norm2 = Real2Norm::gram_det();

    static D2Norm gram_det() { return {}; }

    const Real2Norm& component(int l) const { return l == 0 ? norm1 : norm2; }
    bool is_gram_det() const { return norm1.is_gram_det() && norm2.is_gram_det(); }

    Hyperbolic operator()(const DVector& x, const DVector& y) const;
    D2NormFn as_function() const;
};

Hyperbolic eval_d(const D2Norm& norm, const DVector& x, const DVector& y);

// Split of a black-box D-valued 2-norm into the real
// 2-norms it induces on e1*X and e2*X.
struct NormDecomposition {
    Real2Norm phi;  // on e1 X
    Real2Norm psi;  // on e2 X

    Hyperbolic reconstruct(const DVector& x, const DVector& y) const {
        return {phi(x.x1(), y.x1()), psi(x.x2(), y.x2())};
    }
};

struct AxiomCheckOptions {
    int samples = 1000;
    std::uint64_t seed = 1;
    double tol = 1e-9;
};

// Worst relative violation of each 2-norm axiom over the sampled inputs.
//   i   : vanishing exactly on dependent pairs
//   ii  : symmetry
//   iii : |alpha|_k homogeneity, including zero-divisor scalars and k
//   iv  : triangle inequality in the first slot
struct AxiomReport {
    int dim = 0;
    int samples = 0;
    std::array<double, 4> worst{};
    std::array<bool, 4> pass{};
    int independent_zero_hits = 0;  // D-independent pairs that evaluated to 0

    bool all_pass() const { return pass[0] && pass[1] && pass[2] && pass[3]; }
};

inline constexpr std::array<const char*, 4> kAxiomNames = {"i", "ii", "iii", "iv"};

AxiomReport axiom_check(const D2NormFn& norm, int n, const AxiomCheckOptions& opts = {});
AxiomReport axiom_check(const D2Norm& norm, int n, const AxiomCheckOptions& opts = {});

// Throws AxiomViolation when spot checks on probe inputs fail.
NormDecomposition decompose(const D2NormFn& norm, int n, std::uint64_t seed = 7);

// True iff both idempotent coordinates of ||x_k - x0, y||_D stay below tol
// for every probe y over the tail window (last 25%) of the sequence.
bool sequence_converges(const D2Norm& norm, std::span<const DVector> seq, const DVector& x0,
                        std::span<const DVector> probes, double tol);

}  // namespace hyp2
