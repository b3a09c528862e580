#pragma once

#include <utility>
#include <vector>

#include "hyp2/hyperbolic.hpp"
#include "hyp2/linalg.hpp"

namespace hyp2 {

// Element of the free module D^n, held in its idempotent split
// x = e1*x1 + e2*x2 with x1, x2 in R^n.
class DVector {
public:
    DVector() = default;
    explicit DVector(int n) : x1_(RealVec::Zero(n)), x2_(RealVec::Zero(n)) {}
    DVector(RealVec x1, RealVec x2);
    explicit DVector(const std::vector<Hyperbolic>& coords);

    static DVector zero(int n) { return DVector(n); }
    // A real vector (conjugation-fixed): x1 = x2 = v.
    static DVector real(const RealVec& v) { return {v, v}; }
    static DVector pure_e1(const RealVec& v) { return {v, RealVec::Zero(v.size())}; }
    static DVector pure_e2(const RealVec& v) { return {RealVec::Zero(v.size()), v}; }
    // Element living in a single idempotent component, l in {0, 1}.
    static DVector pure(int l, const RealVec& v) { return l == 0 ? pure_e1(v) : pure_e2(v); }

    int size() const { return static_cast<int>(x1_.size()); }
    Hyperbolic coord(int i) const { return {x1_[i], x2_[i]}; }
    std::vector<Hyperbolic> coords() const;

    const RealVec& x1() const { return x1_; }
    const RealVec& x2() const { return x2_; }
    const RealVec& component(int l) const { return l == 0 ? x1_ : x2_; }

    bool is_zero(double tol = kEps) const;

    DVector& operator+=(const DVector& o);
    DVector& operator-=(const DVector& o);

    friend DVector operator+(DVector x, const DVector& y) { return x += y; }
    friend DVector operator-(DVector x, const DVector& y) { return x -= y; }
    friend DVector operator-(const DVector& x) { return {-x.x1_, -x.x2_}; }
    friend DVector operator*(Hyperbolic a, const DVector& x) { return {a.p * x.x1_, a.q * x.x2_}; }

private:
    RealVec x1_;
    RealVec x2_;
};

std::pair<RealVec, RealVec> split(const DVector& x);
DVector join(const RealVec& x1, const RealVec& x2);

// Membership in NC_X: non-zero with one vanishing idempotent component.
bool is_zero_divisor_element(const DVector& x, double tol = kEps);

// Dependence over D, read as real dependence in both idempotent components.
bool linear_dependent(const DVector& x, const DVector& y, double tol = kSpanTol);

bool approx_equal(const DVector& x, const DVector& y, double tol);

// Submodule M = e1*M1 + e2*M2 of D^n, given by a spanning list for each real
// component. Lists must be linearly independent; the given vectors are kept
// verbatim alongside an orthonormal basis used for membership tests.
class DSubmodule {
public:
    DSubmodule() = default;
    DSubmodule(int n, std::vector<RealVec> basis1, std::vector<RealVec> basis2);

    static DSubmodule zero(int n) { return {n, {}, {}}; }
    static DSubmodule whole(int n);

    int dim() const { return n_; }
    const std::vector<RealVec>& basis1() const { return basis1_; }
    const std::vector<RealVec>& basis2() const { return basis2_; }
    const std::vector<RealVec>& basis(int l) const { return l == 0 ? basis1_ : basis2_; }
    const OrthoBasis& ortho(int l) const { return l == 0 ? ortho1_ : ortho2_; }
    int component_dim(int l) const { return static_cast<int>(basis(l).size()); }
    bool is_whole() const { return component_dim(0) == n_ && component_dim(1) == n_; }

    bool contains(const DVector& x) const;
    bool contains_component(int l, const RealVec& v) const { return ortho(l).contains(v); }

    // M + D*x'. Each component grows by x'_l only when x'_l is outside the span.
    DSubmodule extend(const DVector& x_prime) const;

private:
    int n_ = 0;
    std::vector<RealVec> basis1_;
    std::vector<RealVec> basis2_;
    OrthoBasis ortho1_;
    OrthoBasis ortho2_;
};

bool submodule_contains(const DSubmodule& m, const DVector& x);
DSubmodule submodule_extend(const DSubmodule& m, const DVector& x_prime);

}  // namespace hyp2
