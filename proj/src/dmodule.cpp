#include "hyp2/dmodule.hpp"

#include <cmath>

namespace hyp2 {

DVector::DVector(RealVec x1, RealVec x2) : x1_(std::move(x1)), x2_(std::move(x2)) {
    if (x1_.size() != x2_.size()) {
        throw Error(ErrorCode::DimensionMismatch, "idempotent components differ in length");
    }
}

DVector::DVector(const std::vector<Hyperbolic>& coords)
    : x1_(static_cast<Eigen::Index>(coords.size())), x2_(static_cast<Eigen::Index>(coords.size())) {
    for (std::size_t i = 0; i < coords.size(); ++i) {
        x1_[static_cast<Eigen::Index>(i)] = coords[i].p;
        x2_[static_cast<Eigen::Index>(i)] = coords[i].q;
    }
}

std::vector<Hyperbolic> DVector::coords() const {
    std::vector<Hyperbolic> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i = 0; i < size(); ++i) out.push_back(coord(i));
    return out;
}

bool DVector::is_zero(double tol) const {
    return x1_.lpNorm<Eigen::Infinity>() <= tol && x2_.lpNorm<Eigen::Infinity>() <= tol;
}

DVector& DVector::operator+=(const DVector& o) {
    if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "DVector sizes differ");
    x1_ += o.x1_;
    x2_ += o.x2_;
    return *this;
}

DVector& DVector::operator-=(const DVector& o) {
    if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "DVector sizes differ");
    x1_ -= o.x1_;
    x2_ -= o.x2_;
    return *this;
}

std::pair<RealVec, RealVec> split(const DVector& x) { return {x.x1(), x.x2()}; }

DVector join(const RealVec& x1, const RealVec& x2) { return {x1, x2}; }

bool is_zero_divisor_element(const DVector& x, double tol) {
    const bool z1 = x.x1().lpNorm<Eigen::Infinity>() <= tol;
    const bool z2 = x.x2().lpNorm<Eigen::Infinity>() <= tol;
    return z1 != z2;
}

bool linear_dependent(const DVector& x, const DVector& y, double tol) {
    if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "DVector sizes differ");
    return real_dependent(x.x1(), y.x1(), tol) && real_dependent(x.x2(), y.x2(), tol);
}

bool approx_equal(const DVector& x, const DVector& y, double tol) {
    if (x.size() != y.size()) return false;
    return (x.x1() - y.x1()).lpNorm<Eigen::Infinity>() <= tol &&
           (x.x2() - y.x2()).lpNorm<Eigen::Infinity>() <= tol;
}

DSubmodule::DSubmodule(int n, std::vector<RealVec> basis1, std::vector<RealVec> basis2)
    : n_(n), basis1_(std::move(basis1)), basis2_(std::move(basis2)) {
    if (n < 1) throw Error(ErrorCode::DimensionMismatch, "submodule of D^n needs n >= 1");
    ortho1_ = OrthoBasis(n, basis1_);
    ortho2_ = OrthoBasis(n, basis2_);
    if (ortho1_.rank() != component_dim(0) || ortho2_.rank() != component_dim(1)) {
        throw Error(ErrorCode::InvalidSubmodule, "basis lists must be linearly independent");
    }
}

DSubmodule DSubmodule::whole(int n) {
    std::vector<RealVec> e;
    for (int j = 0; j < n; ++j) e.push_back(RealVec::Unit(n, j));
    return {n, e, e};
}

bool DSubmodule::contains(const DVector& x) const {
    if (x.size() != n_) throw Error(ErrorCode::DimensionMismatch, "vector and submodule dimensions differ");
    return ortho1_.contains(x.x1()) && ortho2_.contains(x.x2());
}

DSubmodule DSubmodule::extend(const DVector& x_prime) const {
    if (contains(x_prime)) throw Error(ErrorCode::AlreadyContained, "generator already lies in the submodule");
    auto b1 = basis1_;
    auto b2 = basis2_;
    if (!ortho1_.contains(x_prime.x1())) b1.push_back(x_prime.x1());
    if (!ortho2_.contains(x_prime.x2())) b2.push_back(x_prime.x2());
    return {n_, std::move(b1), std::move(b2)};
}

bool submodule_contains(const DSubmodule& m, const DVector& x) { return m.contains(x); }

DSubmodule submodule_extend(const DSubmodule& m, const DVector& x_prime) { return m.extend(x_prime); }

}  // namespace hyp2
