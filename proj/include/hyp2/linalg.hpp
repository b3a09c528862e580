#pragma once

#include <vector>

#include <Eigen/Dense>

namespace hyp2 {

using RealVec = Eigen::VectorXd;
using RealMat = Eigen::MatrixXd;

// Residual threshold for rank and span-membership tests. Applied relative to
// max(1, |v|) so unit-scale and large vectors are treated alike.
inline constexpr double kSpanTol = 1e-9;

// Orthonormal basis of span(vectors) in R^n, built by pivoted modified
// Gram-Schmidt: at every stage the remaining vector with the largest residual
// is orthogonalized next, and residuals below kSpanTol are treated as zero.
class OrthoBasis {
public:
    explicit OrthoBasis(int n = 0) : n_(n) {}
    OrthoBasis(int n, const std::vector<RealVec>& vectors, double tol = kSpanTol);

    int ambient_dim() const { return n_; }
    int rank() const { return static_cast<int>(q_.size()); }
    const std::vector<RealVec>& vectors() const { return q_; }

    // n x rank matrix of orthonormal columns.
    RealMat matrix() const;

    RealVec project(const RealVec& v) const;
    RealVec residual(const RealVec& v) const;
    bool contains(const RealVec& v, double tol = kSpanTol) const;

    // Appends the normalized residual of v when v is outside the span.
    // Returns true when the rank grew.
    bool add(const RealVec& v, double tol = kSpanTol);

private:
    int n_;
    std::vector<RealVec> q_;
};

int real_rank(int n, const std::vector<RealVec>& vectors, double tol = kSpanTol);
bool real_dependent(const RealVec& x, const RealVec& y, double tol = kSpanTol);

// Euclidean norm of the bivector x ^ y, i.e. the area of the parallelogram
// spanned by x and y. Summed over 2x2 minors; this avoids the cancellation of
// |x|^2|y|^2 - <x,y>^2 on nearly dependent pairs.
double wedge_norm(const RealVec& x, const RealVec& y);

}  // namespace hyp2
