#include "hyp2/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "hyp2/error.hpp"

namespace hyp2 {

namespace {

double span_threshold(const RealVec& v, double tol) { return tol * std::max(1.0, v.norm()); }

RealVec orthogonalize(const std::vector<RealVec>& q, RealVec v) {
    // Two passes of MGS keep the residual orthogonal to working precision.
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& e : q) v -= e.dot(v) * e;
    }
    return v;
}

}  // namespace

OrthoBasis::OrthoBasis(int n, const std::vector<RealVec>& vectors, double tol) : n_(n) {
    std::vector<RealVec> pending;
    pending.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "basis vector has wrong length");
        pending.push_back(v);
    }
    std::vector<double> thresholds;
    for (const auto& v : pending) thresholds.push_back(span_threshold(v, tol));

    std::vector<bool> used(pending.size(), false);
    for (;;) {
        int best = -1;
        double best_norm = 0.0;
        for (std::size_t i = 0; i < pending.size(); ++i) {
            if (used[i]) continue;
            const double r = orthogonalize(q_, pending[i]).norm();
            if (r > thresholds[i] && r > best_norm) {
                best_norm = r;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) break;
        used[best] = true;
        const RealVec r = orthogonalize(q_, pending[best]);
        q_.push_back(r / r.norm());
    }
}

RealMat OrthoBasis::matrix() const {
    RealMat m(n_, rank());
    for (int j = 0; j < rank(); ++j) m.col(j) = q_[j];
    return m;
}

RealVec OrthoBasis::project(const RealVec& v) const { return v - residual(v); }

RealVec OrthoBasis::residual(const RealVec& v) const {
    if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "vector has wrong length");
    return orthogonalize(q_, v);
}

bool OrthoBasis::contains(const RealVec& v, double tol) const {
    return residual(v).norm() <= span_threshold(v, tol);
}

bool OrthoBasis::add(const RealVec& v, double tol) {
    const RealVec r = residual(v);
    const double rn = r.norm();
    if (rn <= span_threshold(v, tol)) return false;
    q_.push_back(r / rn);
    return true;
}

int real_rank(int n, const std::vector<RealVec>& vectors, double tol) {
    return OrthoBasis(n, vectors, tol).rank();
}

bool real_dependent(const RealVec& x, const RealVec& y, double tol) {
    if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "vectors differ in length");
    return real_rank(static_cast<int>(x.size()), {x, y}, tol) < 2;
}

double wedge_norm(const RealVec& x, const RealVec& y) {
    if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "vectors differ in length");
    const Eigen::Index n = x.size();
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double m = x[i] * y[j] - x[j] * y[i];
            s += m * m;
        }
    }
    return std::sqrt(s);
}

}  // namespace hyp2
