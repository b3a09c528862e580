#include "dual.hpp"

#include <algorithm>

#include "hyp2/error.hpp"

namespace hyp2::detail {

RealVec gram_operator(const RealVec& z, const RealVec& x) {
    const double zn = z.norm();
    if (zn == 0.0) return RealVec::Zero(x.size());
    const RealVec zh = z / zn;
    return zn * (x - zh * zh.dot(x));
}

DualMultiplier min_norm_multiplier(const OrthoBasis& domain, const RealVec& ell, const RealVec& z) {
    const int n = domain.ambient_dim();
    if (ell.size() != n || z.size() != n) throw Error(ErrorCode::DimensionMismatch, "functional and domain sizes differ");

    DualMultiplier out;
    const int k = domain.rank();
    out.a = RealMat(n, k);
    RealVec g(k);
    for (int j = 0; j < k; ++j) {
        out.a.col(j) = gram_operator(z, domain.vectors()[j]);
        g[j] = domain.vectors()[j].dot(ell);
    }
    if (k == 0) {
        out.mu0 = RealVec::Zero(n);
        return out;
    }
    Eigen::CompleteOrthogonalDecomposition<RealMat> cod;
    cod.setThreshold(1e-10);
    cod.compute(out.a.transpose());
    out.mu0 = cod.solve(g);
    const double resid = (out.a.transpose() * out.mu0 - g).norm();
    out.feasible = resid <= 1e-8 * std::max(1.0, g.norm());
    return out;
}

}  // namespace hyp2::detail
