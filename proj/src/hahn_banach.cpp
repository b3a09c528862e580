#include "hyp2/hahn_banach.hpp"

#include <algorithm>
#include <cmath>

#include "dual.hpp"

namespace hyp2 {

namespace {

RealMat antisymmetric_from(const RealVec& ell, const RealVec& z) {
    const double zz = z.squaredNorm();
    if (zz == 0.0) return RealMat::Zero(z.size(), z.size());
    return (ell * z.transpose() - z * ell.transpose()) / zz;
}

void require_gram_det(const D2Norm& norm) {
    if (!norm.is_gram_det()) {
        throw Error(ErrorCode::UnsupportedNorm, "the extension engine works with Gram-determinant 2-norms");
    }
}

void require_case_one(const DVector& z) {
    if (z.is_zero() || is_zero_divisor_element(z)) {
        throw Error(ErrorCode::DegenerateZ, "z is zero or a zero divisor; normalize it first");
    }
}

void check_problem_dims(const ExtensionProblem& p) {
    if (p.f.dim() != p.m.dim() || p.z.size() != p.m.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "M, z and f must share the dimension n");
    }
}

DBilinear2Functional oriented(const ExtensionProblem& p) { return p.swap_domain ? p.f.negated() : p.f; }

}  // namespace

namespace component {

Gap gap(const OrthoBasis& domain, const RealVec& ell, const RealVec& z, const RealVec& x_prime, double norm_f) {
    const detail::DualMultiplier dual = detail::min_norm_multiplier(domain, ell, z);
    if (!dual.feasible) {
        throw Error(ErrorCode::OptimizationFailure, "functional is unbounded on its domain");
    }
    const RealVec b = detail::gram_operator(z, x_prime);
    std::vector<RealVec> cols;
    for (int j = 0; j < dual.a.cols(); ++j) cols.emplace_back(dual.a.col(j));
    const OrthoBasis range(static_cast<int>(z.size()), cols);
    const double b_perp = range.residual(b).norm();

    const double center = dual.mu0.dot(b);
    const double mu2 = dual.mu0.squaredNorm();
    const double slack = norm_f * norm_f - mu2;
    if (slack < -(1e-8 * std::max(norm_f * norm_f, mu2) + 1e-24)) {
        throw Error(ErrorCode::OptimizationFailure,
                    "bracket m0 <= m fails: norm " + std::to_string(norm_f) + " is below the functional's norm " +
                        std::to_string(std::sqrt(mu2)));
    }
    const double half_width = std::sqrt(std::max(0.0, slack)) * b_perp;
    return {center - half_width, center + half_width};
}

Step extend_step(OrthoBasis& domain, RealVec& ell, const RealVec& z, const RealVec& x_prime, double norm_f) {
    const Gap g = gap(domain, ell, z, x_prime, norm_f);
    Step step{x_prime, g.m0, g.m, 0.5 * (g.m0 + g.m)};
    const RealVec d = domain.residual(x_prime);
    if (domain.add(x_prime)) {
        // New values only along the part of x' orthogonal to the old domain.
        ell += ((step.r - ell.dot(x_prime)) / d.squaredNorm()) * d;
    }
    return step;
}

Trace extend(const RealMat& c, const std::vector<RealVec>& basis, const RealVec& z) {
    const int n = static_cast<int>(z.size());
    Trace trace;
    OrthoBasis domain(n, basis);
    trace.ell = c * z;
    trace.norm_f = component_domain_norm(domain, trace.ell, z);
    for (int j = 0; j < n; ++j) {
        const RealVec e = RealVec::Unit(n, j);
        if (domain.contains(e)) continue;
        trace.steps.push_back(extend_step(domain, trace.ell, z, e, trace.norm_f));
    }
    trace.matrix = antisymmetric_from(trace.ell, z);
    Eigen::JacobiSVD<RealMat> svd(trace.matrix);
    trace.norm_F = n > 0 ? svd.singularValues()(0) : 0.0;
    return trace;
}

}  // namespace component

PartialFunctional PartialFunctional::from_matrices(const DBilinear2Functional& f, const DSubmodule& m,
                                                   const DVector& z) {
    if (f.dim() != m.dim() || z.size() != m.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "M, z and f must share the dimension n");
    }
    return {m, z, f.c1() * z.x1(), f.c2() * z.x2()};
}

Hyperbolic PartialFunctional::operator()(const DVector& x, Hyperbolic alpha) const {
    if (x.size() != domain.dim()) throw Error(ErrorCode::DimensionMismatch, "argument has wrong length");
    return alpha * Hyperbolic{ell1.dot(x.x1()), ell2.dot(x.x2())};
}

Hyperbolic PartialFunctional::norm() const {
    return {component_domain_norm(domain.ortho(0), ell1, z.x1()),
            component_domain_norm(domain.ortho(1), ell2, z.x2())};
}

DBilinear2Functional PartialFunctional::to_matrices() const {
    return {antisymmetric_from(ell1, z.x1()), antisymmetric_from(ell2, z.x2())};
}

Hyperbolic ExtensionTrace::apply(const DVector& x, const DVector& z, Hyperbolic alpha) const {
    const DVector az = alpha * z;
    return swapped ? F(az, x) : F(x, az);
}

GapInterval gap_interval(const PartialFunctional& current, const DVector& x_prime, Hyperbolic norm_f) {
    if (x_prime.size() != current.domain.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "generator has wrong length");
    }
    GapInterval out;
    double m0[2], m[2];
    for (int l = 0; l < 2; ++l) {
        const component::Gap g = component::gap(current.domain.ortho(l), current.ell(l), current.z.component(l),
                                                 x_prime.component(l), norm_f[l]);
        m0[l] = g.m0;
        m[l] = g.m;
    }
    out.m0 = {m0[0], m0[1]};
    out.m = {m[0], m[1]};
    const double tol = 1e-9 * std::max({1.0, std::abs(m[0]), std::abs(m[1])});
    if (!leq(out.m0, out.m, tol)) {
        throw Error(ErrorCode::OptimizationFailure, "gap interval is empty");
    }
    return out;
}

GapInterval gap_interval(const ExtensionProblem& problem, const DVector& x_prime) {
    require_gram_det(problem.norm);
    check_problem_dims(problem);
    const PartialFunctional current = PartialFunctional::from_matrices(oriented(problem), problem.m, problem.z);
    return gap_interval(current, x_prime, current.norm());
}

ExtensionStep one_step_extend(const PartialFunctional& current, const DVector& x_prime, Hyperbolic norm_f) {
    require_case_one(current.z);
    if (x_prime.size() != current.domain.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "generator has wrong length");
    }
    ExtensionStep step;
    step.x_prime = x_prime;
    step.g = current;
    double m0[2], m[2], r[2];
    for (int l = 0; l < 2; ++l) {
        OrthoBasis domain = current.domain.ortho(l);
        const component::Step s = component::extend_step(domain, step.g.ell(l), current.z.component(l),
                                                         x_prime.component(l), norm_f[l]);
        m0[l] = s.m0;
        m[l] = s.m;
        r[l] = s.r;
    }
    step.m0 = {m0[0], m0[1]};
    step.m = {m[0], m[1]};
    step.r = {r[0], r[1]};
    if (!current.domain.contains(x_prime)) step.g.domain = current.domain.extend(x_prime);
    return step;
}

ExtensionStep one_step_extend(const ExtensionProblem& problem, const DVector& x_prime) {
    require_gram_det(problem.norm);
    check_problem_dims(problem);
    const PartialFunctional current = PartialFunctional::from_matrices(oriented(problem), problem.m, problem.z);
    return one_step_extend(current, x_prime, current.norm());
}

ExtensionProblem normalize_degenerate_z(const ExtensionProblem& problem) {
    check_problem_dims(problem);
    const DVector& z = problem.z;
    if (!is_zero_divisor_element(z)) {
        throw Error(ErrorCode::NotDegenerate, "z is not a zero divisor");
    }
    const int n = z.size();
    const bool first_vanishes = z.x1().lpNorm<Eigen::Infinity>() <= kEps;
    const int vanishing = first_vanishes ? 0 : 1;
    const RealVec u = z.component(1 - vanishing).norm() * RealVec::Unit(n, 0);

    ExtensionProblem out = problem;
    out.z = vanishing == 0 ? DVector(u, z.x2()) : DVector(z.x1(), u);
    const RealMat zero = RealMat::Zero(n, n);
    out.f = vanishing == 0 ? DBilinear2Functional(zero, problem.f.c2()) : DBilinear2Functional(problem.f.c1(), zero);
    return out;
}

ExtensionTrace full_extend(const ExtensionProblem& problem) {
    require_gram_det(problem.norm);
    check_problem_dims(problem);
    const int n = problem.dim();

    ExtensionTrace trace;
    trace.swapped = problem.swap_domain;
    ExtensionProblem work = problem;
    work.f = oriented(problem);
    work.swap_domain = false;
    trace.norm_f = norm_on_domain(work.f, work.m, work.z);
    trace.z_used = problem.z;

    if (problem.z.is_zero()) {
        trace.zero_branch = true;
        trace.F = DBilinear2Functional::zero(n);
        trace.norm_F = Hyperbolic::zero();
        return trace;
    }
    if (is_zero_divisor_element(problem.z)) {
        work = normalize_degenerate_z(work);
        trace.normalized_z = true;
        trace.z_used = work.z;
    }

    PartialFunctional current = PartialFunctional::from_matrices(work.f, work.m, work.z);
    const Hyperbolic norm_f = current.norm();
    for (int l = 0; l < 2; ++l) {
        for (int j = 0; j < n; ++j) {
            const RealVec e = RealVec::Unit(n, j);
            if (current.domain.contains_component(l, e)) continue;
            ExtensionStep step = one_step_extend(current, DVector::pure(l, e), norm_f);
            current = step.g;
            trace.steps.push_back(std::move(step));
        }
    }

    trace.F = current.to_matrices();
    if (problem.swap_domain) trace.F = trace.F.negated();
    trace.norm_F = norm_spectral(trace.F, problem.norm).value;
    return trace;
}

Hyperbolic corollary_f0_value(Hyperbolic pair_norm, Hyperbolic alpha, Hyperbolic beta) {
    return alpha * beta * pair_norm;
}

CorollaryResult corollary_functional(int n, const DVector& x0, const DVector& y0, const D2Norm& norm) {
    require_gram_det(norm);
    if (x0.size() != n || y0.size() != n) throw Error(ErrorCode::DimensionMismatch, "x0 and y0 must have length n");
    if (is_zero_divisor_element(x0) || is_zero_divisor_element(y0)) {
        throw Error(ErrorCode::ZeroDivisorInput, "x0 and y0 must not be zero divisors");
    }
    for (int l = 0; l < 2; ++l) {
        if (real_dependent(x0.component(l), y0.component(l))) {
            throw Error(ErrorCode::DependentPair, "x0 and y0 are dependent in an idempotent component");
        }
    }

    CorollaryResult out;
    out.pair_norm = norm(x0, y0);
    RealMat c[2];
    for (int l = 0; l < 2; ++l) {
        const RealVec& a = x0.component(l);
        const RealVec& b = y0.component(l);
        // a^T C b = (|a|^2 |b|^2 - (a.b)^2) / ||a, b|| = ||a, b||
        c[l] = (a * b.transpose() - b * a.transpose()) / out.pair_norm[l];
    }
    out.f0 = DBilinear2Functional(c[0], c[1], 1e-9);
    out.domain = DSubmodule(n, {x0.x1()}, {x0.x2()});
    out.norm_f0 = norm_on_domain(out.f0, out.domain, y0);
    out.trace = full_extend({out.domain, y0, out.f0, norm, false});
    out.norm_f = out.trace.norm_F;
    out.f_at_pair = out.trace.F(x0, y0);
    return out;
}

}  // namespace hyp2
