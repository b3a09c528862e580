#include "hyp2/hyperbolic.hpp"

#include <algorithm>
#include <cmath>

namespace hyp2 {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::EmptyCollection: return "EmptyCollection";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidSubmodule: return "InvalidSubmodule";
        case ErrorCode::AlreadyContained: return "AlreadyContained";
        case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
        case ErrorCode::AxiomViolation: return "AxiomViolation";
        case ErrorCode::OptimizationFailure: return "OptimizationFailure";
        case ErrorCode::DegenerateZ: return "DegenerateZ";
        case ErrorCode::NotDegenerate: return "NotDegenerate";
        case ErrorCode::DependentPair: return "DependentPair";
        case ErrorCode::ZeroDivisorInput: return "ZeroDivisorInput";
        case ErrorCode::UnsupportedNorm: return "UnsupportedNorm";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::BadDims: return "BadDims";
    }
    return "Unknown";
}

bool Hyperbolic::is_zero(double tol) const { return std::abs(p) <= tol && std::abs(q) <= tol; }

bool Hyperbolic::is_real(double tol) const { return std::abs(p - q) <= tol; }

bool Hyperbolic::is_zero_divisor(double tol) const {
    const bool p0 = std::abs(p) <= tol;
    const bool q0 = std::abs(q) <= tol;
    return p0 != q0;
}

bool Hyperbolic::is_invertible(double tol) const { return std::abs(p) > tol && std::abs(q) > tol; }

bool Hyperbolic::is_nonnegative(double tol) const { return p >= -tol && q >= -tol; }

Hyperbolic inverse(Hyperbolic z, double tol) {
    if (!z.is_invertible(tol)) {
        throw Error(ErrorCode::NotInvertible, "zero or zero divisor has no inverse");
    }
    // z^dagger / (z z^dagger); z z^dagger = p*q in both coordinates.
    const double norm = z.p * z.q;
    const Hyperbolic d = conj_dagger(z);
    return {d.p / norm, d.q / norm};
}

Hyperbolic modulus_k(Hyperbolic z) { return {std::abs(z.p), std::abs(z.q)}; }

Order leq_prime(Hyperbolic z, Hyperbolic u, double tol) {
    const double dp = u.p - z.p;
    const double dq = u.q - z.q;
    const bool eq = std::abs(dp) <= tol && std::abs(dq) <= tol;
    if (eq) return Order::Equal;
    if (dp >= -tol && dq >= -tol) return Order::LessEq;
    if (dp <= tol && dq <= tol) return Order::GreaterEq;
    return Order::Incomparable;
}

bool leq(Hyperbolic z, Hyperbolic u, double tol) {
    const Order o = leq_prime(z, u, tol);
    return o == Order::LessEq || o == Order::Equal;
}

bool approx_equal(Hyperbolic x, Hyperbolic y, double tol) {
    return std::abs(x.p - y.p) <= tol && std::abs(x.q - y.q) <= tol;
}

Hyperbolic sup_d(std::span<const Hyperbolic> values) {
    if (values.empty()) throw Error(ErrorCode::EmptyCollection, "sup_D of an empty collection");
    Hyperbolic s = values.front();
    for (const auto& v : values.subspan(1)) s = join(s, v);
    return s;
}

Hyperbolic inf_d(std::span<const Hyperbolic> values) {
    if (values.empty()) throw Error(ErrorCode::EmptyCollection, "inf_D of an empty collection");
    Hyperbolic s = values.front();
    for (const auto& v : values.subspan(1)) s = meet(s, v);
    return s;
}

const char* to_string(Order order) noexcept {
    switch (order) {
        case Order::LessEq: return "LessEq";
        case Order::GreaterEq: return "GreaterEq";
        case Order::Equal: return "Equal";
        case Order::Incomparable: return "Incomparable";
    }
    return "?";
}

}  // namespace hyp2
