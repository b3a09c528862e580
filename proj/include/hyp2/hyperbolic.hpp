#pragma once

#include <span>

#include "hyp2/error.hpp"

namespace hyp2 {

// Shared zero/equality tolerance for scalar tests.
inline constexpr double kEps = 1e-12;

// An element of the hyperbolic ring D = R[k]/(k^2 - 1), stored in the
// idempotent basis e1 = (1+k)/2, e2 = (1-k)/2:  z = e1*p + e2*q.
// Every ring operation is componentwise in this basis; the cartesian form
// a + k b is a view with a = (p+q)/2, b = (p-q)/2.
struct Hyperbolic {
    double p = 0.0;
    double q = 0.0;

    constexpr Hyperbolic() = default;
    constexpr Hyperbolic(double p_, double q_) : p(p_), q(q_) {}

    static constexpr Hyperbolic real(double x) { return {x, x}; }
    static constexpr Hyperbolic from_cartesian(double a, double b) { return {a + b, a - b}; }
    static constexpr Hyperbolic zero() { return {0.0, 0.0}; }
    static constexpr Hyperbolic one() { return {1.0, 1.0}; }
    static constexpr Hyperbolic e1() { return {1.0, 0.0}; }
    static constexpr Hyperbolic e2() { return {0.0, 1.0}; }
    static constexpr Hyperbolic k() { return {1.0, -1.0}; }

    constexpr double a() const { return 0.5 * (p + q); }
    constexpr double b() const { return 0.5 * (p - q); }

    // Idempotent coordinate by index, l in {0, 1}.
    constexpr double operator[](int l) const { return l == 0 ? p : q; }

    bool is_zero(double tol = kEps) const;
    bool is_real(double tol = kEps) const;
    bool is_zero_divisor(double tol = kEps) const;
    bool is_invertible(double tol = kEps) const;
    bool is_nonnegative(double tol = kEps) const;

    constexpr Hyperbolic& operator+=(Hyperbolic o) { p += o.p; q += o.q; return *this; }
    constexpr Hyperbolic& operator-=(Hyperbolic o) { p -= o.p; q -= o.q; return *this; }
    constexpr Hyperbolic& operator*=(Hyperbolic o) { p *= o.p; q *= o.q; return *this; }
    constexpr Hyperbolic& operator*=(double s) { p *= s; q *= s; return *this; }

    friend constexpr bool operator==(Hyperbolic, Hyperbolic) = default;
};

constexpr Hyperbolic operator+(Hyperbolic x, Hyperbolic y) { return {x.p + y.p, x.q + y.q}; }
constexpr Hyperbolic operator-(Hyperbolic x, Hyperbolic y) { return {x.p - y.p, x.q - y.q}; }
constexpr Hyperbolic operator-(Hyperbolic x) { return {-x.p, -x.q}; }
constexpr Hyperbolic operator*(Hyperbolic x, Hyperbolic y) { return {x.p * y.p, x.q * y.q}; }
constexpr Hyperbolic operator*(double s, Hyperbolic x) { return {s * x.p, s * x.q}; }
constexpr Hyperbolic operator*(Hyperbolic x, double s) { return {s * x.p, s * x.q}; }

constexpr Hyperbolic mul(Hyperbolic x, Hyperbolic y) { return x * y; }

// a + kb -> a - kb, which swaps the idempotent coordinates.
constexpr Hyperbolic conj_dagger(Hyperbolic z) { return {z.q, z.p}; }

// z^-1 = z^dagger / (z z^dagger). Throws NotInvertible for zero and zero divisors.
Hyperbolic inverse(Hyperbolic z, double tol = kEps);

// |z|_k = e1|p| + e2|q|, always in D+.
Hyperbolic modulus_k(Hyperbolic z);

enum class Order { LessEq, GreaterEq, Equal, Incomparable };

// Partial order z <=' u iff u - z in D+.
Order leq_prime(Hyperbolic z, Hyperbolic u, double tol = kEps);

// Convenience: true when z <=' u (Equal counts).
bool leq(Hyperbolic z, Hyperbolic u, double tol = kEps);

bool approx_equal(Hyperbolic x, Hyperbolic y, double tol = kEps);

// Componentwise supremum / infimum of a finite non-empty collection.
Hyperbolic sup_d(std::span<const Hyperbolic> values);
Hyperbolic inf_d(std::span<const Hyperbolic> values);

// Componentwise max/min of two values (binary lattice join/meet).
constexpr Hyperbolic join(Hyperbolic x, Hyperbolic y) {
    return {x.p > y.p ? x.p : y.p, x.q > y.q ? x.q : y.q};
}
constexpr Hyperbolic meet(Hyperbolic x, Hyperbolic y) {
    return {x.p < y.p ? x.p : y.p, x.q < y.q ? x.q : y.q};
}

const char* to_string(Order order) noexcept;

}  // namespace hyp2
