#pragma once

// The bicomplex ring T = { z1 + i2*z2 : z1, z2 in C(i1) } with commuting units
// i1^2 = i2^2 = -1 and j = i1*i2, j^2 = 1.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "bicomplex/error.hpp"

namespace bicomplex {

/// An element of C(i1). The imaginary part is the coefficient of i1.
using complex = std::complex<double>;

/// Multiplication by i1, exact (no rounding).
constexpr complex times_i1(complex z) noexcept { return {-z.imag(), z.real()}; }

inline bool is_finite(complex z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Coefficients of e1 and e2 in w = p1*e1 + p2*e2, i.e. (P1(w), P2(w)).
struct IdempotentPair {
    complex p1;
    complex p2;

    friend bool operator==(const IdempotentPair&, const IdempotentPair&) = default;
};

enum class Conjugation { dag1, dag2, dag3 };

class Bicomplex {
public:
    constexpr Bicomplex() = default;
    constexpr Bicomplex(double x) : z1_(x) {}
    constexpr Bicomplex(complex z1, complex z2 = {}) : z1_(z1), z2_(z2) {}

    /// x1 + x2*i1 + x3*i2 + x4*j.
    static constexpr Bicomplex from_four_reals(double x1, double x2, double x3, double x4) {
        return {complex{x1, x2}, complex{x3, x4}};
    }

    static constexpr Bicomplex i1() { return {complex{0, 1}, {}}; }
    static constexpr Bicomplex i2() { return {{}, complex{1, 0}}; }
    static constexpr Bicomplex j() { return {{}, complex{0, 1}}; }
    static constexpr Bicomplex e1() { return {complex{0.5, 0}, complex{0, 0.5}}; }
    static constexpr Bicomplex e2() { return {complex{0.5, 0}, complex{0, -0.5}}; }

    constexpr complex z1() const { return z1_; }
    constexpr complex z2() const { return z2_; }

    constexpr std::array<double, 4> four_reals() const {
        return {z1_.real(), z1_.imag(), z2_.real(), z2_.imag()};
    }

    bool finite() const noexcept { return is_finite(z1_) && is_finite(z2_); }

    /// Exact componentwise comparison. Use approx_equal() for tolerances.
    friend constexpr bool operator==(const Bicomplex&, const Bicomplex&) = default;

    friend Bicomplex operator-(const Bicomplex& w) { return {-w.z1_, -w.z2_}; }

    friend Bicomplex operator+(const Bicomplex& a, const Bicomplex& b) {
        return checked({a.z1_ + b.z1_, a.z2_ + b.z2_}, "addition");
    }
    friend Bicomplex operator-(const Bicomplex& a, const Bicomplex& b) {
        return checked({a.z1_ - b.z1_, a.z2_ - b.z2_}, "subtraction");
    }
    friend Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
        return checked({a.z1_ * b.z1_ - a.z2_ * b.z2_, a.z1_ * b.z2_ + a.z2_ * b.z1_},
                       "multiplication");
    }
    friend Bicomplex operator/(const Bicomplex& a, const Bicomplex& b);

    Bicomplex& operator+=(const Bicomplex& b) { return *this = *this + b; }
    Bicomplex& operator-=(const Bicomplex& b) { return *this = *this - b; }
    Bicomplex& operator*=(const Bicomplex& b) { return *this = *this * b; }
    Bicomplex& operator/=(const Bicomplex& b) { return *this = *this / b; }

private:
    static Bicomplex checked(Bicomplex r, const char* op) {
        if (!r.finite()) throw non_finite(std::string("non-finite result in ") + op);
        return r;
    }

    complex z1_{};
    complex z2_{};
};

/// Hyperbolic (duplex) number x + j*y.
struct Duplex {
    double x = 0;
    double y = 0;

    constexpr Bicomplex to_bicomplex() const { return {complex{x, 0}, complex{0, y}}; }
    /// Reads the 1 and j coefficients; other coefficients are discarded.
    static constexpr Duplex from_bicomplex(const Bicomplex& w) {
        return {w.z1().real(), w.z2().imag()};
    }

    friend bool operator==(const Duplex&, const Duplex&) = default;
};

// ---------------------------------------------------------------------------
// Idempotent decomposition

inline IdempotentPair to_idempotent(const Bicomplex& w) {
    return {w.z1() - times_i1(w.z2()), w.z1() + times_i1(w.z2())};
}

inline Bicomplex from_idempotent(const IdempotentPair& p) {
    return {(p.p1 + p.p2) * 0.5, times_i1((p.p1 - p.p2) * 0.5)};
}

inline complex project1(const Bicomplex& w) { return w.z1() - times_i1(w.z2()); }
inline complex project2(const Bicomplex& w) { return w.z1() + times_i1(w.z2()); }

/// Idempotent pair from four reals, ((x1+x4) + i1(x2-x3), (x1-x4) + i1(x2+x3)).
inline IdempotentPair idempotent_from_four_reals(double x1, double x2, double x3, double x4) {
    return {complex{x1 + x4, x2 - x3}, complex{x1 - x4, x2 + x3}};
}

/// Applies a scalar function to each idempotent component and reassembles.
template <typename F>
Bicomplex map_components(const Bicomplex& w, F&& f) {
    const auto p = to_idempotent(w);
    return from_idempotent({f(p.p1), f(p.p2)});
}

// ---------------------------------------------------------------------------
// Conjugates, norms, singularity

inline Bicomplex conj(const Bicomplex& w, Conjugation kind) {
    switch (kind) {
    case Conjugation::dag1: return {std::conj(w.z1()), std::conj(w.z2())};
    case Conjugation::dag2: return {w.z1(), -w.z2()};
    case Conjugation::dag3: return {std::conj(w.z1()), -std::conj(w.z2())};
    }
    return w;
}

/// Complex square norm CN(w) = z1^2 + z2^2 = P1(w) * P2(w).
inline complex cn(const Bicomplex& w) { return w.z1() * w.z1() + w.z2() * w.z2(); }

/// Euclidean R^4 norm.
inline double norm(const Bicomplex& w) {
    const auto x = w.four_reals();
    return std::hypot(std::hypot(x[0], x[1]), std::hypot(x[2], x[3]));
}

/// Element a + i2*b of C(i2), stored as (re = a, im = b).
using complex_i2 = std::complex<double>;

struct Norms {
    complex mod_i1_sq;    // w * w^dag2, in C(i1)
    complex_i2 mod_i2_sq; // w * w^dag1, in C(i2)
    Duplex mod_j_sq;      // w * w^dag3, in D
    double euclid;
};

inline Norms norms(const Bicomplex& w) {
    const Bicomplex m1 = w * conj(w, Conjugation::dag2);
    const Bicomplex m2 = w * conj(w, Conjugation::dag1);
    const Bicomplex mj = w * conj(w, Conjugation::dag3);
    return {m1.z1(), complex_i2{m2.z1().real(), m2.z2().real()}, Duplex::from_bicomplex(mj),
            norm(w)};
}

inline constexpr double default_singular_tolerance = 1e-12;

struct SingularityVerdict {
    bool is_singular;
    double cn_magnitude;
    double tolerance_used;
};

/// Null-cone test |CN(w)| <= tol * max(1, ||w||^2).
inline SingularityVerdict is_singular(const Bicomplex& w,
                                      double tol = default_singular_tolerance) {
    if (!(tol >= 0)) throw precondition_error("singularity tolerance must be non-negative");
    const double scale = std::max(1.0, norm(w) * norm(w));
    const double mag = std::abs(cn(w));
    const double used = tol * scale;
    return {mag <= used, mag, used};
}

/// The same criterion stated on the idempotent components: the smaller of
/// |P1(w)|, |P2(w)| is at most tolerance / larger.
inline bool is_singular_componentwise(const Bicomplex& w,
                                      double tol = default_singular_tolerance) {
    const auto p = to_idempotent(w);
    const double a = std::abs(p.p1);
    const double b = std::abs(p.p2);
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    const double used = tol * std::max(1.0, norm(w) * norm(w));
    return hi == 0 || lo <= used / hi;
}

/// Multiplicative inverse, computed as the componentwise reciprocal in the
/// idempotent basis (equal to w^dag2 / CN(w)).
inline Bicomplex inverse(const Bicomplex& w) {
    if (is_singular(w).is_singular) throw singular_operand("inverse of a null-cone element");
    const auto p = to_idempotent(w);
    const Bicomplex r = from_idempotent({1.0 / p.p1, 1.0 / p.p2});
    if (!r.finite()) throw non_finite("non-finite result in inverse");
    return r;
}

inline Bicomplex operator/(const Bicomplex& a, const Bicomplex& b) { return a * inverse(b); }

// ---------------------------------------------------------------------------
// Approximate comparison

/// ||a - b|| <= max(abs_tol, rel_tol * max(||a||, ||b||)).
inline bool approx_equal(const Bicomplex& a, const Bicomplex& b, double rel_tol,
                         double abs_tol = 0) {
    const auto d = a.four_reals();
    const auto e = b.four_reals();
    double diff = 0;
    for (int k = 0; k < 4; ++k) diff = std::hypot(diff, d[k] - e[k]);
    return diff <= std::max(abs_tol, rel_tol * std::max(norm(a), norm(b)));
}

/// Euclidean distance, without the finiteness check of operator-.
inline double distance(const Bicomplex& a, const Bicomplex& b) {
    const auto d = a.four_reals();
    const auto e = b.four_reals();
    return std::hypot(std::hypot(d[0] - e[0], d[1] - e[1]), std::hypot(d[2] - e[2], d[3] - e[3]));
}

} // namespace bicomplex
