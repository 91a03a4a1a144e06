#pragma once

// Exponential, trigonometric form and logarithms on T. Everything is computed
// on the idempotent components with principal complex branches and then
// reassembled.

#include <cmath>
#include <numbers>

#include "bicomplex/core.hpp"

namespace bicomplex {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2 * std::numbers::pi;

// ---------------------------------------------------------------------------
// Principal complex branches

// std::log and std::sqrt honour the sign of a zero imaginary part, which puts
// a negative real argument on either side of the cut. Both are normalized to
// approach the cut from above.
inline complex principal_log(complex z) {
    if (z.imag() == 0) z = {z.real(), 0.0};
    return std::log(z);
}

/// Principal square root: Re >= 0, and Im >= 0 when Re == 0.
inline complex principal_sqrt(complex z) {
    if (z.imag() == 0) z = {z.real(), 0.0};
    return std::sqrt(z);
}

// ---------------------------------------------------------------------------
// Exponential

inline Bicomplex exp(const Bicomplex& w) {
    if (!w.finite()) throw non_finite("exp of a non-finite value");
    const Bicomplex r = map_components(w, [](complex z) { return std::exp(z); });
    if (!r.finite()) throw non_finite("exp overflow");
    return r;
}

// ---------------------------------------------------------------------------
// Trigonometric form  w = r_c * (cos T + i2 sin T)

struct TrigForm {
    complex r_c;      // complex modulus |w|_i1, r_c^2 = CN(w)
    complex theta_c0; // principal complex argument, Re in (-pi, pi]
};

/// r_c is the principal root of P1*P2; the argument is fixed by
/// r_c * e^(i1 T) = P2(w), which is the ratio formula T = i1 log sqrt(P1/P2)
/// with the square root branch matched to r_c.
inline TrigForm trig_form(const Bicomplex& w) {
    if (is_singular(w).is_singular) throw singular_operand("trigonometric form of a null-cone element");
    const auto p = to_idempotent(w);
    const complex r_c = principal_sqrt(p.p1 * p.p2);
    const complex l = principal_log(p.p2 / r_c);
    return {r_c, complex{l.imag(), -l.real()}};
}

/// r_c * e^(i2 * theta).
inline Bicomplex from_trig_form(const TrigForm& t) {
    return Bicomplex{t.r_c} * exp(Bicomplex{complex{}, t.theta_c0});
}

// ---------------------------------------------------------------------------
// Logarithms

struct BranchIndex {
    long long m = 0;
    long long n = 0;

    friend bool operator==(const BranchIndex&, const BranchIndex&) = default;
};

/// Principal logarithm: principal complex log of each idempotent component.
inline Bicomplex log_principal(const Bicomplex& w) {
    if (is_singular(w).is_singular) throw singular_operand("logarithm of a null-cone element");
    return map_components(w, principal_log);
}

/// The (m, n) branch: log_principal(w) + 2*pi*(m*i1 + n*i2).
inline Bicomplex log_branch(const Bicomplex& w, BranchIndex b) {
    const Bicomplex shift{complex{0, two_pi * static_cast<double>(b.m)},
                          complex{two_pi * static_cast<double>(b.n), 0}};
    return log_principal(w) + shift;
}

/// Log|r_c| + i1*Arg(r_c) + i2*theta_c0, built from the trigonometric form.
///
/// Agrees with log_principal() except where the principal arguments wrap: the
/// P2 component is Log r_c + Log(P2/r_c) and the P1 component is
/// Log r_c - Log(P2/r_c), and each may differ from Log P_k by 2*pi*i1 when
/// the sum of principal arguments leaves (-pi, pi]. The two results then
/// differ by a point of the period lattice (see period_lattice_coordinates).
inline Bicomplex log_principal_direct(const Bicomplex& w) {
    const TrigForm t = trig_form(w);
    return {principal_log(t.r_c), t.theta_c0};
}

/// Coordinates of delta in the period lattice of exp, delta = 2*pi*i1*(a*e1 + b*e2).
/// The branch shifts 2*pi*(m*i1 + n*i2) are the points with a = m - n, b = m + n.
struct LatticeCoordinates {
    double a;
    double b;
    double m() const { return (a + b) / 2; }
    double n() const { return (b - a) / 2; }
    /// Real parts of the idempotent components, zero for lattice points.
    double real_residual;
};

inline LatticeCoordinates period_lattice_coordinates(const Bicomplex& delta) {
    const auto p = to_idempotent(delta);
    return {p.p1.imag() / two_pi, p.p2.imag() / two_pi,
            std::hypot(p.p1.real(), p.p2.real())};
}

/// Alternating series w - w^2/2 + w^3/3 - ..., stopped once a term falls
/// below 1e-17 of the running sum or after max_terms terms. Requires both
/// idempotent components inside the unit disc.
inline Bicomplex log1p_series(const Bicomplex& w, int max_terms = 1000) {
    const auto p = to_idempotent(w);
    if (!(std::abs(p.p1) < 1 && std::abs(p.p2) < 1))
        throw precondition_error("log1p series requires |P1(w)|, |P2(w)| < 1");
    Bicomplex power = w;
    Bicomplex sum = w;
    for (int k = 2; k <= max_terms; ++k) {
        power = power * w;
        const double sign = (k % 2 == 0) ? -1.0 : 1.0;
        const Bicomplex term = power * Bicomplex{sign / k};
        sum = sum + term;
        if (norm(term) < 1e-17 * norm(sum)) break;
    }
    return sum;
}

inline constexpr double log1p_series_radius = 0.25;

/// log_principal(1 + w), by series for ||w|| < 0.25.
inline Bicomplex log1p(const Bicomplex& w) {
    if (norm(w) < log1p_series_radius) return log1p_series(w);
    return log_principal(Bicomplex{1.0} + w);
}

/// Principal square root of each idempotent component.
inline Bicomplex sqrt(const Bicomplex& w) {
    if (is_singular(w).is_singular) throw singular_operand("square root of a null-cone element");
    return map_components(w, principal_sqrt);
}

} // namespace bicomplex
