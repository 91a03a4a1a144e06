#pragma once

// Infinite products prod_{n>=1} w_n of bicomplex factors.
//
// A product converges when its partial products tend to a nonsingular limit.
// It does so exactly when sum Log w_n converges, and converges absolutely
// exactly when sum ||w_n - 1|| converges. Both series are tracked alongside
// the partial products as independent evidence.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "bicomplex/core.hpp"
#include "bicomplex/series.hpp"
#include "bicomplex/transcendental.hpp"

namespace bicomplex {

enum class ProductVerdict { converged_nonsingular, diverged_to_zero, diverged, inconclusive, singular_term };

constexpr std::string_view to_string(ProductVerdict v) {
    switch (v) {
    case ProductVerdict::converged_nonsingular: return "converged_nonsingular";
    case ProductVerdict::diverged_to_zero: return "diverged_to_zero";
    case ProductVerdict::diverged: return "diverged";
    case ProductVerdict::inconclusive: return "inconclusive";
    case ProductVerdict::singular_term: return "singular_term";
    }
    return "?";
}

inline constexpr double zero_product_threshold = 1e-30;

struct ProductReport {
    ProductVerdict verdict = ProductVerdict::inconclusive;
    Bicomplex limit_estimate;
    std::uint64_t terms_used = 0;
    /// Every factor in the final window lies within 10*tol of 1.
    bool necessary_condition_ok = false;
    bool absolute = false;
    /// Sum of principal logs of the consumed factors.
    Bicomplex log_sum;
    Verdict log_sum_verdict = Verdict::inconclusive;
    Verdict log_norm_verdict = Verdict::inconclusive;
    Verdict deviation_norm_verdict = Verdict::inconclusive;
    bool criteria_agreement = false;
    std::optional<std::uint64_t> singular_index;
    /// log ||p_n|| tracked from component log-magnitudes; finite even when
    /// p_n itself has underflowed.
    double log_norm = 0;
    double tail_delta = 0;
};

namespace detail {

/// log(sqrt((e^(2a) + e^(2b)) / 2)) without overflow.
inline double log_norm_from_components(double a, double b) {
    const double hi = std::max(a, b);
    if (hi == -std::numeric_limits<double>::infinity()) return hi;
    return hi + 0.5 * std::log((std::exp(2 * (a - hi)) + std::exp(2 * (b - hi))) / 2);
}

} // namespace detail

/// Running products p_n = w_1 * ... * w_n of the first n_max factors.
template <typename Gen>
std::vector<Bicomplex> partial_products(Gen&& next, std::uint64_t n_max) {
    if (n_max < 1) throw precondition_error("term budget must be at least 1");
    std::vector<Bicomplex> out;
    out.reserve(n_max);
    Bicomplex p{1.0};
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const Bicomplex w = next();
        if (!w.finite()) throw non_finite("non-finite factor", n);
        try {
            p *= w;
        } catch (const non_finite&) {
            throw non_finite("partial product overflow", n);
        }
        out.push_back(p);
    }
    return out;
}

/// Full convergence report for prod w_n, `next()` yielding w_1, w_2, ...
///
/// Evaluation stops early at a singular factor, at ||p_n|| < 1e-30 with a
/// decreasing tail while the factors stay away from 1, or when the partial
/// products pass the overflow guard. Otherwise the whole budget is consumed
/// and the verdict is read from the final window.
template <typename Gen>
ProductReport evaluate_product(Gen&& next, const ConvergenceOptions& opt = {}) {
    opt.validate();
    ProductReport r;

    CauchyWindow<complex> log1(opt), log2(opt);
    CauchyWindow<double> log_norms(opt, true), deviations(opt, true);
    detail::Ring<Bicomplex> products(opt.window);
    detail::Ring<double> deviation_ring(opt.window);
    detail::Ring<double> log_norm_ring(opt.window);

    Bicomplex p{1.0};
    double lm1 = 0, lm2 = 0;
    bool terminal = false;
    std::uint64_t n = 0;

    const auto necessary_ok = [&] {
        if (!deviation_ring.full()) return false;
        for (std::size_t k = 0; k < deviation_ring.size(); ++k)
            if (!(deviation_ring[k] < 10 * opt.tol)) return false;
        return true;
    };

    while (n < opt.n_max && !terminal) {
        ++n;
        const Bicomplex w = next();
        if (!w.finite()) throw non_finite("non-finite factor", n);
        if (is_singular(w).is_singular) {
            r.verdict = ProductVerdict::singular_term;
            r.singular_index = n;
            p = p * w;
            terminal = true;
            break;
        }
        const auto wp = to_idempotent(w);
        const complex l1 = principal_log(wp.p1);
        const complex l2 = principal_log(wp.p2);
        log1.push(l1);
        log2.push(l2);
        log_norms.push(norm(from_idempotent({l1, l2})));
        const double dev = distance(w, Bicomplex{1.0});
        deviations.push(dev);
        deviation_ring.push(dev);

        lm1 += l1.real();
        lm2 += l2.real();
        r.log_norm = detail::log_norm_from_components(lm1, lm2);
        log_norm_ring.push(r.log_norm);

        if (r.log_norm > std::log(overflow_guard)) {
            r.verdict = ProductVerdict::diverged;
            terminal = true;
            break;
        }
        p = p * w;
        products.push(p);

        if (r.log_norm < std::log(zero_product_threshold) && log_norm_ring.full() && !necessary_ok()) {
            bool decreasing = true;
            for (std::size_t k = 1; k < log_norm_ring.size(); ++k)
                decreasing = decreasing && log_norm_ring[k] < log_norm_ring[k - 1];
            if (decreasing) {
                r.verdict = ProductVerdict::diverged_to_zero;
                terminal = true;
            }
        }
    }

    r.terms_used = n;
    r.limit_estimate = p;
    r.log_sum = from_idempotent({log1.sum(), log2.sum()});
    r.log_sum_verdict = both(log1.verdict(), log2.verdict());
    r.log_norm_verdict = log_norms.verdict();
    r.deviation_norm_verdict = deviations.verdict();
    r.criteria_agreement = r.log_norm_verdict == r.deviation_norm_verdict;
    r.necessary_condition_ok = necessary_ok();
    r.tail_delta = products.full() ? detail::max_pairwise_distance(products) : 0.0;

    if (!terminal) {
        const bool stable = products.full() && r.tail_delta < opt.tol * std::max(1.0, norm(p));
        const bool singular_limit = is_singular(p).is_singular;
        if (stable && r.necessary_condition_ok && !singular_limit &&
            r.log_sum_verdict != Verdict::diverged)
            r.verdict = ProductVerdict::converged_nonsingular;
        else if (deviations.terms_persist() || r.log_sum_verdict == Verdict::diverged ||
                 (stable && singular_limit))
            r.verdict = ProductVerdict::diverged;
        else
            r.verdict = ProductVerdict::inconclusive;
    }
    r.absolute = r.verdict == ProductVerdict::converged_nonsingular &&
                 r.log_norm_verdict == Verdict::converged;
    return r;
}

// ---------------------------------------------------------------------------

struct LogSumEquivalence {
    Bicomplex product_limit;
    Bicomplex exp_of_log_sum;
    Bicomplex log_sum;
    /// max_n ||exp(s_n) - p_n|| / ||p_n|| over the n where p_n is a normal number.
    double max_discrepancy = 0;
    std::uint64_t terms_used = 0;
    /// s_n - Log(p_n) in period-lattice coordinates at the last step.
    LatticeCoordinates branch_offset{0, 0, 0};
    /// Number of steps at which the rounded lattice offset changed.
    std::uint64_t branch_offset_changes = 0;
};

/// Runs p_n and s_n = sum_{k<=n} Log w_k side by side and measures how far
/// exp(s_n) strays from p_n. Throws singular_operand at a singular factor.
template <typename Gen>
LogSumEquivalence log_sum_equivalence(Gen&& next, const ConvergenceOptions& opt = {}) {
    opt.validate();
    LogSumEquivalence out;
    Bicomplex p{1.0};
    complex s1{}, s2{};
    double last_a = 0, last_b = 0;
    for (std::uint64_t n = 1; n <= opt.n_max; ++n) {
        const Bicomplex w = next();
        if (!w.finite()) throw non_finite("non-finite factor", n);
        if (is_singular(w).is_singular) throw singular_operand("singular factor", n);
        const auto wp = to_idempotent(w);
        s1 += principal_log(wp.p1);
        s2 += principal_log(wp.p2);
        p = p * w;
        const Bicomplex s = from_idempotent({s1, s2});
        const Bicomplex e = exp(s);
        const double pn = norm(p);
        if (pn > std::numeric_limits<double>::min() * 1e10)
            out.max_discrepancy = std::max(out.max_discrepancy, distance(e, p) / pn);

        if (!is_singular(p).is_singular) {
            const auto off = period_lattice_coordinates(s - log_principal(p));
            const double a = std::round(off.a), b = std::round(off.b);
            if (n > 1 && (a != last_a || b != last_b)) ++out.branch_offset_changes;
            last_a = a;
            last_b = b;
            out.branch_offset = off;
        }
        out.terms_used = n;
        out.product_limit = p;
        out.exp_of_log_sum = e;
        out.log_sum = s;
    }
    return out;
}

// ---------------------------------------------------------------------------

struct AbsoluteConvergenceCheck {
    Verdict via_log_norms = Verdict::inconclusive;
    Verdict via_deviation_norms = Verdict::inconclusive;
    bool agree = false;
    /// Both idempotent components of every factor have positive real part.
    bool hypothesis_ok = true;
    std::optional<std::uint64_t> first_violation;
    std::uint64_t terms_used = 0;
};

/// Judges sum ||Log w_n|| and sum ||w_n - 1|| with the same heuristic. With
/// u_n = w_n - 1 the criteria are equivalent when Re u'_n > -1 and
/// Re u''_n > -1; the first factor breaking that is reported.
template <typename Gen>
AbsoluteConvergenceCheck absolute_convergence_check(Gen&& next, const ConvergenceOptions& opt = {}) {
    opt.validate();
    AbsoluteConvergenceCheck out;
    CauchyWindow<double> logs(opt, true), devs(opt, true);
    for (std::uint64_t n = 1; n <= opt.n_max && !logs.terminal() && !devs.terminal(); ++n) {
        const Bicomplex w = next();
        if (!w.finite()) throw non_finite("non-finite factor", n);
        if (is_singular(w).is_singular) throw singular_operand("singular factor", n);
        const auto wp = to_idempotent(w);
        if (out.hypothesis_ok && !(wp.p1.real() > 0 && wp.p2.real() > 0)) {
            out.hypothesis_ok = false;
            out.first_violation = n;
        }
        logs.push(norm(from_idempotent({principal_log(wp.p1), principal_log(wp.p2)})));
        devs.push(distance(w, Bicomplex{1.0}));
        out.terms_used = n;
    }
    out.via_log_norms = logs.verdict();
    out.via_deviation_norms = devs.verdict();
    out.agree = out.via_log_norms == out.via_deviation_norms;
    return out;
}

// ---------------------------------------------------------------------------

struct LogBoundCheck {
    bool lower_ok;
    bool upper_ok;
    /// ||log1p(w)|| / ||w||, taken as 1 at w = 0.
    double ratio;
};

/// Checks (1/2)||w|| <= ||log(1 + w)|| <= (3/2)||w|| for ||w|| < 1/2.
inline LogBoundCheck log_bound_check(const Bicomplex& w) {
    const double nw = norm(w);
    if (!(nw < 0.5)) throw precondition_error("log bound check requires ||w|| < 1/2");
    const double nl = norm(log1p(w));
    return {0.5 * nw <= nl, nl <= 1.5 * nw, nw == 0 ? 1.0 : nl / nw};
}

} // namespace bicomplex
