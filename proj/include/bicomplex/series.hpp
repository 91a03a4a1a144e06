#pragma once

// Numerical convergence verdicts for bicomplex series. A bicomplex series
// converges exactly when both idempotent component series converge, so all
// analysis happens on two complex series run side by side.
//
// Verdicts are heuristics on a finite budget of terms, never proofs:
//   converged    the last `window` partial sums are pairwise closer than tol
//   diverged     explicit evidence only: partial sums beyond the overflow
//                guard, terms that stay above tol without decaying between
//                the half-budget checkpoint and the end, or (for series of
//                non-negative terms) n*a_n that stays above tol without
//                decaying, i.e. a harmonic-or-worse tail
//   inconclusive anything else

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <string_view>
#include <utility>
#include <vector>

#include "bicomplex/core.hpp"

namespace bicomplex {

enum class Verdict { converged, diverged, inconclusive };

constexpr std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::converged: return "converged";
    case Verdict::diverged: return "diverged";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

/// Three-valued conjunction: converged only if both are, diverged if either is.
constexpr Verdict both(Verdict a, Verdict b) {
    if (a == Verdict::diverged || b == Verdict::diverged) return Verdict::diverged;
    if (a == Verdict::converged && b == Verdict::converged) return Verdict::converged;
    return Verdict::inconclusive;
}

struct ConvergenceOptions {
    double tol = 1e-10;
    std::size_t window = 8;
    std::uint64_t n_max = 1'000'000;

    void validate() const {
        if (!(tol > 0)) throw precondition_error("tolerance must be positive");
        if (window < 2) throw precondition_error("window must be at least 2");
        if (n_max < 1) throw precondition_error("term budget must be at least 1");
    }
};

inline constexpr double overflow_guard = 1e150;
/// Ratio of end-of-budget to half-budget magnitudes above which a sequence
/// counts as not decaying.
inline constexpr double non_decay_ratio = 0.95;

namespace detail {

/// Fixed-capacity ring of the most recent values.
template <typename T>
class Ring {
public:
    explicit Ring(std::size_t capacity) : data_(capacity) {}

    void push(const T& v) {
        data_[head_] = v;
        head_ = (head_ + 1) % data_.size();
        if (size_ < data_.size()) ++size_;
    }
    bool full() const { return size_ == data_.size(); }
    std::size_t size() const { return size_; }
    /// Element k, oldest first.
    const T& operator[](std::size_t k) const {
        return data_[(head_ + data_.size() - size_ + k) % data_.size()];
    }

private:
    std::vector<T> data_;
    std::size_t head_ = 0;
    std::size_t size_ = 0;
};

inline double gap(double a, double b) { return std::abs(a - b); }
inline double gap(complex a, complex b) { return std::abs(a - b); }
inline double gap(const Bicomplex& a, const Bicomplex& b) { return distance(a, b); }

template <typename T>
double max_pairwise_distance(const Ring<T>& r) {
    double d = 0;
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = a + 1; b < r.size(); ++b) d = std::max(d, gap(r[a], r[b]));
    return d;
}

inline double ring_min(const Ring<double>& r) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < r.size(); ++k) m = std::min(m, r[k]);
    return m;
}

} // namespace detail

/// Partial sums of a scalar series (double or complex) under the Cauchy-window
/// heuristic. Push terms in order; call verdict() once the budget is spent.
template <typename T>
class CauchyWindow {
public:
    CauchyWindow(const ConvergenceOptions& opt, bool non_negative_terms = false)
        : opt_(opt), non_negative_(non_negative_terms), sums_(opt.window),
          term_mags_(opt.window), weighted_(opt.window),
          checkpoint_(std::max<std::uint64_t>(opt.window, opt.n_max / 2)) {}

    void push(const T& term) {
        ++count_;
        sum_ += term;
        sums_.push(sum_);
        const double mag = std::abs(term);
        term_mags_.push(mag);
        weighted_.push(static_cast<double>(count_) * mag);
        if (std::abs(sum_) > overflow_guard || !std::isfinite(std::abs(sum_))) overflowed_ = true;
        if (count_ == checkpoint_ && count_ < opt_.n_max) {
            checkpoint_term_min_ = detail::ring_min(term_mags_);
            checkpoint_weighted_min_ = detail::ring_min(weighted_);
            have_checkpoint_ = true;
        }
    }

    /// Overflow is the only verdict that is final before the budget ends.
    bool terminal() const { return overflowed_; }

    const T& sum() const { return sum_; }
    std::uint64_t count() const { return count_; }
    double tail_delta() const { return detail::max_pairwise_distance(sums_); }

    bool cauchy_stable() const { return sums_.full() && tail_delta() < opt_.tol; }

    bool terms_persist() const {
        if (!have_checkpoint_ || !term_mags_.full()) return false;
        const double now = detail::ring_min(term_mags_);
        return now >= opt_.tol && now >= non_decay_ratio * checkpoint_term_min_;
    }

    bool harmonic_tail() const {
        if (!non_negative_ || !have_checkpoint_ || !weighted_.full()) return false;
        const double now = detail::ring_min(weighted_);
        return now >= opt_.tol && now >= non_decay_ratio * checkpoint_weighted_min_;
    }

    Verdict verdict() const {
        if (overflowed_ || terms_persist() || harmonic_tail()) return Verdict::diverged;
        if (cauchy_stable()) return Verdict::converged;
        return Verdict::inconclusive;
    }

private:
    ConvergenceOptions opt_;
    bool non_negative_;
    T sum_{};
    std::uint64_t count_ = 0;
    detail::Ring<T> sums_;
    detail::Ring<double> term_mags_;
    detail::Ring<double> weighted_;
    std::uint64_t checkpoint_;
    bool have_checkpoint_ = false;
    double checkpoint_term_min_ = 0;
    double checkpoint_weighted_min_ = 0;
    bool overflowed_ = false;
};

// ---------------------------------------------------------------------------
// Reports

struct ScalarSeriesReport {
    Verdict verdict = Verdict::inconclusive;
    complex limit_estimate;
    std::uint64_t terms_used = 0;
    double tail_delta = 0;
};

struct SeriesReport {
    Verdict verdict = Verdict::inconclusive;
    Bicomplex limit_estimate;
    std::uint64_t terms_used = 0;
    double tail_delta = 0;
    /// Sum of ||c_n|| judged converged, and the series itself converged.
    bool absolute = false;
    Verdict absolute_verdict = Verdict::inconclusive;
    Verdict component1 = Verdict::inconclusive;
    Verdict component2 = Verdict::inconclusive;
};

/// Verdict of the same heuristic run on the non-negative series sum a_n.
template <typename Gen>
Verdict analyze_nonnegative_series(Gen&& next, const ConvergenceOptions& opt) {
    opt.validate();
    CauchyWindow<double> t(opt, true);
    for (std::uint64_t n = 0; n < opt.n_max && !t.terminal(); ++n) t.push(next());
    return t.verdict();
}

/// Cauchy-window analysis of a complex series. `next()` yields successive terms.
template <typename Gen>
ScalarSeriesReport analyze_scalar_series(Gen&& next, const ConvergenceOptions& opt) {
    opt.validate();
    CauchyWindow<complex> t(opt);
    for (std::uint64_t n = 0; n < opt.n_max && !t.terminal(); ++n) {
        const complex c = next();
        if (!is_finite(c)) throw non_finite("non-finite series term", t.count() + 1);
        t.push(c);
    }
    return {t.verdict(), t.sum(), t.count(), t.tail_delta()};
}

namespace detail {

struct ComponentTrackers {
    explicit ComponentTrackers(const ConvergenceOptions& opt)
        : first(opt), second(opt), absolute(opt, true) {}

    void push(complex c1, complex c2, double abs_term) {
        first.push(c1);
        second.push(c2);
        absolute.push(abs_term);
    }
    bool terminal() const { return first.terminal() || second.terminal(); }

    SeriesReport report() const {
        SeriesReport r;
        r.component1 = first.verdict();
        r.component2 = second.verdict();
        r.verdict = both(r.component1, r.component2);
        r.limit_estimate = Bicomplex{from_idempotent({first.sum(), second.sum()})};
        r.terms_used = first.count();
        r.tail_delta = std::max(first.tail_delta(), second.tail_delta());
        r.absolute_verdict = absolute.verdict();
        r.absolute = r.absolute_verdict == Verdict::converged && r.verdict == Verdict::converged;
        return r;
    }

    CauchyWindow<complex> first;
    CauchyWindow<complex> second;
    CauchyWindow<double> absolute;
};

} // namespace detail

/// Running sums S_k = c_0 + ... + c_k of the first n_max terms.
template <typename Gen>
std::vector<Bicomplex> partial_sums(Gen&& next, std::uint64_t n_max) {
    if (n_max < 1) throw precondition_error("term budget must be at least 1");
    std::vector<Bicomplex> out;
    out.reserve(n_max);
    Bicomplex s;
    for (std::uint64_t k = 0; k < n_max; ++k) {
        const Bicomplex c = next();
        if (!c.finite()) throw non_finite("non-finite series term", k);
        try {
            s += c;
        } catch (const non_finite&) {
            throw non_finite("partial sum overflow", k);
        }
        out.push_back(s);
    }
    return out;
}

/// Convergence report for sum c_n, with `next()` yielding c_0, c_1, ...
template <typename Gen>
SeriesReport analyze_series(Gen&& next, const ConvergenceOptions& opt = {}) {
    opt.validate();
    detail::ComponentTrackers t(opt);
    for (std::uint64_t n = 0; n < opt.n_max && !t.terminal(); ++n) {
        const Bicomplex c = next();
        if (!c.finite()) throw non_finite("non-finite series term", n + 1);
        const auto p = to_idempotent(c);
        t.push(p.p1, p.p2, norm(c));
    }
    return t.report();
}

namespace detail {

/// z^n kept as mantissa * 2^exponent so that powers of large or small
/// components neither overflow nor underflow before the coefficient is applied.
class ScaledPower {
public:
    explicit ScaledPower(complex base) : base_(base) {}

    complex times(complex coeff) const {
        // Normalize the coefficient too, so a subnormal c_n keeps its bits.
        int ce = 0;
        const double m = std::max(std::abs(coeff.real()), std::abs(coeff.imag()));
        if (m != 0 && std::isfinite(m)) std::frexp(m, &ce);
        const complex c{std::ldexp(coeff.real(), -ce), std::ldexp(coeff.imag(), -ce)};
        const complex v = c * mantissa_;
        return {std::ldexp(v.real(), exponent_ + ce), std::ldexp(v.imag(), exponent_ + ce)};
    }

    void advance() {
        mantissa_ *= base_;
        const double m = std::max(std::abs(mantissa_.real()), std::abs(mantissa_.imag()));
        if (m == 0 || !std::isfinite(m)) return;
        int e = 0;
        std::frexp(m, &e);
        mantissa_ = {std::ldexp(mantissa_.real(), -e), std::ldexp(mantissa_.imag(), -e)};
        exponent_ += e;
    }

private:
    complex base_;
    complex mantissa_{1.0, 0.0};
    int exponent_ = 0;
};

} // namespace detail

/// Convergence report for sum c_n w^n, with `coeffs()` yielding c_0, c_1, ...
/// Terms are formed per component, c_n w^n = c'_n w'^n e1 + c''_n w''^n e2.
template <typename Gen>
SeriesReport eval_power_series(Gen&& coeffs, const Bicomplex& w,
                               const ConvergenceOptions& opt = {}) {
    opt.validate();
    const auto wp = to_idempotent(w);
    detail::ScaledPower pow1(wp.p1);
    detail::ScaledPower pow2(wp.p2);
    detail::ComponentTrackers t(opt);
    for (std::uint64_t n = 0; n < opt.n_max && !t.terminal(); ++n) {
        const Bicomplex c = coeffs();
        if (!c.finite()) throw non_finite("non-finite coefficient", n);
        const auto cp = to_idempotent(c);
        const complex t1 = pow1.times(cp.p1);
        const complex t2 = pow2.times(cp.p2);
        if (!is_finite(t1) || !is_finite(t2)) {
            // |c_n w^n| beyond double range is divergence evidence in itself.
            t.push(is_finite(t1) ? t1 : complex{overflow_guard * 2},
                   is_finite(t2) ? t2 : complex{overflow_guard * 2}, overflow_guard * 2);
            break;
        }
        t.push(t1, t2, norm(from_idempotent({t1, t2})));
        pow1.advance();
        pow2.advance();
    }
    return t.report();
}

/// Adapts an index function f(n) into a generator yielding f(first), f(first+1), ...
template <typename F>
auto indexed(F f, std::uint64_t first = 1) {
    return [f = std::move(f), n = first]() mutable { return f(n++); };
}

} // namespace bicomplex
