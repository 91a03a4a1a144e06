#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "bicomplex/series.hpp"
#include "bicomplex/transcendental.hpp"
#include "test_support.hpp"

using namespace bicomplex;

namespace {

const Bicomplex one{1.0};
const Bicomplex i2 = Bicomplex::i2();
const Bicomplex j = Bicomplex::j();
const Bicomplex e1 = Bicomplex::e1();
const Bicomplex e2 = Bicomplex::e2();

Bicomplex scalar(double x) { return Bicomplex{x}; }

template <typename F>
auto from(F f, std::uint64_t first = 1) {
    return indexed(std::move(f), first);
}

Bicomplex p_series(std::uint64_t n) { return scalar(1.0 / (double(n) * double(n))) * (one + i2); }

} // namespace

TEST(PartialSums, Examples) {
    const auto zeros = partial_sums([] { return Bicomplex{}; }, 5);
    for (const auto& s : zeros) EXPECT_EQ(s, Bicomplex{});

    std::vector<Bicomplex> terms{one, i2, j};
    std::size_t k = 0;
    const auto sums = partial_sums([&] { return terms[k++]; }, 3);
    ASSERT_EQ(sums.size(), 3u);
    EXPECT_EQ(sums[0], one);
    EXPECT_EQ(sums[1], one + i2);
    EXPECT_EQ(sums[2], one + i2 + j);

    // sum_{k=0}^{N} 2^-k = 2 - 2^-N, carried on e1 only.
    const auto geo = partial_sums(from([](std::uint64_t n) { return scalar(std::ldexp(1.0, -int(n))) * e1; }, 0), 60);
    for (std::size_t n = 0; n < geo.size(); ++n) {
        const Bicomplex expected = scalar(2 - std::ldexp(1.0, -int(n))) * e1;
        EXPECT_TRUE(approx_equal(geo[n], expected, 1e-15)) << n;
    }
    EXPECT_TRUE(approx_equal(geo.back(), scalar(2) * e1, 1e-15));

    EXPECT_THROW(partial_sums([] { return one; }, 0), precondition_error);
}

TEST(PartialSums, NonFiniteTermCarriesIndex) {
    std::uint64_t n = 0;
    try {
        partial_sums(
            [&] {
                return n++ == 3 ? Bicomplex{std::numeric_limits<double>::infinity()} : one;
            },
            10);
        FAIL();
    } catch (const non_finite& e) {
        EXPECT_EQ(e.index(), 3u);
    }
}

TEST(CauchyWindow, HarmonicAndPSeriesOnNonNegativeTerms) {
    const ConvergenceOptions opt{1e-10, 8, 1'000'000};
    EXPECT_EQ(analyze_nonnegative_series(indexed([](std::uint64_t n) { return 1.0 / double(n); }), opt),
              Verdict::diverged);
    EXPECT_EQ(analyze_nonnegative_series(indexed([](std::uint64_t n) { return 1.0 / std::sqrt(double(n)); }), opt),
              Verdict::diverged);
    EXPECT_EQ(analyze_nonnegative_series(indexed([](std::uint64_t n) { return 1.0 / (double(n) * n); }), opt),
              Verdict::converged);
    EXPECT_EQ(analyze_nonnegative_series(indexed([](std::uint64_t n) { return std::ldexp(1.0, -int(std::min<std::uint64_t>(n, 1000))); }), opt),
              Verdict::converged);
    // n^-1.5 does not settle within 10^6 terms but is never declared divergent.
    EXPECT_EQ(analyze_nonnegative_series(indexed([](std::uint64_t n) { return std::pow(double(n), -1.5); }), opt),
              Verdict::inconclusive);
}

TEST(AnalyzeSeries, PSeriesConverges) {
    const SeriesReport r = analyze_series(from(p_series));
    EXPECT_EQ(r.verdict, Verdict::converged);
    EXPECT_TRUE(r.absolute);
    EXPECT_LE(r.tail_delta, 1e-10);
    // sum 1/n^2 = pi^2/6; the tail after N terms is below 1/N per component.
    const Bicomplex limit = scalar(std::numbers::pi * std::numbers::pi / 6) * (one + i2);
    EXPECT_LE(distance(r.limit_estimate, limit), 2.0 / double(r.terms_used));
    EXPECT_EQ(r.terms_used, 1'000'000u);
}

TEST(AnalyzeSeries, OscillatingTermsDiverge) {
    const SeriesReport r = analyze_series(from([](std::uint64_t n) { return scalar(n % 2 ? -1.0 : 1.0); }));
    EXPECT_EQ(r.verdict, Verdict::diverged);
    EXPECT_FALSE(r.absolute);
    EXPECT_EQ(r.absolute_verdict, Verdict::diverged);
}

TEST(AnalyzeSeries, OneDivergentComponentForcesDivergence) {
    const SeriesReport r = analyze_series(
        from([](std::uint64_t n) { return from_idempotent({complex{1.0 / (double(n) * n), 0}, complex{1, 0}}); }));
    EXPECT_EQ(r.component1, Verdict::converged);
    EXPECT_EQ(r.component2, Verdict::diverged);
    EXPECT_EQ(r.verdict, Verdict::diverged);
}

TEST(AnalyzeSeries, ConditionalConvergenceIsNotCalledDivergent) {
    const ConvergenceOptions opt{1e-10, 8, 100'000};
    const SeriesReport r = analyze_series(from([](std::uint64_t n) { return scalar((n % 2 ? -1.0 : 1.0) / double(n)); }), opt);
    EXPECT_EQ(r.verdict, Verdict::inconclusive);
    EXPECT_EQ(r.absolute_verdict, Verdict::diverged);
    EXPECT_NEAR(r.limit_estimate.z1().real(), -std::log(2.0), 1e-4);
}

TEST(AnalyzeSeries, OverflowGuardStopsEarly) {
    const SeriesReport r = analyze_series(from([](std::uint64_t n) { return scalar(std::pow(10.0, double(std::min<std::uint64_t>(n, 300)))); }));
    EXPECT_EQ(r.verdict, Verdict::diverged);
    EXPECT_LT(r.terms_used, 200u);
}

TEST(AnalyzeSeries, Preconditions) {
    auto gen = [] { return one; };
    EXPECT_THROW(analyze_series(gen, {0.0, 8, 10}), precondition_error);
    EXPECT_THROW(analyze_series(gen, {1e-10, 1, 10}), precondition_error);
    EXPECT_THROW(analyze_series(gen, {1e-10, 8, 0}), precondition_error);
}

namespace {

struct Family {
    const char* name;
    Bicomplex (*term)(std::uint64_t);
};

const Family families[] = {
    {"p-series", p_series},
    {"alternating", [](std::uint64_t n) { return scalar(n % 2 ? -1.0 : 1.0); }},
    {"mixed", [](std::uint64_t n) { return from_idempotent({complex{1.0 / (double(n) * n), 0}, complex{1, 0}}); }},
    {"geometric", [](std::uint64_t n) { return from_idempotent({std::pow(complex{0.5, 0.3}, double(n)), std::pow(complex{-0.2, 0.7}, double(n))}); }},
    {"cubic", [](std::uint64_t n) { return scalar(1.0 / std::pow(double(n), 3)) * Bicomplex::from_four_reals(0.3, -0.2, 0.5, 0.1); }},
    {"harmonic", [](std::uint64_t n) { return scalar(1.0 / double(n)) * Bicomplex::from_four_reals(0.3, 0, 0.4, 0); }},
};

} // namespace

TEST(AnalyzeSeries, ComponentwiseEquivalence) {
    const ConvergenceOptions opt{1e-10, 8, 400'000};
    for (const auto& f : families) {
        const SeriesReport r = analyze_series(from(f.term), opt);
        const auto c1 = analyze_scalar_series(indexed([&](std::uint64_t n) { return project1(f.term(n)); }), opt);
        const auto c2 = analyze_scalar_series(indexed([&](std::uint64_t n) { return project2(f.term(n)); }), opt);
        EXPECT_EQ(r.component1, c1.verdict) << f.name;
        EXPECT_EQ(r.component2, c2.verdict) << f.name;
        EXPECT_EQ(r.verdict, both(c1.verdict, c2.verdict)) << f.name;
        EXPECT_EQ(r.limit_estimate, from_idempotent({c1.limit_estimate, c2.limit_estimate})) << f.name;
    }
}

TEST(AnalyzeSeries, AbsoluteConvergenceProperties) {
    const ConvergenceOptions opt{1e-10, 8, 1'000'000};
    int absolute_count = 0;
    for (const auto& f : families) {
        const SeriesReport r = analyze_series(from(f.term), opt);
        if (r.absolute) {
            ++absolute_count;
            EXPECT_EQ(r.verdict, Verdict::converged) << f.name;
        }
        const Verdict a1 = analyze_nonnegative_series(indexed([&](std::uint64_t n) { return std::abs(project1(f.term(n))); }), opt);
        const Verdict a2 = analyze_nonnegative_series(indexed([&](std::uint64_t n) { return std::abs(project2(f.term(n))); }), opt);
        EXPECT_EQ(r.absolute_verdict, both(a1, a2)) << f.name;
    }
    EXPECT_EQ(absolute_count, 3);
}

TEST(AnalyzeSeries, Linearity) {
    const ConvergenceOptions opt{1e-10, 8, 1'000'000};
    const Bicomplex a = Bicomplex::from_four_reals(0.7, -0.4, 0.2, 0.9);
    for (const auto& f : families) {
        const SeriesReport r = analyze_series(from(f.term), opt);
        const SeriesReport s = analyze_series(from([&](std::uint64_t n) { return a * f.term(n); }), opt);
        EXPECT_EQ(r.verdict, s.verdict) << f.name;
        if (r.verdict == Verdict::converged)
            EXPECT_LE(distance(s.limit_estimate, a * r.limit_estimate), opt.tol) << f.name;
    }
}

TEST(PowerSeries, GeometricInsideUnitPolydisc) {
    const Bicomplex w = from_idempotent({complex{0.5, 0.2}, complex{-0.3, 0.6}});
    const SeriesReport r = eval_power_series([] { return one; }, w);
    EXPECT_EQ(r.verdict, Verdict::converged);
    const auto p = to_idempotent(w);
    const Bicomplex expected = from_idempotent({1.0 / (1.0 - p.p1), 1.0 / (1.0 - p.p2)});
    EXPECT_TRUE(approx_equal(r.limit_estimate, expected, 1e-12));
}

TEST(PowerSeries, GeometricRatioTwoDiverges) {
    const SeriesReport r = eval_power_series([] { return one; }, e1 + scalar(2) * e2);
    EXPECT_EQ(r.verdict, Verdict::diverged);
    EXPECT_EQ(r.component2, Verdict::diverged);
    // The run stops at the overflow of the second component, before ratio 1 is judged.
    EXPECT_NE(r.component1, Verdict::converged);
}

TEST(PowerSeries, ExponentialCoefficientsReproduceExp) {
    std::mt19937_64 rng(51);
    for (int k = 0; k < 50; ++k) {
        const Bicomplex w = bicomplex::testing::random_bicomplex(rng, 3);
        double c = 1;
        std::uint64_t n = 0;
        const SeriesReport r = eval_power_series(
            [&] {
                if (n > 0) c /= double(n);
                ++n;
                return Bicomplex{c};
            },
            w, {1e-10, 8, 10'000});
        EXPECT_EQ(r.verdict, Verdict::converged);
        EXPECT_TRUE(approx_equal(r.limit_estimate, bicomplex::exp(w), 1e-10));
    }
}

TEST(PowerSeries, LargeComponentPowersDoNotPoisonTerms) {
    // w'^n leaves double range near n = 134 while 1/n! is still a normal number.
    const Bicomplex w = from_idempotent({complex{200, 0}, complex{0.5, 0}});
    double c = 1;
    std::uint64_t n = 0;
    const SeriesReport r = eval_power_series(
        [&] {
            if (n > 0) c /= double(n);
            ++n;
            return Bicomplex{c};
        },
        w, {1e-10, 8, 5'000});
    EXPECT_EQ(r.component2, Verdict::converged);
    EXPECT_TRUE(r.limit_estimate.finite());

    // Same double coefficients, summed in extended range.
    long double sum = 0, power = 1;
    double cd = 1;
    for (int k = 0; k < 5'000; ++k) {
        if (k > 0) cd /= double(k);
        if (cd == 0) break;
        sum += (long double)cd * power;
        power *= 200.0L;
    }
    EXPECT_NEAR(double(std::abs(project1(r.limit_estimate)) / sum), 1.0, 1e-12);
}
