#pragma once

#include <cmath>
#include <random>

#include "bicomplex/core.hpp"

namespace bicomplex::testing {

/// Uniform in the box [-scale, scale]^4.
inline Bicomplex random_bicomplex(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return Bicomplex::from_four_reals(u(rng), u(rng), u(rng), u(rng));
}

/// Uniform over the open R^4 ball of the given radius.
inline Bicomplex random_in_ball(std::mt19937_64& rng, double radius) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double x[4];
    double len = 0;
    for (double& v : x) {
        v = g(rng);
        len = std::hypot(len, v);
    }
    const double r = radius * std::pow(u(rng), 0.25);
    return Bicomplex::from_four_reals(x[0] / len * r, x[1] / len * r, x[2] / len * r, x[3] / len * r);
}

/// Nonsingular sample: both idempotent components at least `margin` in modulus.
inline Bicomplex random_nonsingular(std::mt19937_64& rng, double scale = 1.0, double margin = 1e-3) {
    for (;;) {
        const Bicomplex w = random_bicomplex(rng, scale);
        const auto p = to_idempotent(w);
        if (std::abs(p.p1) > margin && std::abs(p.p2) > margin) return w;
    }
}

inline double rel_error(const Bicomplex& got, const Bicomplex& want, double scale) {
    return distance(got, want) / scale;
}

} // namespace bicomplex::testing
