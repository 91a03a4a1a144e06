#pragma once

// Text renderings of bicomplex values:
//   four-real form   x1 + x2*i1 + x3*i2 + x4*j
//   idempotent form  [a + b*i1 | c + d*i1]     (coefficients of e1 and e2)
// Both are valid sequence expressions and parse back through seqspec.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "bicomplex/core.hpp"

namespace bicomplex {

/// Shortest round-trip text when significant_digits == 0, else %.{digits}g.
inline std::string format_number(double v, int significant_digits = 0) {
    if (v == 0) return "0";
    std::array<char, 64> buf{};
    const auto res = significant_digits == 0
                         ? std::to_chars(buf.data(), buf.data() + buf.size(), v)
                         : std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                         std::chars_format::general, significant_digits);
    return {buf.data(), res.ptr};
}

struct RenderOptions {
    /// 0 = shortest round-trip.
    int significant_digits = 0;
    /// Components at most this fraction of the largest one print as 0.
    double noise_floor = 0;
};

namespace detail {

inline std::array<double, 4> display_values(std::array<double, 4> x, double noise_floor) {
    if (noise_floor > 0) {
        double big = 0;
        for (double v : x) big = std::max(big, std::abs(v));
        for (double& v : x)
            if (std::abs(v) <= noise_floor * big) v = 0;
    }
    return x;
}

inline void append_term(std::string& out, double v, const char* unit, int digits, bool first) {
    if (first) {
        out += format_number(v, digits);
    } else {
        out += std::signbit(v) && v != 0 ? " - " : " + ";
        out += format_number(std::abs(v), digits);
    }
    if (unit) {
        out += '*';
        out += unit;
    }
}

} // namespace detail

inline std::string render_four_real(const Bicomplex& w, const RenderOptions& opt = {}) {
    const auto x = detail::display_values(w.four_reals(), opt.noise_floor);
    std::string out;
    detail::append_term(out, x[0], nullptr, opt.significant_digits, true);
    detail::append_term(out, x[1], "i1", opt.significant_digits, false);
    detail::append_term(out, x[2], "i2", opt.significant_digits, false);
    detail::append_term(out, x[3], "j", opt.significant_digits, false);
    return out;
}

inline std::string render_idempotent(const Bicomplex& w, const RenderOptions& opt = {}) {
    const auto p = to_idempotent(w);
    const auto x = detail::display_values({p.p1.real(), p.p1.imag(), p.p2.real(), p.p2.imag()},
                                          opt.noise_floor);
    std::string out = "[";
    detail::append_term(out, x[0], nullptr, opt.significant_digits, true);
    detail::append_term(out, x[1], "i1", opt.significant_digits, false);
    out += " | ";
    detail::append_term(out, x[2], nullptr, opt.significant_digits, true);
    detail::append_term(out, x[3], "i1", opt.significant_digits, false);
    out += "]";
    return out;
}

} // namespace bicomplex
