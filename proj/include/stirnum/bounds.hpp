#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "natural.hpp"

namespace stirnum {

// Principal-branch Lambert W on x >= 0: the w >= 0 with w*e^w = x.
// Halley iteration; the seed follows W(x) ~ log x - log log x for large x.
inline double lambert_w0(double x) {
    if (x < 0) throw std::domain_error("lambert_w0: requires x >= 0");
    if (x == 0) return 0.0;
    double w = x < std::numbers::e ? std::log1p(x) : std::log(x) - std::log(std::log(x));
    for (int i = 0; i < 50; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double step = f / (ew * (w + 1) - (w + 2) * f / (2 * w + 2));
        w -= step;
        if (std::abs(step) <= 1e-15 * (1 + std::abs(w))) break;
    }
    return w;
}

// Natural log of a Natural, usable far beyond double range: bit length plus a
// 64-bit leading mantissa keeps the absolute error near 1e-13 even for
// thousand-bit arguments.
inline double log_natural(const Natural& a) {
    if (a <= 0) throw std::domain_error("log_natural: requires a >= 1");
    const unsigned bits = boost::multiprecision::msb(a) + 1;
    if (bits <= 512) return std::log(a.convert_to<double>());
    const unsigned shift = bits - 64;
    const double top = Natural(a >> shift).convert_to<double>();
    return std::log(top) + double(shift) * std::numbers::ln2;
}

// bound = 2 + 2*log(a)/W(log(a)/2) dominates both M_1(a) and M_2(a) for a >= 2;
// b_limit = bound/2 dominates the minimal central index of a.
struct BoundEvaluation {
    Natural a;
    double log_a = 0;
    double w_value = 0;
    double b_limit = 0;
    double bound = 0;
};

inline BoundEvaluation singmaster_bound(const Natural& a) {
    if (a < 2) throw std::domain_error("singmaster_bound: requires a >= 2");
    BoundEvaluation e;
    e.a = a;
    e.log_a = log_natural(a);
    e.w_value = lambert_w0(e.log_a / 2);
    e.b_limit = 1 + e.log_a / e.w_value;
    e.bound = 2 * e.b_limit;
    return e;
}

// log a / (log log a - log log log a), the asymptotic order of the bound.
inline double asymptotic_comparator(const Natural& a) {
    if (a < 16) throw std::domain_error("asymptotic_comparator: requires a >= 16");
    const double l = log_natural(a);
    const double ll = std::log(l);
    const double denom = ll - std::log(ll);
    if (denom <= 0) throw std::domain_error("asymptotic_comparator: non-positive denominator");
    return l / denom;
}

}  // namespace stirnum
