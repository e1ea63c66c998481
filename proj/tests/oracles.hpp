#pragma once

// Test-only oracles: exhaustive enumeration and independent numerics. Nothing
// here shares code with the library's recurrences or iterations.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include <stirnum/natural.hpp>

namespace oracle {

using stirnum::Natural;
using stirnum::u64;

namespace detail {

inline void rgs_recurse(unsigned n, unsigned i, unsigned mx, std::vector<unsigned>& a,
                        const std::function<void(const std::vector<unsigned>&, unsigned)>& emit) {
    if (i == n) {
        emit(a, mx + 1);
        return;
    }
    for (unsigned v = 0; v <= mx + 1; ++v) {
        a[i] = v;
        rgs_recurse(n, i + 1, std::max(mx, v), a, emit);
    }
}

}  // namespace detail

// counts[k] = number of set partitions of an n-set into k blocks with every
// block of size >= min_block, by restricted-growth-string enumeration.
inline std::vector<u64> partition_counts(unsigned n, unsigned min_block = 1) {
    std::vector<u64> counts(n + 1, 0);
    if (n == 0) {
        counts[0] = 1;
        return counts;
    }
    std::vector<unsigned> a(n, 0);
    std::function<void(const std::vector<unsigned>&, unsigned)> emit =
        [&](const std::vector<unsigned>& rgs, unsigned blocks) {
            std::vector<unsigned> size(blocks, 0);
            for (unsigned x : rgs) ++size[x];
            for (unsigned s : size)
                if (s < min_block) return;
            ++counts[blocks];
        };
    detail::rgs_recurse(n, 1, 0, a, emit);  // a[0] is pinned to 0
    return counts;
}

// counts[k] = permutations of n letters with k cycles (optionally none fixed),
// by iterating all n! permutations.
inline std::vector<u64> cycle_counts(unsigned n, bool no_fixed_points = false) {
    std::vector<u64> counts(n + 1, 0);
    if (n == 0) {
        counts[0] = 1;
        return counts;
    }
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0u);
    do {
        if (no_fixed_points) {
            bool fixed = false;
            for (unsigned i = 0; i < n; ++i)
                if (p[i] == i) {
                    fixed = true;
                    break;
                }
            if (fixed) continue;
        }
        std::vector<bool> seen(n, false);
        unsigned cycles = 0;
        for (unsigned i = 0; i < n; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (unsigned j = i; !seen[j]; j = p[j]) seen[j] = true;
        }
        ++counts[cycles];
    } while (std::next_permutation(p.begin(), p.end()));
    return counts;
}

inline bool is_prime_trial(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Bisection on w*e^w = x over [0, hi]; independent of the Halley iteration.
inline double lambert_bisect(double x) {
    double lo = 0.0;
    double hi = x < 1 ? 1.0 : std::log(x) + 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = (lo + hi) / 2;
        if (mid * std::exp(mid) < x)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

// Binary-search floor sqrt; independent of boost's implementation.
inline Natural isqrt_binary(const Natural& n) {
    if (n < 2) return n;
    Natural lo = 1, hi = Natural(1) << (boost::multiprecision::msb(n) / 2 + 1);
    while (lo < hi) {
        Natural mid = (lo + hi + 1) / 2;
        if (mid * mid <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace oracle
