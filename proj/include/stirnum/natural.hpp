#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace stirnum {

// Exact non-negative integer. Every combinatorial quantity in this library
// (Stirling values, factorials, sieve targets) is a Natural; no operation
// here ever rounds.
using Natural = boost::multiprecision::cpp_int;

using u64 = std::uint64_t;

// floor(sqrt(n))
inline Natural isqrt_floor(const Natural& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

// r with r*r == n when n is a perfect square, otherwise empty.
inline std::optional<Natural> integer_sqrt_exact(const Natural& n) {
    if (n < 0) return std::nullopt;
    Natural r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

inline bool is_perfect_square(const Natural& n) { return integer_sqrt_exact(n).has_value(); }

}  // namespace stirnum
