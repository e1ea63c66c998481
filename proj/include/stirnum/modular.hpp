#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "natural.hpp"

namespace stirnum {

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

// base^exp mod m by binary exponentiation; 0^0 == 1.
inline u64 mod_pow(u64 base, u64 exp, u64 m) {
    if (m < 2) throw std::domain_error("mod_pow: requires modulus >= 2");
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin; the base set covers all 64-bit inputs.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (n % p == 0) return n == p;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace detail {

// Euler's criterion without the primality check; p must be an odd prime.
inline int euler_symbol(u64 a_mod_p, u64 p) {
    if (a_mod_p == 0) return 0;
    return mod_pow(a_mod_p, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace detail

// Legendre symbol (a/p) via Euler's criterion: one modpow at ~17-bit moduli.
inline int legendre(u64 a, u64 p) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("legendre: p must be an odd prime");
    return detail::euler_symbol(a % p, p);
}

// Ascending odd primes; label records how the set was obtained for reports.
struct PrimeSet {
    std::vector<u64> primes;
    std::string label;
};

inline PrimeSet make_prime_set(std::vector<u64> primes, std::string label) {
    u64 last = 2;
    for (u64 p : primes) {
        if (p <= last) throw std::invalid_argument("prime set must be strictly ascending odd primes");
        if (!is_prime(p)) throw std::invalid_argument("prime set contains composite " + std::to_string(p));
        last = p;
    }
    return PrimeSet{std::move(primes), std::move(label)};
}

// First `count` primes strictly greater than lo (lo >= 2, so all odd).
inline PrimeSet primes_above(u64 lo, std::size_t count) {
    if (count == 0) throw std::invalid_argument("primes_above: count must be >= 1");
    if (lo < 2) throw std::invalid_argument("primes_above: requires lo >= 2");
    std::vector<u64> out;
    out.reserve(count);
    for (u64 c = lo + 1 + (lo % 2); out.size() < count; c += 2)
        if (is_prime(c)) out.push_back(c);
    return PrimeSet{std::move(out), "primes-above-" + std::to_string(lo)};
}

// The first 20 primes past 1e5: 100003..100271.
inline PrimeSet builtin_primes_first20() {
    auto s = primes_above(100000, 20);
    s.label = "builtin-first20";
    return s;
}

// The 19 primes 100019..100271 (the first-20 set without 100003).
inline PrimeSet builtin_primes_19() {
    auto s = primes_above(100000, 20);
    s.primes.erase(s.primes.begin());
    s.label = "builtin-paper";
    return s;
}

// Primes immediately past a sieve set, used to retire its survivors.
inline PrimeSet second_stage_primes(std::size_t count = 12, u64 above = 100271) {
    auto s = primes_above(above, count);
    s.label = "second-stage-above-" + std::to_string(above);
    return s;
}

// One prime per line; blank lines and '#' comments ignored.
inline PrimeSet load_prime_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open prime file: " + path);
    std::vector<u64> primes;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        primes.push_back(std::stoull(line));
    }
    if (primes.empty()) throw std::runtime_error("prime file is empty: " + path);
    return make_prime_set(std::move(primes), path);
}

// n! mod p, advanced one factor at a time. Once n >= p the residue is 0 and
// stays 0, which makes the sieve quantity a perfect square mod p (harmless:
// squares never produce a -1 symbol).
struct FactorialResidueStream {
    u64 p;
    u64 n = 0;
    u64 residue;

    explicit FactorialResidueStream(u64 prime) : p(prime), residue(1 % prime) {}

    void advance() {
        ++n;
        residue = mul_mod(residue, n % p, p);
    }
};

}  // namespace stirnum
