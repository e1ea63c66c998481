#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "combinatorics.hpp"
#include "modular.hpp"
#include "multiplicity.hpp"
#include "natural.hpp"

namespace stirnum {

// P_k(x) = x((k-2)x - k + 4)/2, the x-th k-gonal number. Triangular for k=3,
// square for k=4. The division is exact for every k >= 3, x >= 0.
inline Natural polygonal(u64 k, const Natural& x) {
    if (k < 3) throw std::domain_error("polygonal: requires k >= 3");
    if (x < 0) throw std::domain_error("polygonal: requires x >= 0");
    Natural inner = Natural(k - 2) * x + 4;
    inner -= k;
    return x * inner / 2;
}

namespace detail {

// Quadratic residues mod 45045 = 9*5*7*11*13. An 8n!+1-style target failing
// this table cannot be a perfect square; only ~4.5% of residues pass, so the
// exact isqrt runs rarely.
inline bool maybe_square_mod_45045(u64 r) {
    static const std::vector<bool> table = [] {
        std::vector<bool> t(45045, false);
        for (u64 x = 0; x < 45045; ++x) t[x * x % 45045] = true;
        return t;
    }();
    return table[r];
}

inline Natural square_of_k_minus_4(u64 k) {
    const long long d = static_cast<long long>(k) - 4;
    return Natural(d) * d;
}

}  // namespace detail

struct Diof1Solution {
    u64 n = 0;
    Natural m;
    friend bool operator==(const Diof1Solution&, const Diof1Solution&) = default;
};

// All 6 <= n <= n_max with C(n,4) + 10 C(n,5) + 15 C(n,6) = C(m,2), i.e. with
// 8*S(n,n-3) + 1 an odd perfect square. Uses the factored closed form
// S(n,n-3) = n(n-1)(n-2)^2(n-3)^2 / 48, whose residue mod 48*45045 fits a
// machine word, so the big-integer path runs only on residue-filter survivors.
inline std::vector<Diof1Solution> solve_diof1(u64 n_max) {
    if (n_max < 6) throw std::invalid_argument("solve_diof1: requires n_max >= 6");
    constexpr u64 wheel = 45045;
    constexpr u64 mod = 48 * wheel;
    std::vector<Diof1Solution> out;
    for (u64 n = 6; n <= n_max; ++n) {
        u64 r = n % mod;
        r = r * ((n - 1) % mod) % mod;
        const u64 a2 = (n - 2) % mod, a3 = (n - 3) % mod;
        r = r * a2 % mod;
        r = r * a2 % mod;
        r = r * a3 % mod;
        r = r * a3 % mod;
        // n(n-1)(n-2)^2(n-3)^2 is divisible by 48, and 48 | mod keeps it so
        const u64 t_mod = (8 * (r / 48) + 1) % wheel;
        if (!detail::maybe_square_mod_45045(t_mod)) continue;
        const Natural t = 8 * stirling2_near_diagonal(n) + 1;
        if (auto s = integer_sqrt_exact(t)) out.push_back({n, (1 + *s) / 2});
    }
    return out;
}

struct Diof2Solution {
    u64 n = 0;
    Natural m;
    friend bool operator==(const Diof2Solution&, const Diof2Solution&) = default;
};

// All (n, m) with n! = m(m-1)/2, n <= n_max, m > 1: tests 8n!+1 = (2m-1)^2.
// Four Euler symbols mod primes above 1e6 reject most non-squares before the
// exact isqrt touches the full factorial.
inline std::vector<Diof2Solution> solve_diof2(u64 n_max) {
    if (n_max < 1) throw std::invalid_argument("solve_diof2: requires n_max >= 1");
    static const PrimeSet filter = primes_above(1000000, 4);
    std::vector<FactorialResidueStream> streams;
    for (u64 p : filter.primes) streams.emplace_back(p);
    std::vector<Diof2Solution> out;
    Natural f = 1;
    for (u64 n = 1; n <= n_max; ++n) {
        f *= n;
        bool viable = true;
        for (auto& st : streams) {
            st.advance();
            if (detail::euler_symbol((8 * st.residue + 1) % st.p, st.p) == -1) viable = false;
        }
        if (!viable) continue;
        if (auto s = integer_sqrt_exact(8 * f + 1)) {
            Natural m = (1 + *s) / 2;
            if (m > 1) out.push_back({n, m});
        }
    }
    return out;
}

struct RamanujanNagellEntry {
    u64 n = 0;
    Natural value;  // 2^n - 1
    friend bool operator==(const RamanujanNagellEntry&, const RamanujanNagellEntry&) = default;
};

// All n <= n_max with 2^n - 1 triangular.
inline std::vector<RamanujanNagellEntry> ramanujan_nagell(u64 n_max) {
    std::vector<RamanujanNagellEntry> out;
    Natural v = 0;
    for (u64 n = 0; n <= n_max; ++n) {
        if (is_perfect_square(8 * v + 1)) out.push_back({n, v});
        v = 2 * v + 1;
    }
    return out;
}

struct SolutionTriple {
    u64 k = 0;
    u64 n = 0;
    Natural x;
    friend bool operator==(const SolutionTriple&, const SolutionTriple&) = default;
};

struct DirectSolveReport {
    u64 k = 0;
    u64 n_max = 0;
    std::vector<SolutionTriple> solutions;
    u64 dropped_unit_roots = 0;  // x = 1 roots excluded by the x > 1 side condition
};

// Solves n! = P_k(x) for 1 < n <= n_max, x > 1 via the square completion
// 8(k-2)n! + (k-4)^2 = (2(k-2)x + (4-k))^2, in exact arithmetic.
inline DirectSolveReport solve_polygonal_direct(u64 k, u64 n_max) {
    if (k < 3) throw std::domain_error("solve_polygonal_direct: requires k >= 3");
    if (k == 4) throw std::invalid_argument("solve_polygonal_direct: k = 4 is n! = x^2; see k4_special");
    DirectSolveReport rep{k, n_max, {}, 0};
    const Natural b = detail::square_of_k_minus_4(k);
    Natural f = 1;
    for (u64 n = 2; n <= n_max; ++n) {
        f *= n;
        const Natural q = 8 * (k - 2) * f + b;
        if (auto y = integer_sqrt_exact(q)) {
            Natural num = *y + k;
            num -= 4;  // y >= |k-4| keeps this non-negative
            const Natural den = 2 * (k - 2);
            if (num % den == 0) {
                Natural x = num / den;
                if (x > 1)
                    rep.solutions.push_back({k, n, x});
                else
                    ++rep.dropped_unit_roots;
            }
        }
    }
    return rep;
}

struct K4Report {
    u64 unique_n = 1;
    u64 unique_x = 1;
    u64 scanned_to = 0;
    std::vector<u64> extra_square_factorials;  // stays empty
};

// k = 4 reduces to n! = x^2, whose only solution is (1,1): some prime in
// (n/2, n] divides n! exactly once for n >= 2. The scan re-confirms the range.
inline K4Report k4_special(u64 scan_limit = 30) {
    K4Report rep{1, 1, scan_limit, {}};
    Natural f = 1;
    for (u64 n = 2; n <= scan_limit; ++n) {
        f *= n;
        if (is_perfect_square(f)) rep.extra_square_factorials.push_back(n);
    }
    return rep;
}

enum class Disposition { Solution, EliminatedByPrime, DirectZoneExhausted, Survivor };

inline const char* disposition_name(Disposition d) {
    switch (d) {
        case Disposition::Solution: return "solution";
        case Disposition::EliminatedByPrime: return "eliminated";
        case Disposition::DirectZoneExhausted: return "exhausted";
        case Disposition::Survivor: return "survivor";
    }
    return "?";
}

struct SieveOutcome {
    u64 k = 0;
    u64 n = 0;
    Disposition disposition = Disposition::Survivor;
    u64 witness = 0;  // eliminating prime, when disposition is EliminatedByPrime
    Natural x;        // polygonal index, when disposition is Solution
};

struct SecondStageOutcome {
    u64 k = 0;
    u64 n = 0;
    u64 witness = 0;  // 0 when no prime of the extended set eliminates the pair
};

struct SieveOptions {
    u64 direct_zone_max = 8;    // n <= this and prime-free resolves exactly
    bool keep_eliminated = false;
    unsigned jobs = 1;
    std::optional<PrimeSet> second_stage;
};

struct SieveReport {
    u64 kmin = 0, kmax = 0, n_max = 0;
    PrimeSet primes;
    u64 direct_zone_max = 8;
    std::vector<SieveOutcome> outcomes;  // sorted by (k, n); eliminations kept on request
    u64 eliminated_count = 0;
    u64 dropped_unit_roots = 0;
    std::vector<SecondStageOutcome> second_stage;

    // Pairs no prime of the sieve set eliminates: solutions, direct-zone
    // exhaustions and survivors alike. This is the published-list notion of
    // "survivor"; the direct zone merely resolves its small-n members.
    std::vector<std::pair<u64, u64>> not_eliminated() const {
        std::vector<std::pair<u64, u64>> out;
        for (const auto& o : outcomes)
            if (o.disposition != Disposition::EliminatedByPrime) out.emplace_back(o.k, o.n);
        return out;
    }

    std::vector<SieveOutcome> survivors() const {
        std::vector<SieveOutcome> out;
        for (const auto& o : outcomes)
            if (o.disposition == Disposition::Survivor) out.push_back(o);
        return out;
    }
};

namespace detail {

struct KSieveResult {
    std::vector<SieveOutcome> outcomes;
    u64 eliminated = 0;
    u64 dropped_unit_roots = 0;
};

// One gonality: factorial residue streams advance in lockstep over n; the
// first prime whose symbol is -1 eliminates (0 and +1 are inconclusive and
// never do). Prime-free pairs with n <= direct_zone_max get the exact test.
inline KSieveResult sieve_one_k(u64 k, u64 n_max, const PrimeSet& ps, const SieveOptions& opt) {
    KSieveResult res;
    const std::size_t np = ps.primes.size();
    const long long d = static_cast<long long>(k) - 4;
    std::vector<u64> mult(np), sq(np);
    std::vector<FactorialResidueStream> streams;
    streams.reserve(np);
    for (std::size_t i = 0; i < np; ++i) {
        const u64 p = ps.primes[i];
        mult[i] = 8 * (k - 2) % p;
        sq[i] = static_cast<u64>(d * d) % p;
        streams.emplace_back(p);
        streams[i].advance();  // 1!
    }
    const Natural b = square_of_k_minus_4(k);
    Natural f = 1;  // exact n!, maintained only while inside the direct zone
    for (u64 n = 2; n <= n_max; ++n) {
        if (n <= opt.direct_zone_max) f *= n;
        u64 witness = 0;
        for (std::size_t i = 0; i < np; ++i) {
            auto& st = streams[i];
            st.advance();
            if (witness != 0) continue;  // streams still need advancing past a kill
            const u64 p = st.p;
            const u64 q = (mul_mod(mult[i], st.residue, p) + sq[i]) % p;
            if (euler_symbol(q, p) == -1) witness = p;
        }
        if (witness != 0) {
            ++res.eliminated;
            if (opt.keep_eliminated)
                res.outcomes.push_back({k, n, Disposition::EliminatedByPrime, witness, Natural(0)});
            continue;
        }
        if (n <= opt.direct_zone_max) {
            const Natural q = 8 * (k - 2) * f + b;
            bool solved = false;
            if (auto y = integer_sqrt_exact(q)) {
                Natural num = *y + k;
                num -= 4;
                const Natural den = 2 * (k - 2);
                if (num % den == 0) {
                    Natural x = num / den;
                    if (x > 1) {
                        res.outcomes.push_back({k, n, Disposition::Solution, 0, x});
                        solved = true;
                    } else {
                        ++res.dropped_unit_roots;
                    }
                }
            }
            if (!solved)
                res.outcomes.push_back({k, n, Disposition::DirectZoneExhausted, 0, Natural(0)});
        } else {
            res.outcomes.push_back({k, n, Disposition::Survivor, 0, Natural(0)});
        }
    }
    return res;
}

}  // namespace detail

// Legendre symbol of 8(k-2)n! + (k-4)^2 mod p, the sieve quantity for the
// k-gonal equation at row n. -1 certifies n! != P_k(x) for every x.
inline int verify_witness(u64 k, u64 n, u64 p) {
    if (k < 3) throw std::domain_error("verify_witness: requires k >= 3");
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("verify_witness: p must be an odd prime");
    u64 r = 1 % p;
    for (u64 i = 2; i <= n; ++i) r = mul_mod(r, i % p, p);
    const long long d = static_cast<long long>(k) - 4;
    const u64 q = (mul_mod(8 * (k - 2) % p, r, p) + static_cast<u64>(d * d) % p) % p;
    return detail::euler_symbol(q, p);
}

// Runs the Legendre sieve for every k in [kmin, kmax] \ {4} and n in
// [2, n_max]. Work is partitioned by k when opts.jobs > 1; the merged report
// is identical for any job count.
inline SieveReport sieve_polygonal(u64 kmin, u64 kmax, u64 n_max, const PrimeSet& primes,
                                   const SieveOptions& opts = {}) {
    if (kmin < 3 || kmin > kmax) throw std::invalid_argument("sieve_polygonal: bad k range");
    if (n_max < 2) throw std::invalid_argument("sieve_polygonal: requires n_max >= 2");
    if (primes.primes.empty()) throw std::invalid_argument("sieve_polygonal: empty prime set");

    std::vector<u64> ks;
    for (u64 k = kmin; k <= kmax; ++k)
        if (k != 4) ks.push_back(k);

    std::vector<detail::KSieveResult> results(ks.size());
    const unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1 || ks.size() <= 1) {
        for (std::size_t i = 0; i < ks.size(); ++i)
            results[i] = detail::sieve_one_k(ks[i], n_max, primes, opts);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < ks.size(); i += jobs)
                    results[i] = detail::sieve_one_k(ks[i], n_max, primes, opts);
            });
        for (auto& th : pool) th.join();
    }

    SieveReport rep;
    rep.kmin = kmin;
    rep.kmax = kmax;
    rep.n_max = n_max;
    rep.primes = primes;
    rep.direct_zone_max = opts.direct_zone_max;
    for (auto& r : results) {
        rep.eliminated_count += r.eliminated;
        rep.dropped_unit_roots += r.dropped_unit_roots;
        rep.outcomes.insert(rep.outcomes.end(), r.outcomes.begin(), r.outcomes.end());
    }

    if (opts.second_stage) {
        for (const auto& o : rep.outcomes) {
            if (o.disposition != Disposition::Survivor) continue;
            SecondStageOutcome s{o.k, o.n, 0};
            for (u64 p : opts.second_stage->primes) {
                if (verify_witness(o.k, o.n, p) == -1) {
                    s.witness = p;
                    break;
                }
            }
            rep.second_stage.push_back(s);
        }
    }
    return rep;
}

}  // namespace stirnum
