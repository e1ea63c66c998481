#pragma once

#include <compare>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "combinatorics.hpp"
#include "natural.hpp"

namespace stirnum {

// A position (row n, column k) of the kind-i triangle holding some value.
struct Occurrence {
    StirlingKind kind = StirlingKind::SecondKind;
    u64 n = 0;
    u64 k = 0;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
    friend std::strong_ordering operator<=>(const Occurrence& a, const Occurrence& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        return a.k <=> b.k;
    }
};

// The values 0 and 1 sit in every row, so their multiplicity is infinite and
// they are reported symbolically instead of being counted.
class infinite_multiplicity_error : public std::domain_error {
  public:
    explicit infinite_multiplicity_error(const Natural& a)
        : std::domain_error("multiplicity of " + a.str() +
                            " is infinite: it occurs in every triangle row") {}
};

struct MultiplicityReport {
    Natural a;
    StirlingKind kind = StirlingKind::SecondKind;
    std::vector<Occurrence> occurrences;  // sorted by (n, k)
    u64 count() const { return occurrences.size(); }
};

// Largest n with C(n,2) <= a, i.e. floor((1 + sqrt(1+8a))/2). Rows beyond it
// cannot contain a: by log-concavity the smallest entry of row n over columns
// 2..n-1 is min(st(n,2), st(n,n-1)) = C(n,2) once n >= 4, and columns 1, n
// only ever hold 1 (second kind) or (n-1)! >= C(n,2) (first kind, n >= 4).
inline Natural row_limit(const Natural& a) {
    if (a < 2) throw std::domain_error("row_limit: requires a >= 2");
    Natural s = isqrt_floor(8 * a + 1);
    return (1 + s) / 2;
}

namespace detail {

// Rows 1..3 are always visited: c(3,1) = 2 lies below the C(n,2) floor.
inline u64 scan_row_bound(const Natural& hi) {
    Natural lim = row_limit(hi);
    if (lim < 3) lim = 3;
    if (lim > (std::numeric_limits<u64>::max)())
        throw std::overflow_error("scan_row_bound: interval too large");
    return lim.convert_to<u64>();
}

template <typename Visit>
void visit_triangle(StirlingKind kind, u64 n_hi, Visit&& visit) {
    std::vector<Natural> row{Natural(1)};
    for (u64 n = 1; n <= n_hi; ++n) {
        advance_row(row, kind);
        for (u64 k = 1; k <= n; ++k) visit(n, k, row[k]);
    }
}

}  // namespace detail

// Exact count and positions of a in the chosen triangle (a >= 2).
inline MultiplicityReport multiplicity(const Natural& a, StirlingKind kind) {
    if (a == 0 || a == 1) throw infinite_multiplicity_error(a);
    if (a < 0) throw std::domain_error("multiplicity: negative target");
    MultiplicityReport rep{a, kind, {}};
    detail::visit_triangle(kind, detail::scan_row_bound(a), [&](u64 n, u64 k, const Natural& v) {
        if (v == a) rep.occurrences.push_back({kind, n, k});
    });
    return rep;
}

enum class TrivialValues { Exclude, Include };

struct ScanSummary {
    Natural lo, hi;
    StirlingKind kind = StirlingKind::SecondKind;
    bool includes_trivial = false;
    // Synthetic keys 0 and 1 (infinite multiplicity) map to empty lists.
    std::map<Natural, std::vector<Occurrence>> hits;
    u64 distinct_hits() const { return hits.size(); }
};

// One pass over rows 1..row bound of hi, collecting every entry in [lo, hi].
// lo < 2 demands TrivialValues::Include, which records 0 and 1 once each.
inline ScanSummary scan_interval(const Natural& lo, const Natural& hi, StirlingKind kind,
                                 TrivialValues trivial = TrivialValues::Exclude) {
    if (lo > hi) throw std::invalid_argument("scan_interval: lo > hi");
    if (lo < 0) throw std::domain_error("scan_interval: negative lo");
    if (lo < 2 && trivial == TrivialValues::Exclude)
        throw std::domain_error(
            "scan_interval: 0 and 1 occur in every row; pass TrivialValues::Include");
    ScanSummary s{lo, hi, kind, trivial == TrivialValues::Include, {}};
    if (s.includes_trivial)
        for (Natural v = 0; v <= 1; ++v)
            if (lo <= v && v <= hi) s.hits.emplace(v, std::vector<Occurrence>{});
    const Natural lo_eff = lo < 2 ? Natural(2) : lo;
    if (lo_eff > hi) return s;
    detail::visit_triangle(kind, detail::scan_row_bound(hi), [&](u64 n, u64 k, const Natural& v) {
        if (lo_eff <= v && v <= hi) s.hits[v].push_back({kind, n, k});
    });
    return s;
}

// Every a in [2, hi] appearing at least twice, with full position lists.
inline std::vector<MultiplicityReport> find_collisions(const Natural& hi, StirlingKind kind) {
    if (hi < 2) throw std::domain_error("find_collisions: requires hi >= 2");
    auto s = scan_interval(2, hi, kind);
    std::vector<MultiplicityReport> out;
    for (const auto& [a, occ] : s.hits)
        if (occ.size() >= 2) out.push_back({a, kind, occ});
    return out;
}

// Smallest b >= 1 whose central value st(2b, b) strictly exceeds a. Exists and
// is unique because the central sequence is strictly increasing.
inline u64 minimal_central_index(const Natural& a, StirlingKind kind) {
    if (a < 1) throw std::domain_error("minimal_central_index: requires a >= 1");
    std::vector<Natural> row{Natural(1)};
    u64 row_n = 0;
    for (u64 b = 1;; ++b) {
        while (row_n < 2 * b) {
            advance_row(row, kind);
            ++row_n;
        }
        if (row[b] > a) return b;
    }
}

}  // namespace stirnum
