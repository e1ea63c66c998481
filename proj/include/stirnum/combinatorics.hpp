#pragma once

#include <stdexcept>
#include <vector>

#include "natural.hpp"

namespace stirnum {

// FirstKind means the unsigned (signless) Stirling numbers c(n,k): permutations
// of n letters with k cycles. SecondKind is S(n,k): partitions of an n-set into
// k non-empty blocks.
enum class StirlingKind : int { FirstKind = 1, SecondKind = 2 };

inline const char* kind_name(StirlingKind k) {
    return k == StirlingKind::FirstKind ? "first" : "second";
}

struct TriangleRow {
    u64 n = 0;
    StirlingKind kind = StirlingKind::SecondKind;
    std::vector<Natural> values;  // indexed by k = 0..n
};

inline Natural factorial(u64 n) {
    Natural f = 1;
    for (u64 i = 2; i <= n; ++i) f *= i;
    return f;
}

// Exact binomial coefficient; 0 when k > n.
inline Natural binomial(u64 n, u64 k) {
    if (k > n) return Natural(0);
    if (k > n - k) k = n - k;
    Natural r = 1;
    for (u64 i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

// Replaces row n by row n+1 of the chosen triangle, in place.
// S(n+1,k) = S(n,k-1) + k*S(n,k);  c(n+1,k) = c(n,k-1) + n*c(n,k).
inline void advance_row(std::vector<Natural>& row, StirlingKind kind) {
    const u64 m = row.size() - 1;  // index of the row currently held
    row.emplace_back(0);
    if (kind == StirlingKind::SecondKind) {
        for (u64 k = m + 1; k >= 1; --k) row[k] = row[k - 1] + k * row[k];
    } else {
        for (u64 k = m + 1; k >= 1; --k) row[k] = row[k - 1] + m * row[k];
    }
    row[0] = 0;
}

inline TriangleRow stirling_row(u64 n, StirlingKind kind) {
    TriangleRow r{n, kind, {Natural(1)}};
    for (u64 m = 0; m < n; ++m) advance_row(r.values, kind);
    return r;
}

inline Natural stirling(u64 n, u64 k, StirlingKind kind) {
    if (k > n) return Natural(0);
    std::vector<Natural> row{Natural(1)};
    for (u64 m = 0; m < n; ++m) advance_row(row, kind);
    return row[k];
}

inline Natural stirling2(u64 n, u64 k) { return stirling(n, k, StirlingKind::SecondKind); }
inline Natural stirling1(u64 n, u64 k) { return stirling(n, k, StirlingKind::FirstKind); }

// a_k^2 >= a_{k-1} * a_{k+1} across the row; row minima therefore sit next to
// the ends, which is what the scan's row bound relies on.
inline bool row_is_log_concave(const TriangleRow& r) {
    for (u64 k = 1; k + 1 <= r.n; ++k)
        if (r.values[k] * r.values[k] < r.values[k - 1] * r.values[k + 1]) return false;
    return true;
}

// Partitions of an n-set into k blocks, every block of size >= 2.
// Recurrence: S2a(n,k) = k*S2a(n-1,k) + (n-1)*S2a(n-2,k-1), S2a(0,0) = 1.
inline Natural assoc_stirling2(u64 n, u64 k) {
    if (k > n) return Natural(0);
    if (n == 0) return Natural(k == 0 ? 1 : 0);
    std::vector<Natural> prev2(k + 1), prev1(k + 1), cur(k + 1);
    prev1[0] = 1;  // prev1 = row 0, prev2 = all-zero row "-1"
    for (u64 i = 1; i <= n; ++i) {
        cur.assign(k + 1, Natural(0));
        for (u64 j = 1; j <= k; ++j) {
            cur[j] = j * prev1[j];
            if (i >= 2) cur[j] += (i - 1) * prev2[j - 1];
        }
        prev2.swap(prev1);
        prev1.swap(cur);
    }
    return prev1[k];
}

// Fixed-point-free permutations of n letters with k cycles.
// Recurrence: c2a(n,k) = (n-1)*(c2a(n-1,k) + c2a(n-2,k-1)), c2a(0,0) = 1.
inline Natural assoc_stirling1(u64 n, u64 k) {
    if (k > n) return Natural(0);
    if (n == 0) return Natural(k == 0 ? 1 : 0);
    std::vector<Natural> prev2(k + 1), prev1(k + 1), cur(k + 1);
    prev1[0] = 1;  // prev1 = row 0, prev2 = all-zero row "-1"
    for (u64 i = 1; i <= n; ++i) {
        cur.assign(k + 1, Natural(0));
        for (u64 j = 1; j <= k; ++j) {
            Natural t = prev1[j];
            if (i >= 2) t += prev2[j - 1];
            cur[j] = (i - 1) * t;
        }
        prev2.swap(prev1);
        prev1.swap(cur);
    }
    return prev1[k];
}

inline Natural assoc_stirling(u64 n, u64 k, StirlingKind kind) {
    return kind == StirlingKind::SecondKind ? assoc_stirling2(n, k) : assoc_stirling1(n, k);
}

// (2b)! / (b! * 2^b), the central associated Stirling number of either kind.
inline Natural central_assoc_closed_form(u64 b) {
    Natural num = factorial(2 * b);
    Natural den = factorial(b) << b;
    Natural q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("central_assoc_closed_form: inexact division");
    return q;
}

// S(n, n-3) = C(n,4) + 10*C(n,5) + 15*C(n,6), n >= 4.
inline Natural stirling2_near_diagonal(u64 n) {
    if (n < 4) throw std::domain_error("stirling2_near_diagonal: requires n >= 4");
    return binomial(n, 4) + 10 * binomial(n, 5) + 15 * binomial(n, 6);
}

// Checks  st(n, n-k) == sum_{j=0..k} st_assoc(k+j, j) * C(n, k+j)  exactly.
inline bool verify_identity(u64 n, u64 k, StirlingKind kind) {
    if (n < k + 1) throw std::invalid_argument("verify_identity: requires n >= k+1");
    Natural lhs = stirling(n, n - k, kind);
    Natural rhs = 0;
    for (u64 j = 0; j <= k; ++j) rhs += assoc_stirling(k + j, j, kind) * binomial(n, k + j);
    return lhs == rhs;
}

}  // namespace stirnum
