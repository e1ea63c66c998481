#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <stirnum/bounds.hpp>
#include <stirnum/combinatorics.hpp>
#include <stirnum/multiplicity.hpp>

#include "oracles.hpp"

using namespace stirnum;

TEST_CASE("lambert w0 basics") {
    CHECK(lambert_w0(0) == 0.0);
    CHECK(std::abs(lambert_w0(std::numbers::e) - 1.0) < 1e-14);
    CHECK(std::abs(lambert_w0(1.0) - 0.5671432904097838) < 1e-13);
    CHECK(std::abs(lambert_w0(10.0) - 1.7455280027406994) < 1e-13);
    // W(ln(2)/2) and W(4.1589), pinned against the bisection oracle
    CHECK(std::abs(lambert_w0(std::log(2.0) / 2) - 0.2657057362204967) < 1e-13);
    CHECK(std::abs(lambert_w0(4.1589) - 1.2235192659037953) < 1e-13);
    CHECK_THROWS_AS(lambert_w0(-0.1), std::domain_error);
}

TEST_CASE("lambert w0 satisfies its defining equation") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> expo(-3.0, 6.0);
    std::vector<double> xs{1e-3, 1.0, std::numbers::e, 10.0, 1e3, 1e6};
    for (int i = 0; i < 1000; ++i) xs.push_back(std::pow(10.0, expo(rng)));
    for (double x : xs) {
        const double w = lambert_w0(x);
        INFO("x=" << x << " w=" << w);
        REQUIRE(std::abs(w * std::exp(w) - x) <= 1e-12 * std::max(1.0, x));
        REQUIRE(std::abs(w - oracle::lambert_bisect(x)) <= 1e-10 * std::max(1.0, w));
    }
}

TEST_CASE("lambert w0 is strictly increasing") {
    double prev = lambert_w0(0.0);
    for (double x = 0.05; x < 50.0; x += 0.05) {
        const double w = lambert_w0(x);
        REQUIRE(w > prev);
        prev = w;
    }
}

TEST_CASE("log of big naturals") {
    for (u64 v : {1ULL, 2ULL, 1000ULL, 123456789ULL})
        CHECK(std::abs(log_natural(v) - std::log(double(v))) < 1e-14 * std::max(1.0, std::log(double(v))));
    // ln(1000!) against lgamma(1001)
    const double via_lgamma = std::lgamma(1001.0);
    CHECK(std::abs(log_natural(factorial(1000)) - via_lgamma) < 1e-10 * via_lgamma);
    // additivity across the wide-value path
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Natural a = 1;
        const int bits = 700 + int(rng() % 4000);
        for (int b = 0; b < bits / 63; ++b) a = (a << 63) + rng();
        const double la = log_natural(a);
        REQUIRE(std::abs(log_natural(a * a) - 2 * la) < 1e-12 * la);
    }
    CHECK_THROWS_AS(log_natural(0), std::domain_error);
}

TEST_CASE("singmaster bound evaluations") {
    const auto e2 = singmaster_bound(2);
    CHECK(std::abs(e2.w_value - 0.2657057362204967) < 1e-12);
    CHECK(std::abs(e2.bound - 7.2174047156041461) < 1e-11);
    CHECK(e2.bound == 2 * e2.b_limit);

    const auto e4095 = singmaster_bound(4095);
    CHECK(std::abs(e4095.w_value - 1.2235008743751578) < 1e-12);
    CHECK(std::abs(e4095.bound - 15.5962665339899004) < 1e-11);

    const auto e66066 = singmaster_bound(66066);
    CHECK(std::abs(e66066.bound - 18.0067501484045522) < 1e-11);
    CHECK(e66066.bound > 2);  // certifies the observed multiplicity 2

    for (const auto& e : {e2, e4095, e66066})
        REQUIRE(std::abs(e.w_value * std::exp(e.w_value) - e.log_a / 2) <=
                1e-12 * std::max(1.0, e.log_a / 2));

    CHECK_THROWS_AS(singmaster_bound(1), std::domain_error);
}

TEST_CASE("asymptotic comparator") {
    CHECK(std::abs(asymptotic_comparator(16) - 2.7720534104952699) < 1e-12);
    CHECK(std::abs(asymptotic_comparator(100000) - 7.4274492163796774) < 1e-12);
    CHECK_THROWS_AS(asymptotic_comparator(15), std::domain_error);
}

TEST_CASE("proof-chain inequality holds exactly for b in 2..40") {
    // assoc2(2(b-1), b-1) >= ((b-1)/2)^(b-1), cross-multiplied by 2^(b-1)
    for (u64 b = 2; b <= 40; ++b) {
        const u64 m = b - 1;
        Natural lhs = assoc_stirling2(2 * m, m) << m;
        Natural rhs = 1;
        for (u64 i = 0; i < m; ++i) rhs *= m;
        INFO("b=" << b);
        REQUIRE(lhs >= rhs);
    }
}

TEST_CASE("bound dominates every observed multiplicity up to 10^4") {
    for (auto kind : {StirlingKind::SecondKind, StirlingKind::FirstKind}) {
        const auto s = scan_interval(2, 10000, kind);
        for (const auto& [a, occ] : s.hits) {
            INFO(kind_name(kind) << " a=" << a.str());
            REQUIRE(double(occ.size()) <= singmaster_bound(a).bound);
        }
    }
}

TEST_CASE("minimal central index is within the b limit") {
    for (Natural a = 2; a <= 10000; ++a) {
        const u64 b = minimal_central_index(a, StirlingKind::SecondKind);
        const double blim = singmaster_bound(a).b_limit;
        INFO("a=" << a.str() << " b=" << b << " blim=" << blim);
        REQUIRE(double(b) <= std::ceil(blim));
    }
}
