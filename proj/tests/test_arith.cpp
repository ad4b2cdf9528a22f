#include <doctest.h>

#include <map>
#include <random>

#include "powerap/arith.hpp"

using namespace powerap;

namespace {

// Independent factorization oracle: full trial division, nothing shared with
// the implementation under test.
std::map<u64, int> factor_oracle(u64 n) {
    std::map<u64, int> f;
    for (u64 p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1) ++f[n];
    return f;
}

bool powerful_oracle(u64 n) {
    for (auto [p, e] : factor_oracle(n))
        if (e < 2) return false;
    return true;
}

}  // namespace

TEST_CASE("isqrt examples") {
    CHECK(isqrt(u64(0)) == 0);
    CHECK(isqrt(u64(1764)) == 42);
    CHECK(isqrt(u64(1763)) == 41);
    CHECK(isqrt(mpz_class("2984191388685") * mpz_class("2984191388685")) ==
          mpz_class("2984191388685"));
}

TEST_CASE("isqrt bracket property") {
    for (u64 n = 0; n <= 100000; ++n) {
        u64 r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
    std::mt19937_64 rng(42);
    for (int i = 0; i < 20000; ++i) {
        u64 n = rng() % 1000000;
        u64 r = isqrt(n);
        REQUIRE(r * r <= n);
        REQUIRE((r + 1) * (r + 1) > n);
    }
    // near the top of the u64 range
    u64 top = ~u64(0);
    u64 r = isqrt(top);
    CHECK(r == 4294967295ull);
    CHECK(r * r <= top);
}

TEST_CASE("is_square") {
    CHECK(is_square(u64(1764)));
    CHECK(!is_square(u64(1800)));
    CHECK(is_square(u64(0)));
}

TEST_CASE("is_squarefree") {
    CHECK(is_squarefree(7));
    CHECK(!is_squarefree(648560));  // 2^4 divides it
    CHECK(is_squarefree(1));
}

TEST_CASE("is_powerful examples") {
    CHECK(is_powerful(1800));  // 2^3 3^2 5^2
    CHECK(is_powerful(1));
    CHECK(!is_powerful(1801));  // prime
}

TEST_CASE("decompose_powerful examples") {
    auto d = decompose_powerful(1728);
    CHECK(d.l == 8);
    CHECK(d.m == 3);
    d = decompose_powerful(1);
    CHECK(d.l == 1);
    CHECK(d.m == 1);
    d = decompose_powerful(130576327);  // 11427^2 - 2 = 343 * 617^2
    CHECK(d.l == 617);
    CHECK(d.m == 7);
    CHECK_THROWS_AS(decompose_powerful(1801), NotPowerful);
    CHECK_THROWS_AS(decompose_powerful(12), NotPowerful);
}

TEST_CASE("is_powerful and decompose agree with factorization oracle up to 1e6") {
    std::map<std::pair<u64, u64>, u64> seen;
    for (u64 n = 1; n <= 1000000; ++n) {
        bool oracle = powerful_oracle(n);
        REQUIRE(is_powerful(n) == oracle);
        if (!oracle) continue;
        auto d = decompose_powerful(n);
        REQUIRE(d.l * d.l * d.m * d.m * d.m == n);
        REQUIRE(is_squarefree(d.m));
        // injectivity: no two powerful values share an (l, m)
        auto [it, fresh] = seen.emplace(std::make_pair(d.l, d.m), n);
        REQUIRE(fresh);
    }
}

TEST_CASE("squarefree sieve matches trial division") {
    SquarefreeSieve sieve(5000);
    for (u64 m = 1; m <= 5000; ++m) CHECK(sieve(m) == is_squarefree(m));
}
