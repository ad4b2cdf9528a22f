#include <doctest.h>

#include <cmath>

#include "powerap/heuristics.hpp"
#include "powerap/pell.hpp"
#include "powerap/powerful.hpp"

using namespace powerap;

TEST_CASE("density_product brackets are nested and ordered") {
    Bracket coarse = density_product({1, 7}, 1000);
    Bracket mid = density_product({1, 7}, 100000);
    Bracket fine = density_product({1, 7}, 1000000);
    CHECK(coarse.lo <= coarse.hi);
    CHECK(mid.lo >= coarse.lo);
    CHECK(mid.hi <= coarse.hi);
    CHECK(fine.lo >= mid.lo);
    CHECK(fine.hi <= mid.hi);
    CHECK(fine.width() < mid.width());
    // paper-scale value
    CHECK(fine.contains(0.0552));

    // removing the m = 7 exclusion adds one more factor below 1
    Bracket all = density_product({1}, 1000);
    CHECK(all.hi < coarse.hi);

    CHECK_THROWS_AS(density_product({2}, 1000), TruncationTooSmall);
    CHECK_THROWS_AS(density_product({1}, 5), std::domain_error);
}

TEST_CASE("C_7 bracket") {
    Bracket c7 = compute_C_m(7, 1000000);
    CHECK(c7.lo <= c7.hi);
    // rounds to the 2-significant-figure value 0.0014
    CHECK(c7.lo > 0.00135);
    CHECK(c7.hi < 0.00145);
    CHECK(c7.contains(0.0014249));

    CHECK_THROWS_AS(compute_C_m(5, 1000), NotInM);
}

TEST_CASE("growth constant matches the recurrence literal") {
    FundamentalSolution f = fundamental_solution(343);
    RecurrenceSpec spec = build_recurrence_343();
    CHECK(f.u0 == spec.A);
    CHECK(343 * f.v0 * f.v0 == mpz_class(spec.A) * spec.A - 1);
}

TEST_CASE("orbit_count_asymptotic") {
    const double A = 130576328.0;
    double log_alpha = std::log(A + std::sqrt(A * A - 1.0));
    CHECK(orbit_count_asymptotic(std::exp(2.0 * log_alpha)) == doctest::Approx(1.0));
    CHECK(orbit_count_asymptotic(1e14) == doctest::Approx(0.8316606).epsilon(1e-5));
    // counted directly: x_k^2 <= n holds for k = 0 only once n reaches x_0^2
    RecurrenceSpec spec = build_recurrence_343();
    auto sols = orbit(spec, 5);
    double n = 1e26;
    u64 counted = 0;
    for (const auto& s : sols)
        if (mpz_get_d(s.x.get_mpz_t()) * mpz_get_d(s.x.get_mpz_t()) <= n) ++counted;
    double predicted = orbit_count_asymptotic(n);
    CHECK(std::abs(double(counted) - predicted) < 1.5);
}

TEST_CASE("empirical_interval_density small cases") {
    // exact count at x_max = 100 against the interval-count oracle
    u64 good = 0;
    for (u64 x = 3; x <= 100; ++x) {
        if (count_powerful_in_open_interval((x - 2) * (x - 2), (x - 1) * (x - 1)) == 0 &&
            count_powerful_in_open_interval((x - 1) * (x - 1), x * x) == 1)
            ++good;
    }
    CHECK(empirical_interval_density(100) == doctest::Approx(double(good) / 98.0));

    double d4 = empirical_interval_density(10000);
    double d5 = empirical_interval_density(100000);
    CHECK(std::abs(d4 - d5) < 0.02);
}

TEST_CASE("enumerate_M") {
    CHECK(enumerate_M(10) == std::vector<u64>{7});
    CHECK(enumerate_M(2).empty());
    auto L = enumerate_M(200);
    CHECK(L == std::vector<u64>{7, 23, 31, 47, 71, 79, 103, 119, 127, 151, 167, 191, 199});
    // dual-method spot check: the smallest member admits a bounded rhs-2 witness
    auto w = solve_rhs2(343, 1000);
    REQUIRE(w.has_value());
    CHECK(w->x * w->x - 343 * w->y * w->y == 2);
}
