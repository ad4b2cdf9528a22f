#include <doctest.h>

#include <vector>

#include "powerap/powerful.hpp"

using namespace powerap;

TEST_CASE("powerful_in_range examples") {
    CHECK(powerful_in_range(1, 30) == std::vector<u64>{1, 4, 8, 9, 16, 25, 27});
    CHECK(powerful_in_range(1728, 1801) == std::vector<u64>{1728, 1764, 1800});
    CHECK(powerful_in_range(2, 4).empty());
}

TEST_CASE("powerful_in_range matches brute filter up to 1e7") {
    // SPF sieve oracle, independent of the (l, m) enumeration under test.
    const u64 limit = 10000000;
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (u64 p = 2; p <= limit; ++p) {
        if (spf[p] != 0) continue;
        for (u64 q = p; q <= limit; q += p)
            if (spf[q] == 0) spf[q] = std::uint32_t(p);
    }
    std::vector<u64> expected{1};
    for (u64 n = 2; n <= limit; ++n) {
        u64 rest = n;
        bool ok = true;
        while (rest > 1 && ok) {
            u64 p = spf[rest];
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            ok = e >= 2;
        }
        if (ok) expected.push_back(n);
    }
    CHECK(powerful_in_range(1, limit + 1) == expected);
}

TEST_CASE("count asymptotics sanity at 1e8") {
    auto v = powerful_in_range(1, 100000001);
    double ratio = double(v.size()) / 10000.0;
    CHECK(ratio > 2.1);
    CHECK(ratio < 2.3);  // zeta(3/2)/zeta(3) ~ 2.173
}

TEST_CASE("segmented stream equals unsegmented enumeration") {
    const u64 hi = 3000000;
    auto whole = powerful_in_range(5, hi);
    for (u64 seg : {min_segment_size(hi), u64(500000), u64(1) << 22}) {
        PowerfulStream stream({5, hi, seg});
        std::vector<u64> merged;
        for (u64 i = 0; i < stream.segment_count(); ++i) {
            auto part = stream.segment(i);
            merged.insert(merged.end(), part.begin(), part.end());
        }
        CHECK(merged == whole);
    }
    CHECK_THROWS_AS(PowerfulStream({1, hi, 10}), std::invalid_argument);
    CHECK_THROWS_AS(PowerfulStream({9, 9, 1 << 20}), std::invalid_argument);
}

TEST_CASE("count_powerful_in_open_interval examples") {
    CHECK(count_powerful_in_open_interval(1727, 1765) == 2);
    CHECK(count_powerful_in_open_interval(4, 8) == 0);
    u64 V = count_powerful_in_open_interval(11425ull * 11425, 11427ull * 11427);
    CHECK(V == 6);
    CHECK(V >= 2);  // contains 11426^2 and 343 * 617^2 at least
}

TEST_CASE("lemma3_count examples") {
    // (1681, 1849) holds 1728, 1764 and 1800
    CHECK(lemma3_count(43) == 3);
    CHECK(lemma3_count(3) == 2);  // 4 and 8 in (1, 9)
    CHECK(lemma3_count(11427) == 6);
}

TEST_CASE("lemma3_count equals direct interval count for x in [3, 5000]") {
    for (u64 x = 3; x <= 5000; ++x) {
        CAPTURE(x);
        REQUIRE(lemma3_count(x) == count_powerful_in_open_interval((x - 2) * (x - 2), x * x));
    }
}

TEST_CASE("consecutiveness certificate at x = 11427") {
    auto cert = consecutiveness_certificate(11427);
    CHECK(!cert.consecutive);
    CHECK(cert.violating_m == std::vector<u64>{2, 3, 5, 17});
    CHECK(cert.consecutive == (lemma3_count(11427) == 2));
    // 11427^2 - 1 = 11426 * 11428 with 29 || 11426
    CHECK(cert.xsq_minus1 == CertificateResult::XsqMinus1::not_powerful);
    CHECK_THROWS_AS(consecutiveness_certificate(5), NotOrbitMember);
    CHECK_THROWS_AS(consecutiveness_certificate(2), std::domain_error);
}
