#include "powerap/heuristics.hpp"

#include <cmath>

#include "powerap/pell.hpp"
#include "powerap/powerful.hpp"

namespace powerap {

namespace {

constexpr u64 kSieveBlock = u64(1) << 22;

// Calls f(m) for every squarefree m in [2, n], in order. Segmented so the
// marking table stays small for truncations up to 1e8 and beyond.
template <typename F>
void for_each_squarefree(u64 n, F&& f) {
    u64 root = isqrt(n);
    std::vector<u64> primes;
    {
        std::vector<bool> comp(root + 1, false);
        for (u64 p = 2; p <= root; ++p) {
            if (comp[p]) continue;
            primes.push_back(p);
            for (u64 q = p * p; q <= root; q += p) comp[q] = true;
        }
    }
    std::vector<bool> marked;
    for (u64 base = 2; base <= n; base += kSieveBlock) {
        u64 end = std::min(n + 1, base + kSieveBlock);
        marked.assign(end - base, false);
        for (u64 p : primes) {
            u64 p2 = p * p;
            if (p2 >= end) break;
            u64 q = (base + p2 - 1) / p2 * p2;
            for (; q < end; q += p2) marked[q - base] = true;
        }
        for (u64 m = base; m < end; ++m)
            if (!marked[m - base]) f(m);
    }
}

// Enclosure of log(u0 + sqrt(u0^2 - 1)) for an arbitrary-precision u0 >= 2.
Bracket log_growth(const mpz_class& u0) {
    // u0 + sqrt(u0^2-1) = 2 u0 - beta with beta = 1/(u0 + sqrt(u0^2-1)) < 1/u0.
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, u0.get_mpz_t());
    double log2u0 = std::log(mant) + double(exp2) * std::log(2.0) + std::log(2.0);
    double u0d = mpz_get_d(u0.get_mpz_t());
    double delta = 1.0 / (u0d * u0d);  // > beta/(2 u0 - beta), crude but valid
    double pad = 1e-12 * std::abs(log2u0) + 1e-12;
    return {log2u0 - delta - pad, log2u0 + pad};
}

}  // namespace

Bracket density_product(const std::set<u64>& excluded, u64 truncation) {
    if (!excluded.count(1))
        throw TruncationTooSmall("density_product: excluded must contain 1 (its factor is negative)");
    if (truncation < 10) throw std::domain_error("density_product: truncation must be >= 10");

    double log_sum = 0.0;
    u64 terms = 0;
    for_each_squarefree(truncation, [&](u64 m) {
        if (excluded.count(m)) return;
        log_sum += std::log1p(-2.0 / (double(m) * std::sqrt(double(m))));
        ++terms;
    });

    // Tail of the log-product: sum_{m>T} -log(1 - u_m) <= (4/sqrt(T)) / (1 - u_T).
    double t = double(truncation);
    double u_t = 2.0 / (t * std::sqrt(t));
    double tail = (4.0 / std::sqrt(t)) / (1.0 - u_t);
    // Padding for rounding in the log1p accumulation.
    double pad = 3e-15 * double(terms) + 1e-12;

    double hi = std::exp(log_sum + pad);
    double lo = std::exp(log_sum - tail - pad);
    return {lo, hi};
}

Bracket compute_C_m(u64 m, u64 truncation) {
    if (!membership_in_M(m)) throw NotInM("compute_C_m: m is not in M");
    Bracket prod = density_product({1, m}, truncation);
    FundamentalSolution f = fundamental_solution(m * m * m);
    Bracket lg = log_growth(f.u0);
    return {0.5 * prod.lo / lg.hi, 0.5 * prod.hi / lg.lo};
}

double orbit_count_asymptotic(double n) {
    if (n <= 1.0) throw std::domain_error("orbit_count_asymptotic: n must be > 1");
    const double A = 130576328.0;
    return std::log(n) / (2.0 * std::log(A + std::sqrt(A * A - 1.0)));
}

double empirical_interval_density(u64 x_max) {
    if (x_max < 100) throw std::domain_error("empirical_interval_density: x_max must be >= 100");
    u64 top = x_max * x_max;  // count powerful values below x_max^2
    // gap[x] = number of non-square powerful values in ((x-1)^2, x^2)
    std::vector<std::uint16_t> gap(x_max + 1, 0);
    u64 mcap = static_cast<u64>(std::cbrt(double(top)));
    while (u128(mcap) * mcap * mcap >= top) --mcap;
    while (u128(mcap + 1) * (mcap + 1) * (mcap + 1) < top) ++mcap;
    std::vector<u64> ms{1};
    for_each_squarefree(mcap, [&](u64 m) { ms.push_back(m); });
    for (u64 m : ms) {
        u64 m3 = m * m * m;
        u64 lmax = isqrt((top - 1) / m3);
        for (u64 l = 1; l <= lmax; ++l) {
            u64 v = l * l * m3;
            u64 r = isqrt(v);
            if (r * r == v) continue;
            u64 x = r + 1;
            if (x <= x_max) ++gap[x];
        }
    }
    u64 good = 0;
    for (u64 x = 3; x <= x_max; ++x)
        if (gap[x - 1] == 0 && gap[x] == 1) ++good;
    return double(good) / double(x_max - 2);
}

std::vector<u64> enumerate_M(u64 m_max) {
    if (m_max < 2) throw std::domain_error("enumerate_M: m_max must be >= 2");
    std::vector<u64> out;
    for (u64 m = 2; m <= m_max; ++m)
        if (is_squarefree(m) && membership_in_M(m)) out.push_back(m);
    return out;
}

}  // namespace powerap
