#include "powerap/powerful.hpp"

#include <algorithm>

namespace powerap {

namespace {

u64 icbrt(u64 n) {
    u64 r = 0;
    for (int b = 21; b >= 0; --b) {
        u64 t = r | (u64(1) << b);
        if (u128(t) * t * t <= n) r = t;
    }
    return r;
}

// Largest l with l^2 m^3 <= top, or 0 if none.
u64 l_max_for(u64 m3, u64 top) { return isqrt(top / m3); }

// Smallest l with l^2 m^3 >= bottom (bottom >= 1).
u64 l_min_for(u64 m3, u64 bottom) {
    u64 c = (bottom + m3 - 1) / m3;  // ceil(bottom / m3)
    return isqrt(c - 1) + 1;
}

void emit_range(u64 m3, u64 lo, u64 hi, std::vector<u64>& out) {
    u64 lmin = lo == 0 ? 1 : l_min_for(m3, lo);
    if (lmin == 0) lmin = 1;
    u64 lmax = l_max_for(m3, hi - 1);
    for (u64 l = lmin; l <= lmax; ++l) out.push_back(l * l * m3);
}

}  // namespace

u64 min_segment_size(u64 hi) { return 4 * isqrt(hi) + 8; }

std::vector<u64> powerful_in_range(u64 lo, u64 hi) {
    if (lo >= hi) throw std::domain_error("powerful_in_range: lo must be < hi");
    std::vector<u64> out;
    u64 mcap = icbrt(hi - 1);
    SquarefreeSieve sieve(std::max<u64>(mcap, 1));
    for (u64 m = 1; m <= mcap; ++m) {
        if (!sieve(m)) continue;
        emit_range(m * m * m, lo, hi, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PowerfulStream::PowerfulStream(PowerfulStreamConfig cfg) : cfg_(cfg) {
    if (cfg_.lo >= cfg_.hi) throw std::invalid_argument("PowerfulStream: lo must be < hi");
    if (cfg_.segment_size < min_segment_size(cfg_.hi))
        throw std::invalid_argument("PowerfulStream: segment_size below 4*isqrt(hi) + 8");
    u64 mcap = icbrt(cfg_.hi - 1);
    sieve_ = std::make_shared<SquarefreeSieve>(std::max<u64>(mcap, 1));
    squarefree_m_.reserve(mcap);
    for (u64 m = 1; m <= mcap; ++m)
        if ((*sieve_)(m)) squarefree_m_.push_back(m);
}

u64 PowerfulStream::segment_count() const {
    u64 span = cfg_.hi - cfg_.lo;
    return (span + cfg_.segment_size - 1) / cfg_.segment_size;
}

u64 PowerfulStream::segment_start(u64 index) const {
    u64 off = index * cfg_.segment_size;
    return off > cfg_.hi - cfg_.lo ? cfg_.hi : cfg_.lo + off;
}

std::vector<u64> PowerfulStream::segment(u64 index) const {
    u64 s = segment_start(index);
    u64 e = std::min(cfg_.hi, s + cfg_.segment_size);
    std::vector<u64> out;
    for (u64 m : squarefree_m_) {
        u64 m3 = m * m * m;
        if (m3 >= e) break;
        emit_range(m3, s, e, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 count_powerful_in_open_interval(u64 a, u64 b) {
    if (a >= b) throw std::domain_error("count_powerful_in_open_interval: need a < b");
    if (b - a <= 1) return 0;
    u64 count = 0;
    u64 mcap = icbrt(b - 1);
    for (u64 m = 1; m <= mcap; ++m) {
        if (!is_squarefree(m)) continue;
        u64 m3 = m * m * m;
        u64 lmax = l_max_for(m3, b - 1);
        u64 lmin = l_min_for(m3, a + 1);
        if (lmax >= lmin) count += lmax - lmin + 1;
    }
    return count;
}

u64 lemma3_count(u64 x) {
    if (x < 3) throw std::domain_error("lemma3_count: x must be >= 3");
    if (x > 4294967294ull) throw std::overflow_error("lemma3_count: x^2 exceeds 64 bits");
    u64 hi = x * x, lo = (x - 2) * (x - 2);
    u64 count = 0;
    u64 mcap = icbrt(hi - 1);
    for (u64 m = 1; m <= mcap; ++m) {
        if (!is_squarefree(m)) continue;
        u64 m3 = m * m * m;
        // At most one admissible l per m: the candidate is the largest l with
        // l^2 m^3 < x^2, which lands in the interval iff it clears (x-2)^2.
        u64 lmax = l_max_for(m3, hi - 1);
        if (lmax >= 1 && lmax * lmax * m3 > lo) ++count;
    }
    return count;
}

namespace {

CertificateResult::XsqMinus1 xsq_minus1_report(const mpz_class& x) {
    mpz_class t = x * x - 1;
    if (mpz_fits_ulong_p(t.get_mpz_t()) && t.get_ui() <= u64(1) << 62)
        return is_powerful(t.get_ui()) ? CertificateResult::XsqMinus1::powerful
                                       : CertificateResult::XsqMinus1::not_powerful;
    // Too large to factor: look for a prime dividing x^2 - 1 exactly once.
    for (u64 p = 2; p <= 100000; ++p) {
        bool prime = true;
        for (u64 q = 2; q * q <= p; ++q)
            if (p % q == 0) { prime = false; break; }
        if (!prime) continue;
        u64 p2 = p * p;
        u64 xr = mpz_fdiv_ui(x.get_mpz_t(), p2);
        u64 v = (u64)((u128(xr) * xr + p2 - 1) % p2);
        if (v % p == 0 && v != 0) return CertificateResult::XsqMinus1::not_powerful;
    }
    return CertificateResult::XsqMinus1::unknown;
}

}  // namespace

CertificateResult consecutiveness_certificate(const mpz_class& x) {
    if (x < 3) throw std::domain_error("consecutiveness_certificate: x must be >= 3");
    mpz_class t = x * x - 2;
    if (t % 343 != 0 || !is_square(mpz_class(t / 343)))
        throw NotOrbitMember("consecutiveness_certificate: x^2 - 2 is not 343 * square");

    mpz_class hi = x * x;          // exclusive top, via <= hi - 1
    mpz_class top = hi - 1;
    mpz_class lo = (x - 2) * (x - 2);

    CertificateResult res;
    res.xsq_minus1 = xsq_minus1_report(x);

    mpz_class m3, q, r;
    for (u64 m = 2;; ++m) {
        m3 = mpz_class((unsigned long)m);
        m3 = m3 * m * m;
        if (m3 >= hi) break;
        if (m == 7) continue;
        mpz_fdiv_q(q.get_mpz_t(), top.get_mpz_t(), m3.get_mpz_t());
        mpz_sqrt(r.get_mpz_t(), q.get_mpz_t());  // largest l with l^2 m^3 <= x^2 - 1
        if (r < 1) continue;
        if (r * r * m3 > lo && is_squarefree(m)) res.violating_m.push_back(m);
    }
    res.consecutive = res.violating_m.empty();
    return res;
}

}  // namespace powerap
