#include "powerap/arith.hpp"

#include <bit>

namespace powerap {

u64 isqrt(u64 n) {
    if (n < 2) return n;
    // Seed from the bit length: 2^ceil(b/2) >= sqrt(n), so Newton descends.
    int shift = (std::bit_width(n) + 1) / 2;
    u64 x = u64{1} << shift;
    u64 prev = 0;
    while (true) {
        u64 next = (x + n / x) / 2;
        if (next >= x) break;
        prev = x;
        x = next;
    }
    (void)prev;
    // Newton can land one too high.
    while (x > 0 && x > n / x) --x;
    return x;
}

mpz_class isqrt(const mpz_class& n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(u64 n) {
    u64 r = isqrt(n);
    return r * r == n;
}

bool is_square(const mpz_class& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_squarefree(u64 m) {
    if (m == 0) throw std::domain_error("is_squarefree: m must be >= 1");
    if (m % 4 == 0) return false;
    for (u64 p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    return true;
}

bool is_powerful(u64 n) {
    if (n == 0) throw std::domain_error("is_powerful: n must be >= 1");
    // Strip primes up to the cube root; any prime left in the remainder has
    // exponent at most 2, so the remainder is powerful iff it is 1 or a square.
    for (u64 p = 2; p * p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e == 1) return false;
    }
    return n == 1 || is_square(n);
}

PowerfulDecomposition decompose_powerful(u64 n) {
    if (n == 0) throw std::domain_error("decompose_powerful: n must be >= 1");
    u64 rest = n;
    u64 l = 1, m = 1;
    for (u64 p = 2; p * p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e == 1) throw NotPowerful("not powerful: prime with exponent 1");
        // p^e = p^(2q) or p^(3 + 2q); odd exponents route one p^3 into m.
        if (e % 2 == 1) {
            m *= p;
            e -= 3;
        }
        for (; e > 0; e -= 2) l *= p;
    }
    if (rest > 1) {
        u64 r = isqrt(rest);
        if (r * r != rest) throw NotPowerful("not powerful: residual prime");
        l *= r;
    }
    return {n, l, m};
}

SquarefreeSieve::SquarefreeSieve(u64 n) : table_(n + 1, true) {
    table_[0] = false;
    for (u64 p = 2; p * p <= n; ++p) {
        for (u64 q = p * p; q <= n; q += p * p) table_[q] = false;
    }
}

}  // namespace powerap
