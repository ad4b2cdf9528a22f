#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace powerap {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct NotPowerful : std::domain_error {
    using std::domain_error::domain_error;
};

// Unique representation value = l^2 * m^3 with m squarefree.
struct PowerfulDecomposition {
    u64 value;
    u64 l;
    u64 m;
};

// Floor square root, exact for the full u64 range. Pure integer Newton
// iteration; no floating point anywhere on the correctness path.
u64 isqrt(u64 n);

// Floor square root for arbitrary-precision inputs.
mpz_class isqrt(const mpz_class& n);

bool is_square(u64 n);
bool is_square(const mpz_class& n);

// True iff no prime p has p^2 | m. Trial division; m >= 1.
bool is_squarefree(u64 m);

// True iff every prime divisor of n appears with exponent >= 2 (1 is powerful).
bool is_powerful(u64 n);

// The unique (l, m) with n = l^2 m^3, m squarefree. Throws NotPowerful.
PowerfulDecomposition decompose_powerful(u64 n);

// Read-only squarefree table for [0, n]; built once, shared freely after.
class SquarefreeSieve {
  public:
    explicit SquarefreeSieve(u64 n);
    bool operator()(u64 m) const { return table_[m]; }
    u64 limit() const { return table_.size() - 1; }

  private:
    std::vector<bool> table_;
};

}  // namespace powerap
