#pragma once

#include <memory>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "powerap/arith.hpp"

namespace powerap {

struct NotOrbitMember : std::domain_error {
    using std::domain_error::domain_error;
};

// Half-open enumeration range [lo, hi) cut into segments. A segment must be
// wide enough that no three consecutive powerful numbers straddle more than
// two segments; gaps below hi stay under 2*sqrt(hi) + 2.
struct PowerfulStreamConfig {
    u64 lo;
    u64 hi;
    u64 segment_size;
};

u64 min_segment_size(u64 hi);

// Exactly the powerful numbers in [lo, hi), strictly ascending.
std::vector<u64> powerful_in_range(u64 lo, u64 hi);

// Segment-at-a-time enumeration over [lo, hi). Shares one squarefree sieve
// across segments; each segment is generated independently, so segments may
// be produced by different threads as long as they are consumed in order.
class PowerfulStream {
  public:
    explicit PowerfulStream(PowerfulStreamConfig cfg);

    // Sorted powerful numbers in [segment_start(i), segment_start(i+1)).
    std::vector<u64> segment(u64 index) const;
    u64 segment_count() const;
    u64 segment_start(u64 index) const;

  private:
    PowerfulStreamConfig cfg_;
    std::shared_ptr<const SquarefreeSieve> sieve_;
    std::vector<u64> squarefree_m_;  // ascending squarefree m with m^3 < hi
};

// |{n powerful : a < n < b}|, strict on both sides.
u64 count_powerful_in_open_interval(u64 a, u64 b);

// Number of squarefree m admitting an integer l with (x-2)^2 < l^2 m^3 < x^2.
// Integer-exact; equal to count_powerful_in_open_interval((x-2)^2, x^2).
u64 lemma3_count(u64 x);

struct CertificateResult {
    bool consecutive;                // no admissible m outside {1, 7}
    std::vector<u64> violating_m;    // squarefree m outside {1, 7} with a hit
    // Side report on x^2 - 1: a powerful value here would give three
    // consecutive powerful integers. "unknown" only for x beyond exact reach.
    enum class XsqMinus1 { not_powerful, powerful, unknown } xsq_minus1;
};

// For x from the D = 343 orbit (x^2 - 2 = 343 y^2): decides whether the
// triple (x-2)^2, (x-1)^2, x^2 - 2 consists of consecutive powerful numbers.
// Throws NotOrbitMember when x^2 - 2 is not 343 times a square.
CertificateResult consecutiveness_certificate(const mpz_class& x);

}  // namespace powerap
