#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "powerap/arith.hpp"

namespace powerap {

struct DIsSquare : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotSquarefree : std::domain_error {
    using std::domain_error::domain_error;
};
struct InternalConsistency : std::logic_error {
    using std::logic_error::logic_error;
};
struct VerificationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One solution of x^2 - D y^2 = rhs, with its index in the recurrence orbit.
struct PellSolution {
    u64 D;
    int rhs;
    mpz_class x;
    mpz_class y;
    u64 k;
};

// Minimal positive solution of x^2 - D y^2 = 1.
struct FundamentalSolution {
    u64 D;
    mpz_class u0;
    mpz_class v0;
};

// Orbit step (x, y) -> (a x + b y, c x + d y) for x^2 - 343 y^2 = 2,
// together with the order-2 linear recurrence t_{k+2} = lin_coeff t_{k+1} - t_k.
struct RecurrenceSpec {
    u64 a, b, c, d;
    u64 lin_coeff;  // = a + d
    mpz_class x0, y0, x1, y1;
    u64 A;  // growth constant, = a
};

// Continued-fraction expansion of sqrt(D); period doubled when odd.
FundamentalSolution fundamental_solution(u64 D);

// Smallest (x, y) with x^2 - D y^2 = 2 and y <= y_bound, by direct scan.
// Empty means "none within bound", never "none exists".
std::optional<PellSolution> solve_rhs2(u64 D, u64 y_bound);

// The D = 343 orbit spec. Every field is recomputed from (8 + 3*sqrt(7))^7
// and cross-checked against the stored literals; mismatch throws.
RecurrenceSpec build_recurrence_343();

// Streaming generator of the D = 343 orbit; each emitted pair is verified
// against the Pell identity before being returned.
class OrbitStream {
  public:
    explicit OrbitStream(const RecurrenceSpec& spec);
    PellSolution next();
    u64 index() const { return k_; }

  private:
    RecurrenceSpec spec_;
    mpz_class x_, y_;
    u64 k_ = 0;
};

// The first `count` orbit solutions (x_k, y_k), k = 0..count-1.
std::vector<PellSolution> orbit(const RecurrenceSpec& spec, u64 count);

// Generates the first `count` solutions of x^2 - 7 y^2 = 2 from seed (3, 1)
// and step (8, 3), checks that 7 | y_j exactly when j = 3 (mod 7), and that
// the filtered subsequence matches the D = 343 orbit under y -> y/7.
bool mod7_filter_check(u64 count);

// m is in M iff x^2 - m^3 y^2 = 2 is solvable, decided by the congruence
// u0 = 1 (mod m^3) on the fundamental solution of x^2 - m^3 y^2 = 1.
bool membership_in_M(u64 m);

// Smallest m with m^3 > (2 * L(R))^2, L(R) = 261152658.
u64 min_threshold_m();

inline constexpr u64 kLinRecurrenceL = 261152658;

}  // namespace powerap
