#pragma once

#include <set>
#include <vector>

#include "powerap/arith.hpp"

namespace powerap {

struct NotInM : std::domain_error {
    using std::domain_error::domain_error;
};
struct TruncationTooSmall : std::domain_error {
    using std::domain_error::domain_error;
};

// Rigorous enclosure [lo, hi]; constants are reported as intervals, never
// bare floats.
struct Bracket {
    double lo;
    double hi;
    bool contains(double v) const { return lo <= v && v <= hi; }
    double width() const { return hi - lo; }
};

// Enclosure of prod (1 - 2/m^{3/2}) over squarefree m not in `excluded`.
// Upper bound: the partial product over m <= truncation (every further factor
// is < 1). Lower bound: partial * exp(-T) where T bounds the tail via
//   sum_{m > truncation} 2 m^{-3/2} <= integral_truncation^inf 2 t^{-3/2} dt
//                                    = 4 / sqrt(truncation),
// lifted to the log of the product through log(1-u) >= -u/(1-u). Both sides
// are padded for accumulated floating-point rounding.
Bracket density_product(const std::set<u64>& excluded, u64 truncation);

// Enclosure of C_m = (1/2) prod_{squarefree j not in {1,m}} (1 - 2/j^{3/2})
//                    / log(u0 + v0 sqrt(m^3)),
// with (u0, v0) the fundamental solution of x^2 - m^3 y^2 = 1.
Bracket compute_C_m(u64 m, u64 truncation);

// log n / (2 log(A + sqrt(A^2 - 1))) with A = 130576328.
double orbit_count_asymptotic(double n);

// Fraction of x in [3, x_max] whose gaps ((x-2)^2,(x-1)^2) and ((x-1)^2,x^2)
// contain exactly 0 and 1 powerful numbers respectively.
double empirical_interval_density(u64 x_max);

// All squarefree m <= m_max with membership_in_M(m), ascending.
std::vector<u64> enumerate_M(u64 m_max);

}  // namespace powerap
