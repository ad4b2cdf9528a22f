#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "powerap/arith.hpp"

namespace powerap {

struct InvalidCheckpoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ThreeSquares : std::logic_error {
    using std::logic_error::logic_error;
};
struct NotClassTwo : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotPellSolution : std::domain_error {
    using std::domain_error::domain_error;
};

// One three-term AP of powerful numbers: (N, N+d, N+2d).
struct ApTriple {
    u64 n1, n2, n3;
    u64 d;
    int square_count;  // 0, 1 or 2
    double ratio;      // d / sqrt(N), display only

    bool operator==(const ApTriple& o) const {
        return n1 == o.n1 && d == o.d;
    }
};

ApTriple make_ap_triple(u64 n, u64 d);

// Resumable search state; the carry holds the last two powerful values seen
// before next_segment_start so boundary-straddling windows survive a restart.
struct SearchCheckpoint {
    u64 limit = 0;
    u64 next_segment_start = 0;
    std::vector<u64> carry;  // 0..2 values, ascending
    std::vector<ApTriple> triples_found;
};

void save_checkpoint(const SearchCheckpoint& cp, const std::string& path);
SearchCheckpoint load_checkpoint(const std::string& path);

struct SearchOptions {
    u64 segment_size = 0;  // 0 = automatic
    unsigned threads = 1;
    std::optional<std::string> checkpoint_path;
    u64 checkpoint_every = 64;  // segments between checkpoint writes
    // Test hook: abort after this many segments (simulates interruption).
    std::optional<u64> stop_after_segments;
};

// All triples of consecutive powerful numbers in AP with third element
// <= limit, ascending by N. Deterministic for any valid segment size and
// thread count; resumable from a checkpoint with identical output.
std::vector<ApTriple> search_consecutive_ap(u64 limit, const SearchOptions& opts = {});

// Number of perfect squares among the three terms; three squares in AP is
// impossible, so that case throws.
int classify(const ApTriple& t);

// For a class-2 triple: the x >= 3 with (n1, n2, n3) = ((x-2)^2, (x-1)^2, x^2-2),
// if the triple has that shape.
std::optional<u64> verify_A2_shape(const ApTriple& t);

// Pell-built triple ((x-2)^2, (x-1)^2, x^2-2) in arbitrary precision.
struct PellApRecord {
    mpz_class x, y;
    mpz_class n1, n2, n3, d;
};

// Verifies x^2 - 343 y^2 = 2, that all three terms are powerful, in AP, and
// that d = 2x - 3 = 2*isqrt(N) + 1 exactly.
PellApRecord verify_pell_triple(const mpz_class& x, const mpz_class& y);

// Pairs (t, t') with t'.N = 2 t.N and t'.d = 2 t.d.
std::vector<std::pair<ApTriple, ApTriple>> find_doublings(const std::vector<ApTriple>& ts);

}  // namespace powerap
