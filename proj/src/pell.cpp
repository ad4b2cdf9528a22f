#include "powerap/pell.hpp"

namespace powerap {

FundamentalSolution fundamental_solution(u64 D) {
    if (D < 2) throw std::domain_error("fundamental_solution: D must be >= 2");
    u64 a0 = isqrt(D);
    if (a0 * a0 == D) throw DIsSquare("fundamental_solution: D is a perfect square");

    // Standard integer triple iteration for the CF of sqrt(D); the partial
    // quotients stay below 2*sqrt(D) while the convergents grow without bound.
    u64 m = 0, d = 1, a = a0;
    mpz_class p_prev = 1, p = a0;
    mpz_class q_prev = 0, q = 1;
    while (true) {
        m = d * a - m;
        d = (D - m * m) / d;
        a = (a0 + m) / d;
        mpz_class p_next = mpz_class(a) * p + p_prev;
        mpz_class q_next = mpz_class(a) * q + q_prev;
        p_prev = p;
        p = p_next;
        q_prev = q;
        q = q_next;
        if (d == 1) break;  // period ends where the denominator returns to 1
    }
    // p_prev/q_prev is the convergent at the period end: p^2 - D q^2 = (-1)^len.
    mpz_class u = p_prev, v = q_prev;
    mpz_class norm = u * u - mpz_class(D) * v * v;
    if (norm == -1) {
        // Odd period: square to reach the +1 solution.
        mpz_class u2 = u * u + mpz_class(D) * v * v;
        v = 2 * u * v;
        u = u2;
        norm = 1;
    }
    if (norm != 1) throw InternalConsistency("fundamental_solution: CF convergent has wrong norm");
    return {D, u, v};
}

std::optional<PellSolution> solve_rhs2(u64 D, u64 y_bound) {
    if (D < 2) throw std::domain_error("solve_rhs2: D must be >= 2");
    u64 r = isqrt(D);
    if (r * r == D) throw DIsSquare("solve_rhs2: D is a perfect square");
    mpz_class Dz = D;
    for (u64 y = 1; y <= y_bound; ++y) {
        mpz_class t = Dz * y * y + 2;
        if (is_square(t)) return PellSolution{D, 2, isqrt(t), mpz_class(y), 0};
    }
    return std::nullopt;
}

RecurrenceSpec build_recurrence_343() {
    // (8 + 3 sqrt(7))^7 = U + V sqrt(7), by repeated multiplication.
    mpz_class U = 1, V = 0;
    for (int i = 0; i < 7; ++i) {
        mpz_class u2 = 8 * U + 21 * V;
        mpz_class v2 = 3 * U + 8 * V;
        U = u2;
        V = v2;
    }
    if (V % 7 != 0) throw InternalConsistency("build_recurrence_343: 7 does not divide V");

    // Step on (x, y) with x + 7y*sqrt(7): x' = U x + 49 V y, y' = (V/7) x + U y.
    mpz_class a = U, b = 49 * V, c = V / 7, d = U;
    const u64 lit_a = 130576328, lit_b = 2418307437, lit_c = 7050459, lit_d = 130576328;
    if (a != lit_a || b != lit_b || c != lit_c || d != lit_d)
        throw InternalConsistency("build_recurrence_343: matrix disagrees with stored literals");
    if (a * d - b * c != 1)
        throw InternalConsistency("build_recurrence_343: step determinant is not 1");

    mpz_class x0 = 11427, y0 = 617;
    mpz_class x1 = a * x0 + b * y0;
    mpz_class y1 = c * x0 + d * y0;
    if (x1 != mpz_class("2984191388685") || y1 != mpz_class("161131189369"))
        throw InternalConsistency("build_recurrence_343: (x1, y1) disagrees with stored literals");
    if (x0 * x0 - 343 * y0 * y0 != 2 || x1 * x1 - 343 * y1 * y1 != 2)
        throw InternalConsistency("build_recurrence_343: seed fails the Pell identity");

    RecurrenceSpec spec;
    spec.a = lit_a;
    spec.b = lit_b;
    spec.c = lit_c;
    spec.d = lit_d;
    spec.lin_coeff = lit_a + lit_d;
    spec.x0 = x0;
    spec.y0 = y0;
    spec.x1 = x1;
    spec.y1 = y1;
    spec.A = lit_a;
    return spec;
}

OrbitStream::OrbitStream(const RecurrenceSpec& spec)
    : spec_(spec), x_(spec.x0), y_(spec.y0) {}

PellSolution OrbitStream::next() {
    if (x_ * x_ - 343 * y_ * y_ != 2)
        throw VerificationFailed("orbit: emitted pair fails x^2 - 343 y^2 = 2");
    if (x_ % 7 != 3)
        throw VerificationFailed("orbit: x_k != 3 (mod 7)");
    PellSolution out{343, 2, x_, y_, k_};
    mpz_class nx = spec_.a * x_ + spec_.b * y_;
    mpz_class ny = spec_.c * x_ + spec_.d * y_;
    x_ = nx;
    y_ = ny;
    ++k_;
    return out;
}

std::vector<PellSolution> orbit(const RecurrenceSpec& spec, u64 count) {
    if (count == 0) throw std::domain_error("orbit: count must be >= 1");
    OrbitStream stream(spec);
    std::vector<PellSolution> out;
    out.reserve(count);
    for (u64 i = 0; i < count; ++i) out.push_back(stream.next());
    return out;
}

bool mod7_filter_check(u64 count) {
    if (count == 0) return false;
    RecurrenceSpec spec = build_recurrence_343();
    OrbitStream filtered(spec);

    mpz_class x = 3, y = 1;
    for (u64 j = 0; j < count; ++j) {
        if (x * x - 7 * y * y != 2) return false;
        bool div7 = (y % 7 == 0);
        if (div7 != (j % 7 == 3)) return false;
        if (div7) {
            PellSolution s = filtered.next();
            if (s.x != x || s.y * 7 != y) return false;
        }
        mpz_class nx = 8 * x + 21 * y;
        mpz_class ny = 3 * x + 8 * y;
        x = nx;
        y = ny;
    }
    return true;
}

bool membership_in_M(u64 m) {
    if (m < 2) throw std::domain_error("membership_in_M: m must be >= 2");
    if (!is_squarefree(m)) throw NotSquarefree("membership_in_M: m is not squarefree");
    if (m > 2642245) throw std::overflow_error("membership_in_M: m^3 exceeds 64 bits");
    u64 m3 = m * m * m;
    FundamentalSolution f = fundamental_solution(m3);
    return f.u0 % m3 == 1;
}

u64 min_threshold_m() {
    mpz_class bound = mpz_class(2) * kLinRecurrenceL;
    bound *= bound;  // (2 L(R))^2
    mpz_class m;
    mpz_root(m.get_mpz_t(), bound.get_mpz_t(), 3);  // floor cube root
    while (m * m * m <= bound) ++m;
    return m.get_ui();
}

}  // namespace powerap
