#pragma once

// Pell and Pell-like equations over the integers, solved exactly.
//
// The fundamental solution of x^2 - D y^2 = 1 comes from the periodic
// continued fraction of sqrt(D): the convergents p_k/q_k satisfy
//
//     p_k^2 - D q_k^2 = (-1)^(k+1) Q_{k+1},
//
// where Q_k is the denominator state of the expansion. The Q's repeat with
// the period of the expansion and the sign alternates, so scanning two full
// periods sees every value this sequence ever attains. For a target T with
// |T| < sqrt(D) that scan is a complete decision procedure for primitive
// solutions (every primitive solution with x, y > 0 is a convergent), and
// distinct hit indices inside the window give representatives of the
// distinct solution classes.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubics/factor.hpp"
#include "cubics/numeric.hpp"

namespace cubics {

struct PellSolution {
    Int D;
    Int N;
    Int x;
    Int y;
    bool minimal = false;
};

namespace detail {

// Continued-fraction expansion state for sqrt(D), D >= 2 nonsquare.
// The first call to step() returns a_0; after the k-th call the member Q
// holds Q_k. Period end is signalled by a partial quotient equal to 2*a_0.
struct SqrtCF {
    Int D, a0;
    Int P = 0, Q = 1;

    explicit SqrtCF(Int d) : D(std::move(d)), a0(floor_sqrt(D)) {}

    Int step() {
        Int a = (a0 + P) / Q;
        P = a * Q - P;
        Q = div_exact(D - P * P, Q);
        return a;
    }
};

// All indices k in the first two periods with p_k^2 - D q_k^2 == target.
// Residue-only state; no convergents are accumulated.
inline std::vector<long> cf_scan(const Int& D, const Int& target) {
    SqrtCF cf(D);
    Int two_a0 = 2 * cf.a0;
    std::vector<long> hits;
    long period = -1;
    for (long k = 0;; ++k) {
        Int a = cf.step();
        if (period < 0 && k > 0 && a == two_a0) period = k;
        Int residue = (k % 2 == 0) ? Int(-cf.Q) : cf.Q;
        if (residue == target) hits.push_back(k);
        if (period > 0 && k >= 2 * period - 1) return hits;
    }
}

// Convergent (p_k, q_k) of sqrt(D), by replay.
inline std::pair<Int, Int> cf_convergent(const Int& D, long k) {
    SqrtCF cf(D);
    Int p_prev = 1, p = cf.step();
    Int q_prev = 0, q = 1;
    for (long i = 1; i <= k; ++i) {
        Int a = cf.step();
        Int pn = a * p + p_prev;
        Int qn = a * q + q_prev;
        p_prev = std::exchange(p, std::move(pn));
        q_prev = std::exchange(q, std::move(qn));
    }
    return {p, q};
}

}  // namespace detail

// Minimal positive solution of x^2 - D y^2 = 1.
inline PellSolution pell_fundamental(const Int& D) {
    if (D <= 0) throw std::domain_error("pell_fundamental: D must be positive");
    if (is_square(D)) throw std::domain_error("pell_fundamental: D must not be a perfect square");
    auto hits = detail::cf_scan(D, 1);
    if (hits.empty()) throw internal_error("pell_fundamental: no +1 residue within two periods");
    auto [x, y] = detail::cf_convergent(D, hits.front());
    if (x * x - D * y * y != 1 || x <= 0 || y <= 0)
        throw internal_error("pell_fundamental: convergent fails the Pell identity");
    return {D, 1, x, y, true};
}

struct PellLikeOptions {
    // Cap on the y-scan used when no continued-fraction argument applies.
    Int orbit_bound = 1000000;
    // Screening moduli larger than this are skipped.
    Int modulus_cap = 1000000;
    // Cap on unit-orbit steps when chasing a divisibility constraint; the
    // residue pair mod A cycles within the order of the unit in GL_2(Z/A).
    long orbit_steps = 256;
};

struct PellLikeSolution {
    enum class Status { solved, no_solution, undecided };
    Status status;
    Int x, y;                 // x, y >= 0 when solved
    std::string certificate;  // obstruction modulus or method note

    bool solved() const { return status == Status::solved; }
    bool no_solution() const { return status == Status::no_solution; }
    bool undecided() const { return status == Status::undecided; }
};

namespace detail {

// Does A x^2 - B y^2 ≡ N (mod m) have a solution?
inline bool solvable_mod(const Int& A, const Int& B, const Int& N, long m) {
    std::vector<char> lhs(m, 0), rhs(m, 0);
    long a = to_long(mod_floor(A, m)), b = to_long(mod_floor(B, m)), n = to_long(mod_floor(N, m));
    for (long s = 0; s < m; ++s) {
        long sq = (s * s) % m;
        lhs[(a * sq) % m] = 1;
        rhs[((b * sq) % m + n) % m] = 1;
    }
    for (long v = 0; v < m; ++v)
        if (lhs[v] && rhs[v]) return true;
    return false;
}

inline std::optional<Int> obstruction_modulus(const Int& A, const Int& B, const Int& N,
                                              const PellLikeOptions& opt) {
    Int absN = abs(N);
    std::vector<Int> moduli = {3, 4, 8};
    for (const Int& v : {A, B, absN})
        for (const auto& pp : factorize(v))
            if (pp.prime <= opt.modulus_cap) moduli.push_back(pp.prime);
    for (const Int& m : moduli) {
        if (m < 2 || m > opt.modulus_cap) continue;
        if (!solvable_mod(A, B, N, to_long(m))) return m;
    }
    return std::nullopt;
}

// Representatives (X, y) with y >= 0 of every solution class of
// X^2 - D y^2 = M, D nonsquare. Sets *complete = false when the scan had
// to be truncated at opt.orbit_bound.
inline std::vector<std::pair<Int, Int>> class_representatives(const Int& D, const Int& M,
                                                              const PellLikeOptions& opt,
                                                              bool* complete) {
    std::vector<std::pair<Int, Int>> reps;
    *complete = true;
    if (is_square(M)) reps.emplace_back(floor_sqrt(M), 0);
    if (M * M < D) {
        // Complete via convergents, one branch per square divisor of M.
        for (const Int& g : square_divisors(abs(M))) {
            Int target = div_exact(M, g * g);
            for (long k : cf_scan(D, target)) {
                auto [p, q] = cf_convergent(D, k);
                reps.emplace_back(g * p, g * q);
            }
        }
        return reps;
    }
    // |M| >= sqrt(D): scan y up to the classical per-class bound
    // y <= u * sqrt(|M| / (2(t -+ 1))) derived from the fundamental unit (t, u).
    PellSolution fund = pell_fundamental(D);
    Int denom = (M > 0) ? Int(2 * (fund.x + 1)) : Int(2 * (fund.x - 1));
    Int bound = floor_sqrt(fund.y * fund.y * abs(M) / denom) + 1;
    if (bound > opt.orbit_bound) {
        bound = opt.orbit_bound;
        *complete = false;
    }
    for (Int y = 1; y <= bound; ++y) {
        Int xx = M + D * y * y;
        if (is_square(xx)) reps.emplace_back(floor_sqrt(xx), y);
    }
    return reps;
}

}  // namespace detail

// Decides solvability of A x^2 - B y^2 = N over the integers and produces a
// solution when one exists. Insolvability certificates by modular obstruction
// (moduli 3, 4, 8 and the prime divisors of A, B, N) are attempted first;
// otherwise the equation is transformed to (Ax)^2 - AB y^2 = AN and settled
// through the continued fraction of sqrt(AB), walking each solution class
// under the fundamental unit until the divisibility constraint A | X is met.
// "undecided" is only reported when a scan hits its configured bound without
// resolution; callers treat that as a defect, never as unsolvable.
inline PellLikeSolution pell_like_solve(const Int& A, const Int& B, const Int& N,
                                        const PellLikeOptions& opt = {}) {
    using Status = PellLikeSolution::Status;
    if (A < 1 || B < 1) throw std::domain_error("pell_like_solve: A, B must be positive");
    if (N == 0) throw std::domain_error("pell_like_solve: N must be nonzero");

    if (auto m = detail::obstruction_modulus(A, B, N, opt))
        return {Status::no_solution, 0, 0, "no solution mod " + m->get_str()};

    const Int D = A * B;
    const Int M = A * N;
    std::vector<std::pair<Int, Int>> hits;  // (X, y) with X^2 - D y^2 = M, A | X
    bool complete = true;

    if (is_square(D)) {
        // (X - s y)(X + s y) = M factors over the divisors of M.
        Int s = floor_sqrt(D);
        for (const Int& d1 : divisors(abs(M))) {
            for (const Int& u : {d1, Int(-d1)}) {
                Int v = div_exact(M, u);
                if (mod_floor(u + v, 2) != 0) continue;
                Int X = div_exact(u + v, 2);
                Int sy = div_exact(v - u, 2);
                if (mod_floor(sy, s) != 0) continue;
                Int y = div_exact(sy, s);
                if (mod_floor(X, A) == 0) hits.emplace_back(abs(X), abs(y));
            }
        }
    } else {
        auto reps = detail::class_representatives(D, M, opt, &complete);
        PellSolution fund{D, 1, 1, 0};
        if (A > 1 && !reps.empty()) fund = pell_fundamental(D);
        for (const auto& [X0, y0] : reps) {
            for (const Int& X : {X0, Int(-X0)}) {
                if (mod_floor(X, A) == 0) {
                    hits.emplace_back(abs(X), y0);
                    continue;
                }
                if (A == 1) continue;
                // Walk the unit orbit of this representative, watching the
                // residue pair mod A; it cycles, so a bounded walk decides.
                Int Xj = X, yj = y0;
                std::vector<std::pair<Int, Int>> seen;
                for (long j = 0; j < opt.orbit_steps; ++j) {
                    Int Xn = fund.x * Xj + D * fund.y * yj;
                    Int yn = fund.y * Xj + fund.x * yj;
                    Xj = std::move(Xn);
                    yj = std::move(yn);
                    if (mod_floor(Xj, A) == 0) {
                        hits.emplace_back(abs(Xj), abs(yj));
                        break;
                    }
                    std::pair<Int, Int> state{mod_floor(Xj, A), mod_floor(yj, A)};
                    bool cycled = false;
                    for (const auto& st : seen)
                        if (st == state) { cycled = true; break; }
                    if (cycled) break;
                    seen.push_back(state);
                    if (j + 1 == opt.orbit_steps) complete = false;
                }
            }
        }
    }

    if (hits.empty()) {
        if (!complete) return {Status::undecided, 0, 0, "scan bound reached without resolution"};
        return {Status::no_solution, 0, 0, "complete class scan found no solution"};
    }
    auto best = hits.front();
    for (const auto& h : hits)
        if (h.second < best.second || (h.second == best.second && h.first < best.first)) best = h;
    Int x = div_exact(best.first, A);
    Int y = best.second;
    if (A * x * x - B * y * y != N) throw internal_error("pell_like_solve: candidate fails re-check");
    return {Status::solved, x, y, "continued-fraction class scan"};
}

}  // namespace cubics
