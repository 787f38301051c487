#pragma once

// Picard-lattice model of Hilb^n of a polarized K3 surface of degree 2d.
// In the basis (H~, B) the Beauville-Bogomolov-Fujiki form is
// [[2d, 0], [0, -2(n-1)]]; the movable cone is computed by the standard
// three-way case split on the Pell equations attached to (n, d), and the
// effective-divisor obstruction pairs a zero-pullback class against the
// cone walls.

#include <optional>
#include <string>

#include "cubics/numeric.hpp"
#include "cubics/pell.hpp"

namespace cubics {

struct HilbContext {
    long n;  // number of points, n >= 2
    Int d;   // half-degree of the K3, q(H~, H~) = 2d

    HilbContext(long n_, Int d_) : n(n_), d(std::move(d_)) {
        if (n < 2) throw std::invalid_argument("HilbContext: n must be at least 2");
        if (d < 1) throw std::invalid_argument("HilbContext: d must be positive");
    }
};

struct HilbPicClass {
    Int x;  // H~ coefficient
    Int y;  // B coefficient

    friend bool operator==(const HilbPicClass&, const HilbPicClass&) = default;
};

inline Int bbf_pairing(const HilbContext& ctx, const HilbPicClass& u, const HilbPicClass& v) {
    return 2 * ctx.d * u.x * v.x - 2 * (ctx.n - 1) * u.y * v.y;
}

struct MovableConeResult {
    enum class Case { a, b, c };
    Case cone_case;

    // Diagnostics of the case split.
    Int dn;                    // d(n-1)
    bool dn_is_square;
    PellLikeSolution case_b;   // solvability of (n-1)X^2 - dY^2 = 1
    std::optional<PellSolution> pell;  // minimal solution of X^2 - d(n-1)Y^2 = 1

    // Walls, case c only: H~ and X*H~ - d*Y*B. Cases a and b are
    // classification-only; no wall formula is attached to them.
    std::optional<HilbPicClass> wall1, wall2;
    std::optional<Int> congruence_mod_nminus1;  // class of X, recorded not filtered
    std::string note;

    char case_name() const {
        switch (cone_case) {
            case Case::a: return 'a';
            case Case::b: return 'b';
            case Case::c: return 'c';
        }
        return '?';
    }
};

inline MovableConeResult movable_cone(const HilbContext& ctx) {
    MovableConeResult r;
    r.dn = ctx.d * (ctx.n - 1);
    r.dn_is_square = is_square(r.dn);
    if (r.dn_is_square) {
        r.cone_case = MovableConeResult::Case::a;
        r.note = "d(n-1) is a perfect square; wall data instance-unsupported";
        return r;
    }
    r.case_b = pell_like_solve(ctx.n - 1, ctx.d, 1);
    if (r.case_b.undecided())
        throw internal_error("movable_cone: case (b) equation undecided for n = " +
                             std::to_string(ctx.n) + ", d = " + ctx.d.get_str());
    if (r.case_b.solved()) {
        r.cone_case = MovableConeResult::Case::b;
        r.note = "(n-1)X^2 - dY^2 = 1 is solvable; wall data instance-unsupported";
        return r;
    }
    r.cone_case = MovableConeResult::Case::c;
    r.pell = pell_fundamental(r.dn);
    r.wall1 = HilbPicClass{1, 0};
    r.wall2 = HilbPicClass{r.pell->x, -ctx.d * r.pell->y};
    r.congruence_mod_nminus1 = mod_floor(r.pell->x, ctx.n - 1);
    r.note = "congruence class of X mod (n-1) recorded as a diagnostic only";
    if (bbf_pairing(ctx, *r.wall2, *r.wall2) != 2 * ctx.d)
        throw internal_error("movable_cone: wall fails q(W, W) = 2d re-check");
    return r;
}

// Pairs the (primitive) class with zero pullback against both walls of the
// movable cone. pullback_H and pullback_B are the h-coefficients of the
// pullbacks of H~ and B; the kernel of the pullback is spanned by
// K = pullback_B * H~ - pullback_H * B.
struct AvoidanceReport {
    HilbPicClass K;
    Int pair_wall1, pair_wall2;  // q(K, wall1), q(K, wall2)
    bool plus_ok, minus_ok;      // does +K resp. -K pair >= 0 with both walls
    bool contradiction;          // no multiple of K pairs >= 0 with both walls
};

inline AvoidanceReport effective_avoidance(const HilbContext& ctx, const Int& pullback_H,
                                           const Int& pullback_B) {
    if (pullback_H == 0 && pullback_B == 0)
        throw std::invalid_argument("effective_avoidance: pullback coefficients are both zero");
    MovableConeResult cone = movable_cone(ctx);
    if (cone.cone_case != MovableConeResult::Case::c)
        throw std::domain_error("effective_avoidance: movable-cone walls unavailable outside case (c)");

    AvoidanceReport rep;
    rep.K = HilbPicClass{pullback_B, -pullback_H};
    rep.pair_wall1 = bbf_pairing(ctx, rep.K, *cone.wall1);
    rep.pair_wall2 = bbf_pairing(ctx, rep.K, *cone.wall2);
    rep.plus_ok = rep.pair_wall1 >= 0 && rep.pair_wall2 >= 0;
    rep.minus_ok = rep.pair_wall1 <= 0 && rep.pair_wall2 <= 0;
    rep.contradiction = !rep.plus_ok && !rep.minus_ok;
    return rep;
}

}  // namespace cubics
