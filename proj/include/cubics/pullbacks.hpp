#pragma once

// The intersection-theory pipeline behind the pullback constants of the
// degree-14 Pfaffian correspondence.
//
// Setup: V = C^6, X in Gr(2,V) the K3 surface cut out by six Pluecker-linear
// sections, Y in P^5 the associated cubic, Gamma in X x P^5 the incidence
// correspondence. Gamma is the rank-<=-1 degeneracy locus of the bundle map
// P (x) O  ->  Q^dual (x) O(1), of expected codimension 3, so
//
//   * its fundamental class is the Porteous determinant c_3(Q^dual(h) - P);
//   * its structure sheaf is resolved by the Eagon-Northcott complex of the
//     transposed map Q(-h) -> P^dual,
//
//       0 -> Sym^2 P (x) L^4 F (x) det P -> P (x) L^3 F (x) det P
//         -> L^2 F (x) det P -> O -> O_Gamma -> 0,   F = Q(-h).
//
// The complex is pinned structurally: degrees 0-2 of the alternating Chern
// character must vanish and degree 3 must equal the Porteous class.
//
// Pushing forward along pi: X x P^5 -> P^5 and twisting by td(O(3h))
// produces polynomials in h whose coefficients encode the rank and first
// Chern class of the direct image, hence the pullbacks of the Hilbert-scheme
// classes B and H~ to the cubic.

#include "cubics/bundles.hpp"

namespace cubics {

inline Int rat_to_int(const Rat& r) {
    if (r.get_den() != 1) throw internal_error("rat_to_int: " + rat_str(r) + " is not an integer");
    return r.get_num();
}

// Ambient representative of td(T_X): T_X = T_Gr|_X - O(sigma_1)^6|_X with
// T_Gr = P^dual (x) Q.
inline const AmbientClass& td_tangent_x() {
    static const AmbientClass td_x = [] {
        Bundle tangent_gr = tensor(dual(taut_sub()), taut_quotient());
        Bundle normal{exp_nilpotent(AmbientClass::sigma(1, 0)) * Rat(6)};
        return todd(tangent_gr - normal);
    }();
    return td_x;
}

// Fundamental class of Gamma: the Porteous class c_3(Q^dual(h) - P).
inline const AmbientClass& porteous_gamma() {
    static const AmbientClass cls = [] {
        Bundle hook = tensor(dual(taut_quotient()), line_bundle(AmbientClass::h(1))) - taut_sub();
        return total_chern(hook).graded_piece(3);
    }();
    return cls;
}

// ch(O_Gamma) on X x P^5 from the Eagon-Northcott resolution; with the flag
// set, ch(O_Gamma (x) q^* O_H) via 0 -> O_X(-H) -> O_X -> O_H -> 0, i.e.
// multiplication by 1 - ch(O(-sigma_1)).
inline AmbientClass en_ch_gamma(bool twist_by_hyperplane) {
    static const AmbientClass untwisted = [] {
        Bundle f = tensor(taut_quotient(), line_bundle(-AmbientClass::h(1)));
        Bundle det_p = lambda_power(taut_sub(), 2);
        Bundle t1 = tensor(lambda_power(f, 2), det_p);
        Bundle t2 = tensor(taut_sub(), tensor(lambda_power(f, 3), det_p));
        Bundle t3 = tensor(sym_power(taut_sub(), 2), tensor(lambda_power(f, 4), det_p));
        return AmbientClass::one() - t1.ch + t2.ch - t3.ch;
    }();
    if (!twist_by_hyperplane) return untwisted;
    static const AmbientClass twisted = [] {
        AmbientClass h_section =
            AmbientClass::one() - exp_nilpotent(-AmbientClass::sigma(1, 0));
        return untwisted * h_section;
    }();
    return twisted;
}

// pi_*(chF . td T_X) as a polynomial in h, multiplied by td(O_{P^5}(3)).
inline HPoly grr_pushforward(const AmbientClass& ch_f) {
    HPoly base = x_integrate(ch_f * td_tangent_x());
    static const HPoly td3 = [] {
        AmbientClass t = series_at(todd_series(), AmbientClass::h(1) * Rat(3));
        HPoly out;
        for (int e = 0; e < kHPowers; ++e) out[e] = t.coeff(0, e);
        return out;
    }();
    return hpoly_mul(base, td3);
}

// The constants read off the two pushforward polynomials. The direct image
// supports on the cubic Y with [Y] = 3h and i_*(h) = 3h^2, so the h and h^2
// coefficients are 3*rank and 3*c_1; j^*B = -c_1 of the untwisted sheaf and
// j^*H~ comes from the h^2 coefficient of the twisted one.
struct PullbackConstants {
    HPoly untwisted;  // i_* ch(p_* O_Gamma)
    HPoly twisted;    // i_* ch(p_* (O_Gamma (x) q^* O_H))
    Int rank;         // generic degree of Gamma over Y
    Int c1;           // c_1(p_* O_Gamma) = c1 * h
    Int jB;           // j^*B = jB * h
    Int jH;           // j^*H~ = jH * h
};

inline PullbackConstants gamma_invariants() {
    PullbackConstants out;
    out.untwisted = grr_pushforward(en_ch_gamma(false));
    out.twisted = grr_pushforward(en_ch_gamma(true));
    if (out.untwisted[0] != 0 || out.twisted[0] != 0 || out.twisted[1] != 0)
        throw internal_error("gamma_invariants: pushforward has unexpected low-order terms");
    out.rank = rat_to_int(out.untwisted[1] / 3);
    out.c1 = rat_to_int(out.untwisted[2] / 3);
    out.jB = -out.c1;
    out.jH = rat_to_int(out.twisted[2] / 3);
    return out;
}

}  // namespace cubics
