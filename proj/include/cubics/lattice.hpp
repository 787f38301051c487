#pragma once

// Integral lattices: a free Z-module of finite rank with a symmetric integer
// Gram matrix. Discriminants are determinants reported with sign; the
// discriminant group is read off the Smith normal form.

#include <string>
#include <vector>

#include "cubics/intmat.hpp"

namespace cubics {

using LatticeVector = std::vector<Int>;

// Sign convention for the stored pairing. The weight-2 (Mukai) convention is
// the negative of the Euler pairing; selecting it negates the Gram matrix on
// construction.
enum class PairingConvention { euler, weight2 };

struct IntegralLattice {
    IntMat gram;

    IntegralLattice() = default;
    explicit IntegralLattice(IntMat g, PairingConvention conv = PairingConvention::euler)
        : gram(std::move(g)) {
        if (gram.rows != gram.cols) throw std::invalid_argument("IntegralLattice: gram not square");
        if (!gram.is_symmetric()) throw std::invalid_argument("IntegralLattice: gram not symmetric");
        if (conv == PairingConvention::weight2)
            for (Int& v : gram.a) v = -v;
    }

    long rank() const { return gram.rows; }
};

inline Int pairing(const IntegralLattice& L, const LatticeVector& u, const LatticeVector& v) {
    if (static_cast<long>(u.size()) != L.rank() || static_cast<long>(v.size()) != L.rank())
        throw std::invalid_argument("pairing: vector length does not match rank");
    Int s = 0;
    for (long i = 0; i < L.rank(); ++i)
        for (long j = 0; j < L.rank(); ++j) s += u[i] * L.gram.at(i, j) * v[j];
    return s;
}

inline Int gram_det(const IntegralLattice& L) { return det(L.gram); }

struct DiscriminantGroup {
    std::vector<Int> divisors;  // nondecreasing, each divides the next, all >= 2

    Int order() const {
        Int o = 1;
        for (const Int& d : divisors) o *= d;
        return o;
    }

    std::string name() const {
        if (divisors.empty()) return "trivial";
        std::string s;
        for (size_t i = 0; i < divisors.size(); ++i) {
            if (i) s += " x ";
            s += "Z/" + divisors[i].get_str();
        }
        return s;
    }

    friend bool operator==(const DiscriminantGroup&, const DiscriminantGroup&) = default;
};

inline DiscriminantGroup discriminant_group(const IntegralLattice& L) {
    if (gram_det(L) == 0) throw std::domain_error("discriminant_group: degenerate lattice");
    SmithResult snf = smith_normal_form(L.gram);
    DiscriminantGroup g;
    for (const Int& d : snf.diag)
        if (d > 1) g.divisors.push_back(d);
    return g;
}

// Unimodular integer matrices invert over Z (adjugate times det, det = +-1).
inline IntMat unimodular_inverse(const IntMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("unimodular_inverse: not square");
    long n = m.rows;
    Int d = det(m);
    if (d != 1 && d != -1) throw std::invalid_argument("unimodular_inverse: determinant not +-1");
    IntMat inv(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            IntMat minor(n - 1, n - 1);
            for (long r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (long c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc++) = m.at(r, c);
                }
                ++rr;
            }
            Int cof = det(std::move(minor));
            inv.at(i, j) = ((i + j) % 2 == 0) ? cof : Int(-cof);
        }
    if (d < 0)
        for (Int& e : inv.a) e = -e;
    return inv;
}

struct OrthogonalComplement {
    IntMat basis;  // columns are ambient coordinates of the complement basis
    IntegralLattice lattice;
};

// Saturated sublattice { u : <u, v> = 0 }, with its induced Gram matrix.
// The kernel is computed integrally from the Smith normal form of the row
// vector gram * v, so the basis spans the full saturation.
inline OrthogonalComplement orthogonal_complement(const IntegralLattice& L, const LatticeVector& v) {
    long r = L.rank();
    if (static_cast<long>(v.size()) != r)
        throw std::invalid_argument("orthogonal_complement: vector length does not match rank");
    bool zero = true;
    for (const Int& c : v)
        if (c != 0) zero = false;
    if (zero) throw std::invalid_argument("orthogonal_complement: v = 0");

    std::vector<Int> w = mul_vec(L.gram, v);
    IntMat row(1, r);
    for (long j = 0; j < r; ++j) row.at(0, j) = w[j];
    bool w_zero = true;
    for (const Int& c : w)
        if (c != 0) w_zero = false;

    IntMat basis;
    if (w_zero) {
        basis = IntMat::identity(r);  // v pairs to zero with everything
    } else {
        SmithResult snf = smith_normal_form(row);
        basis = IntMat(r, r - 1);
        for (long i = 0; i < r; ++i)
            for (long j = 1; j < r; ++j) basis.at(i, j - 1) = snf.V.at(i, j);
    }
    IntMat g = mul(transpose(basis), mul(L.gram, basis));
    return {std::move(basis), IntegralLattice(std::move(g))};
}

struct SublatticeInfo {
    IntMat span_gram;
    Int span_disc;
    Int index;  // of the span inside its saturation
    IntMat saturation_gram;
    Int saturation_disc;
    bool index_relation_ok;  // span_disc == index^2 * saturation_disc
};

inline SublatticeInfo sublattice_disc(const IntegralLattice& L, const std::vector<LatticeVector>& vectors) {
    long r = L.rank();
    long k = static_cast<long>(vectors.size());
    if (k == 0) throw std::invalid_argument("sublattice_disc: no vectors");
    IntMat B(r, k);
    for (long j = 0; j < k; ++j) {
        if (static_cast<long>(vectors[j].size()) != r)
            throw std::invalid_argument("sublattice_disc: vector length does not match rank");
        for (long i = 0; i < r; ++i) B.at(i, j) = vectors[j][i];
    }

    SmithResult snf = smith_normal_form(B);
    Int index = 1;
    for (const Int& d : snf.diag) {
        if (d == 0) throw std::invalid_argument("sublattice_disc: vectors are dependent");
        index *= d;
    }

    SublatticeInfo out;
    out.span_gram = mul(transpose(B), mul(L.gram, B));
    out.span_disc = det(out.span_gram);
    out.index = index;

    // U * B * V = diag(d_i)  =>  B * V = U^{-1} * diag, so the first k
    // columns of U^{-1} span the saturation.
    IntMat uinv = unimodular_inverse(snf.U);
    IntMat S(r, k);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < k; ++j) S.at(i, j) = uinv.at(i, j);
    out.saturation_gram = mul(transpose(S), mul(L.gram, S));
    out.saturation_disc = det(out.saturation_gram);
    out.index_relation_ok = (out.span_disc == out.index * out.index * out.saturation_disc);
    return out;
}

// +1 positive definite, -1 negative definite, 0 otherwise (Sylvester).
inline int definiteness(const IntegralLattice& L) {
    long n = L.rank();
    if (n == 0) return 0;
    bool pos = true, neg = true;
    for (long k = 1; k <= n; ++k) {
        IntMat lead(k, k);
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < k; ++j) lead.at(i, j) = L.gram.at(i, j);
        Int d = det(std::move(lead));
        if (d <= 0) pos = false;
        if ((k % 2 == 1 && d >= 0) || (k % 2 == 0 && d <= 0)) neg = false;
    }
    return pos ? 1 : (neg ? -1 : 0);
}

struct IsotropicSearch {
    enum class Outcome { found, none_within_bound, definite };
    Outcome outcome;
    LatticeVector w;  // valid when found

    bool found() const { return outcome == Outcome::found; }
};

// Exhaustive search for w with <w, w> = 0 and <w, v> = 1, coefficients in
// [-bound, bound], lexicographic order. Definite lattices have no nonzero
// isotropic vector at all, which is reported as a certificate.
inline IsotropicSearch find_isotropic_partner(const IntegralLattice& L, const LatticeVector& v,
                                              long bound = 50) {
    if (static_cast<long>(v.size()) != L.rank())
        throw std::invalid_argument("find_isotropic_partner: vector length does not match rank");
    if (definiteness(L) != 0) return {IsotropicSearch::Outcome::definite, {}};

    long r = L.rank();
    std::vector<Int> gv = mul_vec(L.gram, v);
    LatticeVector w(r, Int(0));
    for (long i = 0; i < r; ++i) w[i] = -bound;
    for (;;) {
        Int ww = pairing(L, w, w);
        if (ww == 0) {
            Int wv = 0;
            for (long i = 0; i < r; ++i) wv += w[i] * gv[i];
            if (wv == 1) return {IsotropicSearch::Outcome::found, w};
        }
        long i = r - 1;
        while (i >= 0 && w[i] == bound) w[i--] = -bound;
        if (i < 0) break;
        w[i] += 1;
    }
    return {IsotropicSearch::Outcome::none_within_bound, {}};
}

}  // namespace cubics
