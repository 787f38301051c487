#pragma once

// Vector bundles (and virtual differences) on Gr(2,6) x P^5, carried by
// their Chern characters. Duals, tensors, Sym^k and Lambda^k are computed
// through Adams operations; total Chern classes and Todd classes are
// recovered from the power sums by Newton's identities and the universal
// log-Todd series. Everything is exact.

#include <vector>

#include "cubics/schubert.hpp"

namespace cubics {

struct Bundle {
    AmbientClass ch;  // degree-0 part is the (virtual) rank

    Rat rank() const { return ch.coeff(0, 0); }

    friend Bundle operator+(const Bundle& a, const Bundle& b) { return {a.ch + b.ch}; }
    friend Bundle operator-(const Bundle& a, const Bundle& b) { return {a.ch - b.ch}; }
    friend bool operator==(const Bundle&, const Bundle&) = default;
};

inline Bundle trivial_bundle(long r) {
    return {AmbientClass::one() * Rat(r)};
}

inline Bundle line_bundle(const AmbientClass& c1) {
    return {exp_nilpotent(c1)};
}

inline Bundle dual(const Bundle& e) {
    Bundle out;
    for (int k = 0; k <= kAmbientDim; ++k) {
        AmbientClass piece = e.ch.graded_piece(k);
        out.ch += (k % 2 == 0) ? piece : -piece;
    }
    return out;
}

inline Bundle tensor(const Bundle& a, const Bundle& b) {
    return {a.ch * b.ch};
}

// Adams operation: scales the degree-j part of ch by k^j.
inline Bundle adams(const Bundle& e, long k) {
    Bundle out;
    Rat kj = 1;
    for (int j = 0; j <= kAmbientDim; ++j) {
        out.ch += e.ch.graded_piece(j) * kj;
        kj *= k;
    }
    return out;
}

// Lambda^k via the Newton-style recurrence
// k * lambda^k = sum_{i=1}^{k} (-1)^{i-1} psi^i . lambda^{k-i}.
inline Bundle lambda_power(const Bundle& e, int k) {
    std::vector<AmbientClass> lam(k + 1);
    lam[0] = AmbientClass::one();
    for (int j = 1; j <= k; ++j) {
        AmbientClass s;
        Rat sign = 1;
        for (int i = 1; i <= j; ++i) {
            s += (adams(e, i).ch * lam[j - i]) * sign;
            sign = -sign;
        }
        lam[j] = s * Rat(1, j);
    }
    return {lam[k]};
}

// Sym^k via k * sym^k = sum_{i=1}^{k} psi^i . sym^{k-i}.
inline Bundle sym_power(const Bundle& e, int k) {
    std::vector<AmbientClass> sym(k + 1);
    sym[0] = AmbientClass::one();
    for (int j = 1; j <= k; ++j) {
        AmbientClass s;
        for (int i = 1; i <= j; ++i) s += adams(e, i).ch * sym[j - i];
        sym[j] = s * Rat(1, j);
    }
    return {sym[k]};
}

// Power sums of the Chern roots: p_k = k! * ch_k.
inline std::vector<AmbientClass> power_sums(const Bundle& e) {
    std::vector<AmbientClass> p(kAmbientDim + 1);
    Rat kfact = 1;
    for (int k = 1; k <= kAmbientDim; ++k) {
        kfact *= k;
        p[k] = e.ch.graded_piece(k) * kfact;
    }
    return p;
}

// Total Chern class by Newton's identities,
// k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i. For a virtual bundle this
// yields c(E)/c(F).
inline AmbientClass total_chern(const Bundle& e) {
    std::vector<AmbientClass> p = power_sums(e);
    std::vector<AmbientClass> ek(kAmbientDim + 1);
    ek[0] = AmbientClass::one();
    AmbientClass total = ek[0];
    for (int k = 1; k <= kAmbientDim; ++k) {
        AmbientClass s;
        Rat sign = 1;
        for (int i = 1; i <= k; ++i) {
            s += (ek[k - i] * p[i]) * sign;
            sign = -sign;
        }
        ek[k] = s * Rat(1, k);
        total += ek[k];
    }
    return total;
}

// Chern character from a total Chern class and a rank, the inverse Newton
// direction: p_k = (-1)^{k-1} k e_k + sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i}.
inline Bundle bundle_from_chern(const AmbientClass& total, const Rat& rank) {
    std::vector<AmbientClass> ek(kAmbientDim + 1);
    for (int k = 0; k <= kAmbientDim; ++k) ek[k] = total.graded_piece(k);
    if (ek[0] != AmbientClass::one())
        throw std::invalid_argument("bundle_from_chern: total Chern class must start with 1");
    std::vector<AmbientClass> p(kAmbientDim + 1);
    Bundle out{AmbientClass::one() * rank};
    Rat kfact = 1;
    for (int k = 1; k <= kAmbientDim; ++k) {
        AmbientClass s = ek[k] * Rat((k % 2 == 1) ? k : -k);
        Rat sign = 1;
        for (int i = 1; i < k; ++i) {
            s += (ek[i] * p[k - i]) * sign;
            sign = -sign;
        }
        p[k] = s;
        kfact *= k;
        out.ch += p[k] * (1 / kfact);
    }
    return out;
}

// Todd class: exp( sum_k b_k p_k ) with b the log of the universal Todd
// series; multiplicative on virtual bundles.
inline AmbientClass todd(const Bundle& e) {
    const RatSeries& b = log_todd_series();
    std::vector<AmbientClass> p = power_sums(e);
    AmbientClass arg;
    for (int k = 1; k <= kAmbientDim; ++k)
        if (b[k] != 0) arg += p[k] * b[k];
    return exp_nilpotent(arg);
}

struct ChernData {
    AmbientClass total_chern;
    AmbientClass ch;
    AmbientClass todd_class;
};

inline ChernData chern_and_ch(const Bundle& e) {
    return {total_chern(e), e.ch, todd(e)};
}

// --- Tautological bundles -------------------------------------------------

// Quotient bundle Q of rank 4: c(Q) = 1 + sigma_1 + sigma_2 + sigma_3 + sigma_4.
inline const Bundle& taut_quotient() {
    static const Bundle q = [] {
        AmbientClass c = AmbientClass::one();
        for (int p = 1; p <= 4; ++p) c += AmbientClass::sigma(p, 0);
        return bundle_from_chern(c, 4);
    }();
    return q;
}

// Subbundle P of rank 2, from 0 -> P -> O (x) V -> Q -> 0.
inline const Bundle& taut_sub() {
    static const Bundle p = trivial_bundle(6) - taut_quotient();
    return p;
}

}  // namespace cubics
