#pragma once

// The Chow ring of Gr(2,6) x P^5 with exact rational coefficients.
//
// The Grassmannian factor is spanned by the fifteen Schubert classes
// sigma_{a,b} with 4 >= a >= b >= 0; products are computed by the Pieri
// rule for the special classes together with the two-row Giambelli
// determinant sigma_{a,b} = sigma_a sigma_b - sigma_{a+1} sigma_{b-1}.
// The projective factor contributes powers of the hyperplane class h with
// h^6 = 0. A class of the product ring is a rational linear combination of
// sigma_{a,b} h^e; the grading is |(a,b)| + e.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cubics/numeric.hpp"

namespace cubics {

struct Partition2 {
    int a = 0, b = 0;  // 4 >= a >= b >= 0

    friend bool operator==(const Partition2&, const Partition2&) = default;
};

inline constexpr int kGrBasis = 15;
inline constexpr int kHPowers = 6;
inline constexpr int kAmbientDim = 13;  // dim Gr(2,6) + dim P^5

inline constexpr std::array<Partition2, kGrBasis> gr_basis{{{0, 0},
                                                            {1, 0},
                                                            {1, 1},
                                                            {2, 0},
                                                            {2, 1},
                                                            {2, 2},
                                                            {3, 0},
                                                            {3, 1},
                                                            {3, 2},
                                                            {3, 3},
                                                            {4, 0},
                                                            {4, 1},
                                                            {4, 2},
                                                            {4, 3},
                                                            {4, 4}}};

inline int gr_index(int a, int b) {
    for (int i = 0; i < kGrBasis; ++i)
        if (gr_basis[i].a == a && gr_basis[i].b == b) return i;
    throw std::invalid_argument("gr_index: (" + std::to_string(a) + "," + std::to_string(b) +
                                ") outside the 2x4 box");
}

namespace detail {

using GrVec = std::array<long, kGrBasis>;

// sigma_p * sigma_{a,b} by Pieri: all (c,d) in the box with c+d = a+b+p and
// c >= a >= d >= b.
inline GrVec pieri_basis(int p, int i) {
    GrVec out{};
    if (p < 0 || p > 4) return out;
    int a = gr_basis[i].a, b = gr_basis[i].b;
    for (int d = b; d <= a; ++d) {
        int c = a + b + p - d;
        if (c < a || c > 4) continue;
        out[gr_index(c, d)] += 1;
    }
    return out;
}

inline GrVec pieri(int p, const GrVec& u) {
    GrVec out{};
    for (int i = 0; i < kGrBasis; ++i) {
        if (u[i] == 0) continue;
        GrVec t = pieri_basis(p, i);
        for (int k = 0; k < kGrBasis; ++k) out[k] += u[i] * t[k];
    }
    return out;
}

// Structure constants sigma_i * sigma_j = sum_k table[i][j][k] sigma_k.
inline const std::array<std::array<GrVec, kGrBasis>, kGrBasis>& gr_mult_table() {
    static const auto table = [] {
        std::array<std::array<GrVec, kGrBasis>, kGrBasis> t{};
        for (int i = 0; i < kGrBasis; ++i)
            for (int j = 0; j < kGrBasis; ++j) {
                int c = gr_basis[j].a, d = gr_basis[j].b;
                GrVec u{};
                u[i] = 1;
                GrVec plus = pieri(c, pieri(d, u));
                GrVec out;
                if (d >= 1) {
                    GrVec minus = pieri(c + 1, pieri(d - 1, u));
                    for (int k = 0; k < kGrBasis; ++k) out[k] = plus[k] - minus[k];
                } else {
                    out = plus;
                }
                t[i][j] = out;
            }
        return t;
    }();
    return table;
}

}  // namespace detail

// A graded rational cohomology class on Gr(2,6) x P^5 in the Schubert (x)
// hyperplane basis. Immutable-friendly value type; all arithmetic is exact.
class AmbientClass {
  public:
    AmbientClass() = default;

    static AmbientClass zero() { return {}; }

    static AmbientClass one() { return sigma(0, 0); }

    static AmbientClass sigma(int a, int b) {
        AmbientClass u;
        u.c_[gr_index(a, b) * kHPowers] = 1;
        return u;
    }

    static AmbientClass h(int power = 1) {
        if (power < 0) throw std::invalid_argument("AmbientClass::h: negative power");
        if (power >= kHPowers) return {};
        AmbientClass u;
        u.c_[power] = 1;
        return u;
    }

    const Rat& coeff(int gr, int e) const { return c_[gr * kHPowers + e]; }
    const Rat& coeff(const Partition2& p, int e) const { return coeff(gr_index(p.a, p.b), e); }
    void set_coeff(int gr, int e, Rat v) { c_[gr * kHPowers + e] = std::move(v); }

    bool is_zero() const {
        for (const Rat& v : c_)
            if (v != 0) return false;
        return true;
    }

    AmbientClass& operator+=(const AmbientClass& o) {
        for (int i = 0; i < kGrBasis * kHPowers; ++i) c_[i] += o.c_[i];
        return *this;
    }
    AmbientClass& operator-=(const AmbientClass& o) {
        for (int i = 0; i < kGrBasis * kHPowers; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    AmbientClass& operator*=(const Rat& s) {
        for (Rat& v : c_) v *= s;
        return *this;
    }

    friend AmbientClass operator+(AmbientClass u, const AmbientClass& v) { return u += v; }
    friend AmbientClass operator-(AmbientClass u, const AmbientClass& v) { return u -= v; }
    friend AmbientClass operator-(const AmbientClass& u) {
        AmbientClass out;
        for (int i = 0; i < kGrBasis * kHPowers; ++i) out.c_[i] = -u.c_[i];
        return out;
    }
    friend AmbientClass operator*(AmbientClass u, const Rat& s) { return u *= s; }
    friend AmbientClass operator*(const Rat& s, AmbientClass u) { return u *= s; }

    friend AmbientClass operator*(const AmbientClass& u, const AmbientClass& v) {
        AmbientClass out;
        const auto& table = detail::gr_mult_table();
        for (int i = 0; i < kGrBasis; ++i)
            for (int e1 = 0; e1 < kHPowers; ++e1) {
                const Rat& a = u.coeff(i, e1);
                if (a == 0) continue;
                for (int j = 0; j < kGrBasis; ++j)
                    for (int e2 = 0; e2 + e1 < kHPowers; ++e2) {
                        const Rat& b = v.coeff(j, e2);
                        if (b == 0) continue;
                        Rat ab = a * b;
                        const auto& structure = table[i][j];
                        for (int k = 0; k < kGrBasis; ++k)
                            if (structure[k] != 0)
                                out.c_[k * kHPowers + e1 + e2] += Rat(structure[k]) * ab;
                    }
            }
        return out;
    }

    friend bool operator==(const AmbientClass&, const AmbientClass&) = default;

    // Homogeneous piece of total degree k (Schubert degree plus h degree).
    AmbientClass graded_piece(int k) const {
        AmbientClass out;
        for (int i = 0; i < kGrBasis; ++i) {
            int gdeg = gr_basis[i].a + gr_basis[i].b;
            for (int e = 0; e < kHPowers; ++e)
                if (gdeg + e == k) out.c_[i * kHPowers + e] = c_[i * kHPowers + e];
        }
        return out;
    }

    AmbientClass pow(int k) const {
        AmbientClass out = one();
        for (int i = 0; i < k; ++i) out = out * *this;
        return out;
    }

    std::string str() const;

  private:
    std::array<Rat, kGrBasis * kHPowers> c_{};
};

inline std::string AmbientClass::str() const {
    std::string s;
    for (int deg = 0; deg <= kAmbientDim; ++deg)
        for (int i = 0; i < kGrBasis; ++i)
            for (int e = 0; e < kHPowers; ++e) {
                if (gr_basis[i].a + gr_basis[i].b + e != deg) continue;
                const Rat& v = coeff(i, e);
                if (v == 0) continue;
                if (!s.empty()) s += " + ";
                s += rat_str(v);
                if (i != 0) s += "*s(" + std::to_string(gr_basis[i].a) + "," + std::to_string(gr_basis[i].b) + ")";
                if (e != 0) s += "*h^" + std::to_string(e);
            }
    return s.empty() ? "0" : s;
}

// Degree map of the Grassmannian factor: coefficient of the point class.
inline Rat gr_integrate(const AmbientClass& u) {
    return u.coeff(gr_index(4, 4), 0);
}

// Polynomials in h with rational coefficients, h^6 = 0.
using HPoly = std::array<Rat, kHPowers>;

inline HPoly hpoly_mul(const HPoly& f, const HPoly& g) {
    HPoly out{};
    for (int i = 0; i < kHPowers; ++i)
        for (int j = 0; i + j < kHPowers; ++j) out[i + j] += f[i] * g[j];
    return out;
}

inline std::string hpoly_str(const HPoly& p) {
    std::string s;
    for (int e = 0; e < kHPowers; ++e) {
        if (p[e] == 0) continue;
        Rat v = p[e];
        if (s.empty()) {
            if (v < 0) s += "-";
        } else {
            s += (v < 0) ? " - " : " + ";
        }
        Rat av = abs(v);
        bool unit = (av == 1 && e > 0);
        if (!unit) {
            bool paren = (av.get_den() != 1);
            s += paren ? "(" + rat_str(av) + ")" : rat_str(av);
        }
        if (e == 1) s += "h";
        if (e > 1) s += "h^" + std::to_string(e);
    }
    return s.empty() ? "0" : s;
}

// The surface X sits in Gr(2,6) as the zero locus of six sections of the
// line bundle with first Chern class sigma_1, so [X] = sigma_1^6 and
// integration over X pairs against that class, h-power by h-power.
inline const AmbientClass& x_fundamental_class() {
    static const AmbientClass s16 = AmbientClass::sigma(1, 0).pow(6);
    return s16;
}

inline HPoly x_integrate(const AmbientClass& u) {
    AmbientClass v = u * x_fundamental_class();
    HPoly out;
    for (int e = 0; e < kHPowers; ++e) out[e] = v.coeff(gr_index(4, 4), e);
    return out;
}

// ---------------------------------------------------------------------------
// Truncated one-variable power series over Q, for the universal exp/log/Todd
// expansions.

using RatSeries = std::vector<Rat>;

inline RatSeries series_mul(const RatSeries& a, const RatSeries& b, int len) {
    RatSeries out(len, Rat(0));
    for (int i = 0; i < static_cast<int>(a.size()) && i < len; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < static_cast<int>(b.size()) && i + j < len; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline RatSeries series_inverse(const RatSeries& a, int len) {
    if (a.empty() || a[0] == 0) throw std::invalid_argument("series_inverse: zero constant term");
    RatSeries out(len, Rat(0));
    out[0] = 1 / a[0];
    for (int k = 1; k < len; ++k) {
        Rat s = 0;
        for (int i = 1; i <= k && i < static_cast<int>(a.size()); ++i) s += a[i] * out[k - i];
        out[k] = -s / a[0];
    }
    return out;
}

// log of a series with constant term 1, via (log a)' = a'/a.
inline RatSeries series_log(const RatSeries& a, int len) {
    if (a.empty() || a[0] != 1) throw std::invalid_argument("series_log: constant term must be 1");
    RatSeries deriv(len, Rat(0));
    for (int k = 1; k < static_cast<int>(a.size()) && k < len + 1; ++k)
        if (k - 1 < len) deriv[k - 1] = Rat(k) * a[k];
    RatSeries quot = series_mul(deriv, series_inverse(a, len), len);
    RatSeries out(len, Rat(0));
    for (int k = 1; k < len; ++k) out[k] = quot[k - 1] / k;
    return out;
}

// x / (1 - e^{-x}) = 1 + x/2 + x^2/12 - x^4/720 + ...
inline const RatSeries& todd_series() {
    static const RatSeries td = [] {
        int len = kAmbientDim + 1;
        RatSeries g(len, Rat(0));  // (1 - e^{-x}) / x
        Rat sign = 1;
        for (int k = 0; k < len; ++k) {
            g[k] = sign / Rat(factorial(static_cast<unsigned>(k + 1)));
            sign = -sign;
        }
        return series_inverse(g, len);
    }();
    return td;
}

inline const RatSeries& log_todd_series() {
    static const RatSeries lt = series_log(todd_series(), kAmbientDim + 1);
    return lt;
}

// sum_k s_k x^k for nilpotent x.
inline AmbientClass series_at(const RatSeries& s, const AmbientClass& x) {
    AmbientClass out;
    AmbientClass xp = AmbientClass::one();
    for (size_t k = 0; k < s.size(); ++k) {
        if (k > 0) {
            xp = xp * x;
            if (xp.is_zero()) break;
        }
        if (s[k] != 0) out += xp * s[k];
    }
    return out;
}

// e^x for x with no degree-0 part.
inline AmbientClass exp_nilpotent(const AmbientClass& x) {
    if (x.graded_piece(0) != AmbientClass::zero())
        throw std::invalid_argument("exp_nilpotent: nonzero degree-0 part");
    AmbientClass out = AmbientClass::one();
    AmbientClass xp = AmbientClass::one();
    Rat kfact = 1;
    for (int k = 1; k <= kAmbientDim; ++k) {
        xp = xp * x;
        if (xp.is_zero()) break;
        kfact *= k;
        out += xp * (1 / kfact);
    }
    return out;
}

// Multiplicative inverse of 1 + nilpotent.
inline AmbientClass inverse_unit(const AmbientClass& u) {
    if (u.graded_piece(0) != AmbientClass::one())
        throw std::invalid_argument("inverse_unit: degree-0 part must be 1");
    AmbientClass n = u - AmbientClass::one();
    AmbientClass out = AmbientClass::one();
    AmbientClass p = AmbientClass::one();
    Rat sign = 1;
    for (int k = 1; k <= kAmbientDim; ++k) {
        p = p * n;
        if (p.is_zero()) break;
        sign = -sign;
        out += p * sign;
    }
    return out;
}

}  // namespace cubics
