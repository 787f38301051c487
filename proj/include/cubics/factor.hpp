#pragma once

// Prime factorization by trial division. Inputs at desk scale are well
// below 10^8, so nothing fancier is warranted.

#include <vector>

#include "cubics/numeric.hpp"

namespace cubics {

struct PrimePower {
    Int prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Sorted by prime; the product of prime^exponent is the factored integer.
// The empty vector is the factorization of 1.
using Factorization = std::vector<PrimePower>;

inline Factorization factorize(Int n) {
    if (n <= 0) throw std::domain_error("factorize: argument must be positive");
    Factorization out;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n = div_exact(n, p);
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (Int p = 5; p * p <= n; p += (mod_floor(p, 6) == 5) ? 2 : 4) strip(p);
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    Factorization f = factorize(n);
    return f.size() == 1 && f[0].exponent == 1;
}

inline Int factored_value(const Factorization& f) {
    Int v = 1;
    for (const auto& pp : f) {
        Int q;
        mpz_pow_ui(q.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        v *= q;
    }
    return v;
}

// All positive divisors, unsorted.
inline std::vector<Int> divisors(const Int& n) {
    std::vector<Int> ds{1};
    for (const auto& pp : factorize(n)) {
        size_t base = ds.size();
        Int pe = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            pe *= pp.prime;
            for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pe);
        }
    }
    return ds;
}

// All g > 0 with g^2 dividing n.
inline std::vector<Int> square_divisors(const Int& n) {
    std::vector<Int> ds{1};
    for (const auto& pp : factorize(n)) {
        size_t base = ds.size();
        Int pe = 1;
        for (unsigned e = 1; 2 * e <= pp.exponent; ++e) {
            pe *= pp.prime;
            for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pe);
        }
    }
    return ds;
}

}  // namespace cubics
