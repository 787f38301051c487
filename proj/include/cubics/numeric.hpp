#pragma once

// Exact integer and rational arithmetic. Everything in this library is
// integer or rational; there is no floating point anywhere.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cubics {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when an internal re-verification fails. A report is never emitted
// past one of these; the CLI maps it to exit code 3.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

// "p/q", or just "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

inline Int floor_sqrt(const Int& n) {
    if (n < 0) throw std::domain_error("floor_sqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Floor division remainder, always in [0, m) for m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int div_exact(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw internal_error("div_exact: " + a.get_str() + " not divisible by " + b.get_str());
    return q;
}

inline long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("to_long: " + n.get_str());
    return n.get_si();
}

inline Int factorial(unsigned k) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

}  // namespace cubics
