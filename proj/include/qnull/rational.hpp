#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qnull {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) as long as
// values are built through arithmetic or make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Exact square root when r is the square of a rational, nullopt otherwise.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    const Integer& num = r.get_num();
    const Integer& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    return make_rational(sqrt(num), sqrt(den));
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qnull
