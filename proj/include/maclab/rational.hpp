#pragma once

#include <gmpxx.h>

#include <string>

#include "maclab/errors.hpp"

namespace maclab {

using Rational = mpq_class;
using Integer = mpz_class;

// "p" for integers, "p/q" otherwise; always in lowest terms.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0) throw ParseError("bad rational '" + text + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    return r;
}

inline Rational pow(const Rational& base, int e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw DivisionByZero("0 raised to a negative power");
        return Rational(0);
    }
    Integer num, den;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
    Rational r = e > 0 ? Rational(num, den) : Rational(den, num);
    r.canonicalize();
    return r;
}

}  // namespace maclab
