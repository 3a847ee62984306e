#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "spindle/errors.hpp"

namespace spindle {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as arithmetic goes through its operators.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw ZeroDivision("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q" with optional sign, as emitted by rat_str.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw SyntaxError(1, 1, "rational literal");
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (i == 0 && (c == '-' || c == '+'));
        if (!ok) throw SyntaxError(1, static_cast<int>(i) + 1, "digit, '/', or sign in rational");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw SyntaxError(1, 1, "rational literal");
    if (q.get_den() == 0) throw ZeroDivision("rational with zero denominator");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

inline Rational pow_rat(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw ZeroDivision("0 raised to a negative power");
    Rational acc(1);
    Rational b = e > 0 ? base : Rational(1) / base;
    for (long i = 0; i < (e > 0 ? e : -e); ++i) acc *= b;
    return acc;
}

}  // namespace spindle
