#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spindle/errors.hpp"
#include "spindle/rational.hpp"

namespace spindle {

// n = square * squarefree; returns {sqrt(square), squarefree}.
inline std::pair<long, long> squarefree_split(long n) {
    if (n <= 0) throw Error("squarefree_split: positive integer required");
    long root = 1, free_part = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (int i = 0; i < e / 2; ++i) root *= p;
        if (e & 1) free_part *= p;
    }
    free_part *= n;
    return {root, free_part};
}

inline long smallest_prime_factor(long n) {
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

// Element of the real field generated by square roots of squarefree positive
// integers: sum of q_r * sqrt(r) with r squarefree, r = 1 the rational part.
// Invariant: keys squarefree, no zero coefficients; equal values have equal
// term maps (sqrt(r) for distinct squarefree r are linearly independent).
class Surd {
  public:
    Surd() = default;
    Surd(const Rational& q) { if (q != 0) terms_[1] = q; }
    Surd(long v) { if (v != 0) terms_[1] = Rational(v); }
    Surd(int v) : Surd(static_cast<long>(v)) {}

    static Surd sqrt_of(long n) {
        auto [root, free_part] = squarefree_split(n);
        Surd s;
        s.terms_[free_part] = Rational(root);
        return s;
    }

    // sqrt(p/q) = sqrt(p*q)/q, exact.
    static Surd sqrt_of(const Rational& q) {
        if (q < 0) throw Error("sqrt of negative rational");
        if (q == 0) return Surd();
        mpz_class pq = q.get_num() * q.get_den();
        if (!pq.fits_slong_p()) throw CapExceeded("radicand too large");
        Surd s = sqrt_of(pq.get_si());
        for (auto& [r, c] : s.terms_) c /= q.get_den();
        return s;
    }

    const std::map<long, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }
    Rational rational_part() const { return coefficient(1); }
    Rational coefficient(long r) const {
        auto it = terms_.find(r);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Surd& operator+=(const Surd& o) {
        for (const auto& [r, c] : o.terms_) add_term(r, c);
        return *this;
    }
    Surd& operator-=(const Surd& o) {
        for (const auto& [r, c] : o.terms_) add_term(r, -c);
        return *this;
    }
    friend Surd operator+(Surd a, const Surd& b) { return a += b; }
    friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
    Surd operator-() const {
        Surd s = *this;
        for (auto& [r, c] : s.terms_) c = -c;
        return s;
    }

    friend Surd operator*(const Surd& a, const Surd& b) {
        Surd out;
        for (const auto& [r1, c1] : a.terms_)
            for (const auto& [r2, c2] : b.terms_) {
                // sqrt(r1)*sqrt(r2) = g*sqrt((r1/g)(r2/g)) with g = gcd: the
                // cofactors of coprime squarefree numbers stay squarefree.
                long g = gcd_long(r1, r2);
                out.add_term((r1 / g) * (r2 / g), c1 * c2 * g);
            }
        return out;
    }
    Surd& operator*=(const Surd& o) { return *this = *this * o; }

    friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

    // Exact sign. Splits on a prime p as A + B*sqrt(p) with A, B in the
    // subfield without p; opposite-signed A, B are compared by squaring.
    int sign() const {
        if (terms_.empty()) return 0;
        if (terms_.size() == 1) return sgn(terms_.begin()->second);
        long p = 0;
        for (const auto& [r, c] : terms_)
            if (r > 1) { p = smallest_prime_factor(r); break; }
        Surd a, b;
        for (const auto& [r, c] : terms_) {
            if (r % p == 0) b.add_term(r / p, c);
            else a.add_term(r, c);
        }
        int sa = a.sign(), sb = b.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        return sa * (a * a - b * b * Surd(p)).sign();
    }

    friend bool operator<(const Surd& a, const Surd& b) { return (a - b).sign() < 0; }

    // Ordering key for containers; unrelated to numeric order.
    friend bool map_less(const Surd& a, const Surd& b) { return a.terms_ < b.terms_; }

  private:
    static long gcd_long(long a, long b) {
        while (b) { long t = a % b; a = b; b = t; }
        return a;
    }
    void add_term(long r, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(r);
        if (it == terms_.end()) terms_.emplace(r, c);
        else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    std::map<long, Rational> terms_;
};

inline std::string surd_str(const Surd& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [r, c] : s.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (r == 1) out += rat_str(a);
        else out += rat_str(a) + "*sqrt(" + std::to_string(r) + ")";
        first = false;
    }
    return out;
}

// Accepts the surd_str output plus shorthands like "sqrt(2)" and "-sqrt(2)".
inline Surd parse_surd(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '\t') t += c;
    if (t.empty()) throw SyntaxError(1, 1, "surd literal");
    Surd out;
    std::size_t i = 0;
    bool neg = false;
    if (t[i] == '+' || t[i] == '-') { neg = t[i] == '-'; ++i; }
    while (i < t.size()) {
        std::size_t j = i;
        while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
        std::string term = t.substr(i, j - i);
        if (term.empty()) throw SyntaxError(1, static_cast<int>(i) + 1, "surd term");
        Rational coeff(1);
        long rad = 1;
        auto star = term.find("*sqrt(");
        if (star != std::string::npos) {
            coeff = parse_rational(term.substr(0, star));
            std::string inside = term.substr(star + 6);
            if (inside.empty() || inside.back() != ')')
                throw SyntaxError(1, static_cast<int>(i) + 1, "closing ')' in sqrt");
            rad = std::stol(inside.substr(0, inside.size() - 1));
        } else if (term.rfind("sqrt(", 0) == 0) {
            if (term.back() != ')')
                throw SyntaxError(1, static_cast<int>(i) + 1, "closing ')' in sqrt");
            rad = std::stol(term.substr(5, term.size() - 6));
        } else {
            coeff = parse_rational(term);
        }
        if (rad <= 0) throw SyntaxError(1, static_cast<int>(i) + 1, "positive radicand");
        Surd piece = Surd::sqrt_of(rad) * Surd(coeff);
        out += neg ? -piece : piece;
        if (j < t.size()) { neg = t[j] == '-'; i = j + 1; }
        else i = j;
    }
    return out;
}

}  // namespace spindle
