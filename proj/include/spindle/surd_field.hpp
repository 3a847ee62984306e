#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "spindle/errors.hpp"
#include "spindle/surd.hpp"

namespace spindle {

// The field Q(sqrt(p) : p in generators), of dimension 2^t over Q with basis
// the subset products of the prime generators. Provides exact inversion by
// solving the multiplication-by-a linear system in that basis.
class SurdField {
  public:
    SurdField() { rebuild(); }

    explicit SurdField(const std::vector<long>& radicands) {
        for (long r : radicands) {
            if (r <= 0) throw Error("SurdField: positive radicands required");
            long n = r;
            for (long p = 2; p * p <= n; ++p)
                while (n % p == 0) { add_prime(p); n /= p; }
            if (n > 1) add_prime(n);
        }
        std::sort(primes_.begin(), primes_.end());
        rebuild();
    }

    const std::vector<long>& generators() const { return primes_; }
    const std::vector<long>& basis() const { return basis_; }

    bool contains(const Surd& a) const {
        for (const auto& [r, c] : a.terms())
            if (!index_.count(r)) return false;
        return true;
    }

    Surd inv(const Surd& a) const {
        if (a.is_zero()) throw ZeroDivision("inverse of zero");
        if (a.is_rational()) return Surd(Rational(1) / a.rational_part());
        if (!contains(a)) throw RadicandOutsideField("surd uses an undeclared radicand");
        std::size_t n = basis_.size();
        // Columns: a * sqrt(basis[j]) in basis coordinates; augmented with e_0.
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
        for (std::size_t j = 0; j < n; ++j) {
            Surd col = a * Surd::sqrt_of(basis_[j]);
            for (const auto& [r, c] : col.terms()) m[index_.at(r)][j] = c;
        }
        m[0][n] = 1;
        for (std::size_t col = 0, row = 0; col < n && row < n; ++col) {
            std::size_t piv = row;
            while (piv < n && m[piv][col] == 0) ++piv;
            if (piv == n) continue;
            std::swap(m[piv], m[row]);
            Rational inv_piv = Rational(1) / m[row][col];
            for (std::size_t k = col; k <= n; ++k) m[row][k] *= inv_piv;
            for (std::size_t r2 = 0; r2 < n; ++r2) {
                if (r2 == row || m[r2][col] == 0) continue;
                Rational f = m[r2][col];
                for (std::size_t k = col; k <= n; ++k) m[r2][k] -= f * m[row][k];
            }
            ++row;
        }
        Surd out;
        for (std::size_t j = 0; j < n; ++j)
            out += Surd::sqrt_of(basis_[j]) * Surd(m[j][n]);
        if (!((a * out) == Surd(1))) throw ZeroDivision("inverse of zero");
        return out;
    }

    Surd div(const Surd& num, const Surd& den) const { return num * inv(den); }

  private:
    void add_prime(long p) {
        if (std::find(primes_.begin(), primes_.end(), p) == primes_.end())
            primes_.push_back(p);
    }
    void rebuild() {
        basis_.clear();
        index_.clear();
        std::size_t t = primes_.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << t); ++mask) {
            long prod = 1;
            for (std::size_t i = 0; i < t; ++i)
                if (mask & (std::size_t(1) << i)) prod *= primes_[i];
            basis_.push_back(prod);
        }
        std::sort(basis_.begin(), basis_.end());
        for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
    }
    std::vector<long> primes_;
    std::vector<long> basis_;
    std::map<long, std::size_t> index_;
};

}  // namespace spindle
