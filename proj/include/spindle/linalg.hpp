#pragma once

#include <optional>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace spindle {

// Field policy for the exact elimination routines below. An Ops object must
// provide: zero(), one(), is_zero(x), sign(x) in {-1,0,1}, and div(a,b).
struct RationalOps {
    using value_type = Rational;
    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    bool is_zero(const Rational& x) const { return sgn(x) == 0; }
    int sign(const Rational& x) const { return sgn(x); }
    Rational div(const Rational& a, const Rational& b) const {
        if (sgn(b) == 0) throw ZeroDivision("division by zero");
        return a / b;
    }
};

template <class Ops>
using matrix_of = std::vector<std::vector<typename Ops::value_type>>;

template <class Ops>
int matrix_rank(matrix_of<Ops> m, const Ops& ops) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && ops.is_zero(m[pivot][col])) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || ops.is_zero(m[r][col])) continue;
            auto f = ops.div(m[r][col], m[rank][col]);
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = m[r][c] - f * m[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

// Symmetric PSD test by pivoted congruence elimination. A zero diagonal with a
// nonzero off-diagonal entry kills PSD via the corresponding 2x2 principal minor.
template <class Ops>
bool is_positive_semidefinite(matrix_of<Ops> m, const Ops& ops) {
    std::size_t n = m.size();
    std::vector<char> active(n, 1);
    for (;;) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (active[i] && !ops.is_zero(m[i][i])) { piv = i; break; }
        if (piv == n) {
            for (std::size_t i = 0; i < n; ++i) {
                if (!active[i]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (active[j] && j != i && !ops.is_zero(m[i][j])) return false;
            }
            return true;
        }
        if (ops.sign(m[piv][piv]) < 0) return false;
        active[piv] = 0;
        for (std::size_t r = 0; r < n; ++r) {
            if (!active[r] || ops.is_zero(m[r][piv])) continue;
            auto f = ops.div(m[r][piv], m[piv][piv]);
            for (std::size_t c = 0; c < n; ++c)
                if (active[c]) m[r][c] = m[r][c] - f * m[piv][c];
            m[r][piv] = ops.zero();
        }
    }
}

// Solves M x = rhs for square nonsingular M; throws ZeroDivision when singular.
template <class Ops>
std::vector<typename Ops::value_type> solve_linear(matrix_of<Ops> m,
                                                   std::vector<typename Ops::value_type> rhs,
                                                   const Ops& ops) {
    std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && ops.is_zero(m[pivot][col])) ++pivot;
        if (pivot == n) throw ZeroDivision("solve_linear: singular matrix");
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || ops.is_zero(m[r][col])) continue;
            auto f = ops.div(m[r][col], m[col][col]);
            for (std::size_t c = col; c < n; ++c)
                m[r][c] = m[r][c] - f * m[col][c];
            rhs[r] = rhs[r] - f * rhs[col];
        }
    }
    std::vector<typename Ops::value_type> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(ops.div(rhs[i], m[i][i]));
    return out;
}

// Solves M x = rhs for rectangular M, returning one solution (free variables
// set to zero) or nullopt when the system is inconsistent.
template <class Ops>
std::optional<std::vector<typename Ops::value_type>> solve_consistent(
    matrix_of<Ops> m, std::vector<typename Ops::value_type> rhs, const Ops& ops) {
    std::size_t rows = m.size(), cols = rows == 0 ? 0 : m[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && ops.is_zero(m[pivot][col])) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        std::swap(rhs[rank], rhs[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || ops.is_zero(m[r][col])) continue;
            auto f = ops.div(m[r][col], m[rank][col]);
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = m[r][c] - f * m[rank][c];
            rhs[r] = rhs[r] - f * rhs[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (!ops.is_zero(rhs[r])) return std::nullopt;
    std::vector<typename Ops::value_type> out(cols, ops.zero());
    for (std::size_t i = 0; i < rank; ++i)
        out[pivot_col[i]] = ops.div(rhs[i], m[i][pivot_col[i]]);
    return out;
}

// Basis of {x : M x = 0}; one vector per free column, in column order.
template <class Ops>
std::vector<std::vector<typename Ops::value_type>> nullspace(matrix_of<Ops> m,
                                                             const Ops& ops) {
    std::size_t rows = m.size(), cols = rows == 0 ? 0 : m[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && ops.is_zero(m[pivot][col])) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || ops.is_zero(m[r][col])) continue;
            auto f = ops.div(m[r][col], m[rank][col]);
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = m[r][c] - f * m[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<typename Ops::value_type>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename Ops::value_type> v(cols, ops.zero());
        v[free] = ops.one();
        for (std::size_t i = 0; i < rank; ++i)
            v[pivot_col[i]] = ops.div(ops.zero() - m[i][free], m[i][pivot_col[i]]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace spindle
