#pragma once

#include <map>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "linalg.hpp"
#include "surd_field.hpp"

namespace spindle {

// Elimination policy over a fixed multi-quadratic field.
struct SurdOps {
    using value_type = Surd;
    SurdField field;

    Surd zero() const { return Surd(); }
    Surd one() const { return Surd(1); }
    bool is_zero(const Surd& x) const { return x.is_zero(); }
    int sign(const Surd& x) const { return x.sign(); }
    Surd div(const Surd& a, const Surd& b) const { return field.div(a, b); }
};

// Smallest multi-quadratic field containing every entry of m.
inline SurdOps ops_for(const std::vector<std::vector<Surd>>& m) {
    std::vector<long> rads;
    for (const auto& row : m)
        for (const Surd& x : row)
            for (const auto& [r, c] : x.terms()) rads.push_back(r);
    return SurdOps{SurdField(rads)};
}

// One-off exact division in the field generated by both operands.
inline Surd surd_div(const Surd& a, const Surd& b) {
    std::vector<long> rads;
    for (const auto& [r, c] : a.terms()) rads.push_back(r);
    for (const auto& [r, c] : b.terms()) rads.push_back(r);
    return SurdField(rads).div(a, b);
}

// Trace pairing <x, y> = Tr(y* x); positive definite on each degree.
inline Surd inner_product(const AlgebraSpec& spec, const LoopVector& x,
                          const LoopVector& y) {
    return trace(spec, mult(star(y), x), TraceSide::Right);
}

struct GramResult {
    std::vector<std::vector<Surd>> matrix;
    int rank = 0;
    bool positive_semidefinite = false;
};

inline GramResult gram(const AlgebraSpec& spec, const std::vector<LoopVector>& vs) {
    GramResult out;
    if (vs.empty()) {
        out.positive_semidefinite = true;
        return out;
    }
    for (const auto& v : vs)
        if (v.degree != vs.front().degree)
            throw DegreeMismatch("gram needs vectors of one common degree");
    std::size_t n = vs.size();
    out.matrix.assign(n, std::vector<Surd>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Surd g = inner_product(spec, vs[i], vs[j]);
            out.matrix[i][j] = g;
            out.matrix[j][i] = g;
        }
    SurdOps ops = ops_for(out.matrix);
    out.rank = matrix_rank(out.matrix, ops);
    out.positive_semidefinite = is_positive_semidefinite(out.matrix, ops);
    return out;
}

// Coordinate matrix: one row per vector, one column per loop in the union.
inline std::vector<std::vector<Surd>> coordinate_rows(const std::vector<LoopVector>& vs) {
    std::map<Loop, std::size_t> col;
    for (const auto& v : vs)
        for (const auto& [l, c] : v.terms) col.try_emplace(l, 0);
    std::size_t j = 0;
    for (auto& [l, idx] : col) idx = j++;
    std::vector<std::vector<Surd>> rows(vs.size(), std::vector<Surd>(col.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (const auto& [l, c] : vs[i].terms) rows[i][col[l]] = c;
    return rows;
}

inline int span_rank(const std::vector<LoopVector>& vs) {
    if (vs.empty()) return 0;
    auto rows = coordinate_rows(vs);
    SurdOps ops = ops_for(rows);
    return matrix_rank(rows, ops);
}

// Orthocomplement of the concatenation images U_{k,m} inside the realized
// degree-n space, for all k + m = n with k, m >= 1. realized[k-1] lists the
// chosen degree-k vectors; the images must stay in the span of realized[n-1].
// Returns an orthogonal (unnormalized) basis w.r.t. the trace pairing.
inline std::vector<LoopVector> boolean_subspace(
    const AlgebraSpec& spec, const std::vector<std::vector<LoopVector>>& realized, int n) {
    if (n < 1 || realized.size() < static_cast<std::size_t>(n))
        throw Error("boolean_subspace needs realized spaces up to degree n");
    for (int k = 1; k <= n; ++k)
        for (const auto& v : realized[static_cast<std::size_t>(k) - 1])
            if (v.degree != k)
                throw DegreeMismatch("realized list at degree " + std::to_string(k) +
                                     " holds a vector of degree " + std::to_string(v.degree));
    const auto& ambient = realized[static_cast<std::size_t>(n) - 1];
    if (ambient.empty()) return {};

    std::vector<LoopVector> images;
    for (int k = 1; k < n; ++k)
        for (const auto& x : realized[static_cast<std::size_t>(k) - 1])
            for (const auto& y : realized[static_cast<std::size_t>(n - k) - 1])
                images.push_back(concat(spec, x, y));

    if (!images.empty()) {
        std::vector<LoopVector> all = ambient;
        all.insert(all.end(), images.begin(), images.end());
        if (span_rank(all) != span_rank(ambient))
            throw NotClosedUnderConcatenation(
                "a concatenation image escapes the realized degree-" + std::to_string(n) +
                " span");
    }

    std::vector<std::vector<Surd>> coeffs;
    if (images.empty()) {
        coeffs.assign(ambient.size(), std::vector<Surd>(ambient.size()));
        for (std::size_t i = 0; i < ambient.size(); ++i) coeffs[i][i] = Surd(1);
    } else {
        std::vector<std::vector<Surd>> pairing(images.size(),
                                               std::vector<Surd>(ambient.size()));
        for (std::size_t j = 0; j < images.size(); ++j)
            for (std::size_t i = 0; i < ambient.size(); ++i)
                pairing[j][i] = inner_product(spec, ambient[i], images[j]);
        SurdOps ops = ops_for(pairing);
        coeffs = nullspace(pairing, ops);
    }

    std::vector<LoopVector> out;
    std::vector<Surd> diag;
    for (const auto& c : coeffs) {
        LoopVector w(n);
        for (std::size_t i = 0; i < ambient.size(); ++i)
            if (!c[i].is_zero()) w += ambient[i] * c[i];
        for (std::size_t u = 0; u < out.size(); ++u) {
            Surd overlap = inner_product(spec, w, out[u]);
            if (!overlap.is_zero()) w -= out[u] * surd_div(overlap, diag[u]);
        }
        if (w.is_zero()) continue;
        diag.push_back(inner_product(spec, w, w));
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace spindle
