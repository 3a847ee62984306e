#pragma once

#include <string>
#include <vector>

#include "algebra.hpp"
#include "tangle_expr.hpp"

namespace spindle {

// Diagram element of a non-crossing pair partition: the partition tangle
// evaluated on unit inputs, one per strand.
inline LoopVector tl_elem(const AlgebraSpec& spec, const Partition& rho) {
    for (const auto& b : rho.blocks)
        if (b.size() != 2) throw Error("tl_elem needs a pair partition");
    std::vector<LoopVector> units(rho.blocks.size(), unit_element(spec));
    return apply_tpi(spec, rho, units);
}

// Jones projection in degree k: delta^{-1} times the rainbow diagram at i.
inline LoopVector jones_element(const AlgebraSpec& spec, int k, int i) {
    LoopVector v = tl_elem(spec, rainbow_pairing(k, i));
    return v * Surd::sqrt_of(Rational(1, spec.dim()));
}

// Images of the Catalan-many degree-n diagrams, in lexicographic order of
// their pair partitions.
inline std::vector<LoopVector> tl_image(const AlgebraSpec& spec, int n,
                                        const Caps& caps = {}) {
    if (n < 1) throw Error("tl_image needs a positive degree");
    if (n > caps.max_degree || spec.dim() > caps.max_dim)
        throw CapExceeded("tl_image cap: degree " + std::to_string(n) + ", dim " +
                          std::to_string(spec.dim()));
    std::vector<LoopVector> out;
    for (const Partition& p : enumerate_partitions(2 * n, PartitionClass::EvenNonCrossing)) {
        bool pairs = true;
        for (const auto& b : p.blocks)
            if (b.size() != 2) pairs = false;
        if (pairs) out.push_back(tl_elem(spec, p));
    }
    return out;
}

namespace detail {

inline LoopVector eval_node(const AlgebraSpec& spec, const TangleExpr& e,
                            const std::vector<LoopVector>& inputs, std::size_t lo,
                            const Caps& caps) {
    ExprShape shape = expr_shape(e);
    if (shape.degree > caps.max_degree)
        throw CapExceeded("evaluate cap: degree " + std::to_string(shape.degree));
    switch (e.kind) {
        case ExprKind::Tpi: {
            std::vector<LoopVector> ins(inputs.begin() + static_cast<long>(lo),
                                        inputs.begin() + static_cast<long>(lo) +
                                            static_cast<long>(e.pi.blocks.size()));
            return apply_tpi(spec, e.pi, ins);
        }
        case ExprKind::S: return tl_elem(spec, pi_of(s_tangle(e.a)));
        case ExprKind::U: return tl_elem(spec, pi_of(u_tangle(e.a)));
        case ExprKind::M: return concat(spec, inputs[lo], inputs[lo + 1]);
        case ExprKind::Mult: return mult(inputs[lo], inputs[lo + 1]);
        case ExprKind::Unit: return unit_element(spec);
        case ExprKind::TrL:
        case ExprKind::TrR: {
            Surd v = trace(spec, inputs[lo],
                           e.kind == ExprKind::TrL ? TraceSide::Left : TraceSide::Right);
            LoopVector out(0);
            out.add(Loop{}, v);
            return out;
        }
        case ExprKind::E: return jones_element(spec, e.a, e.b);
        case ExprKind::Rot: return rotate(inputs[lo]);
        case ExprKind::Compose: {
            ExprShape sa = expr_shape(*e.kids[0]);
            std::size_t na = sa.slots.size();
            std::vector<LoopVector> b_in(
                inputs.begin() + static_cast<long>(lo + na - 1),
                inputs.begin() + static_cast<long>(lo + na - 1) +
                    static_cast<long>(expr_shape(*e.kids[1]).slots.size()));
            LoopVector plugged = eval_node(spec, *e.kids[1], b_in, 0, caps);
            std::vector<LoopVector> a_in;
            a_in.reserve(na);
            std::size_t next = lo;
            for (std::size_t j = 0; j < na; ++j) {
                if (j == static_cast<std::size_t>(e.a) - 1)
                    a_in.push_back(plugged);
                else
                    a_in.push_back(inputs[next++]);
            }
            return eval_node(spec, *e.kids[0], a_in, 0, caps);
        }
        case ExprKind::Free:
            throw UnsupportedTangleShape(
                "free compositions evaluate in a product algebra, not here");
        case ExprKind::Inv: {
            std::vector<LoopVector> starred;
            for (std::size_t j = 0; j < shape.slots.size(); ++j)
                starred.push_back(star(inputs[lo + j]));
            LoopVector inner = eval_node(spec, *e.kids[0], starred, 0, caps);
            return star(inner);
        }
    }
    throw Error("evaluate: unhandled expression kind");
}

}  // namespace detail

// Multilinear evaluation of a tangle expression on one vector per open slot,
// in slot order. Trace nodes return degree-0 vectors; use scalar_value to
// read them off.
inline LoopVector evaluate(const AlgebraSpec& spec, const TangleExpr& e,
                           const std::vector<LoopVector>& inputs, const Caps& caps = {}) {
    ExprShape shape = expr_shape(e);
    if (inputs.size() != shape.slots.size())
        throw DegreeMismatch("evaluate: expected " + std::to_string(shape.slots.size()) +
                             " inputs, got " + std::to_string(inputs.size()));
    for (std::size_t j = 0; j < inputs.size(); ++j)
        if (inputs[j].degree != shape.slots[j])
            throw DegreeMismatch("evaluate: input " + std::to_string(j + 1) +
                                 " has degree " + std::to_string(inputs[j].degree) +
                                 ", slot wants " + std::to_string(shape.slots[j]));
    return detail::eval_node(spec, e, inputs, 0, caps);
}

}  // namespace spindle
