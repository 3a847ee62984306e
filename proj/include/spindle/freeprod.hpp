#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "evaluate.hpp"
#include "gram.hpp"
#include "kreweras.hpp"
#include "moments.hpp"
#include "partition.hpp"

namespace spindle {

// Moment profile of a tower of dimensions dim P_n together with its derived
// cumulant sequences. Boolean cumulants of such a profile count orthogonal
// basis vectors, so they must be nonnegative integers; anything else is
// rejected on construction.
struct DimensionProfile {
    MomentProfile moments;
    std::vector<Rational> free_cumulants;
    std::vector<Rational> boolean_cumulants;

    explicit DimensionProfile(MomentProfile mu) : moments(std::move(mu)) {
        free_cumulants = cumulants_from_moments(moments, CumulantKind::Free).values;
        boolean_cumulants = cumulants_from_moments(moments, CumulantKind::Boolean).values;
        for (std::size_t k = 0; k < boolean_cumulants.size(); ++k) {
            const Rational& b = boolean_cumulants[k];
            if (sign(b) < 0 || b.get_den() != 1)
                throw NegativeBooleanCumulant(
                    "profile '" + moments.name + "': boolean cumulant b(" +
                    std::to_string(k + 1) + ") = " + rat_str(b) +
                    " is not a nonnegative integer");
        }
    }

    int order() const { return moments.order(); }
};

inline DimensionProfile tlj_profile(int N) {
    MomentProfile mu{"tlj", {}};
    std::vector<Rational> cat{Rational(1)};
    for (int n = 1; n <= N; ++n) {
        Rational c(0);
        for (int j = 0; j < n; ++j)
            c += cat[static_cast<std::size_t>(j)] * cat[static_cast<std::size_t>(n - 1 - j)];
        cat.push_back(c);
        mu.moments.push_back(c);
    }
    return DimensionProfile(mu);
}

inline DimensionProfile delta_profile(long d, int N) {
    MomentProfile mu{"delta_" + std::to_string(d), {}};
    Rational pw(1);
    for (int n = 1; n <= N; ++n) {
        pw *= Rational(d);
        mu.moments.push_back(pw);
    }
    return DimensionProfile(mu);
}

inline std::vector<Rational> tensor_dims(const DimensionProfile& P, const DimensionProfile& Q,
                                         int N) {
    require_order(P.moments, N, "tensor_dims");
    require_order(Q.moments, N, "tensor_dims");
    std::vector<Rational> out;
    for (int n = 1; n <= N; ++n) out.push_back(P.moments.m(n) * Q.moments.m(n));
    return out;
}

inline std::vector<Rational> free_product_dims(const DimensionProfile& P,
                                               const DimensionProfile& Q, int N) {
    return free_mult_conv(P.moments, Q.moments, N).moments;
}

struct BooleanDecomposition {
    std::vector<Rational> L;                     // L[n-1] = dim L(n)
    std::map<std::string, Rational> per_partition;  // p in NC(N) -> b_P(p) b_Q(K(p))
};

// dim L(n) = sum over p in NC(n) of b_P(p) b_Q(K(p)); the per-partition
// summands are reported for the top degree N.
inline BooleanDecomposition boolean_decomposition_dims(const DimensionProfile& P,
                                                       const DimensionProfile& Q, int N) {
    require_order(P.moments, N, "boolean_decomposition_dims");
    require_order(Q.moments, N, "boolean_decomposition_dims");
    BooleanDecomposition out;
    for (int n = 1; n <= N; ++n) {
        Rational total(0);
        for (const auto& p : enumerate_partitions(n, PartitionClass::NonCrossing)) {
            Rational summand = multiplicative_extension(P.boolean_cumulants, p) *
                               multiplicative_extension(Q.boolean_cumulants, kreweras(p));
            total += summand;
            if (n == N) out.per_partition[partition_str(p)] = summand;
        }
        out.L.push_back(total);
    }
    return out;
}

// One basis label of the degree-n component of the free product: an interval
// partition I of n, a non-crossing partition per part, and per block of each
// p_j (resp. of K(p_j)) an index into the Boolean basis of P (resp. Q).
struct LabelPart {
    Partition p;
    std::vector<int> p_idx;
    std::vector<int> k_idx;
};

struct BasisLabel {
    std::vector<int> interval;
    std::vector<LabelPart> parts;
};

namespace detail {

inline long small_count(const std::vector<Rational>& seq, std::size_t block_size) {
    const Rational& b = seq[block_size - 1];
    return b.get_num().get_si();
}

inline void compositions_of(int n, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = 1; k <= n; ++k) {
        cur.push_back(k);
        compositions_of(n - k, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// Deterministic enumeration: interval partitions with earlier parts smaller
// first, then per part the non-crossing partitions in enumeration order, then
// odometer over the per-block index ranges. Count = free_product_dims at n.
inline std::vector<BasisLabel> basis_labels(const DimensionProfile& P,
                                            const DimensionProfile& Q, int n) {
    require_order(P.moments, n, "basis_labels");
    require_order(Q.moments, n, "basis_labels");
    std::vector<std::vector<int>> intervals;
    std::vector<int> cur;
    detail::compositions_of(n, cur, intervals);

    std::vector<std::vector<std::pair<Partition, Partition>>> nc_with_kr;
    for (int k = 1; k <= n; ++k) {
        nc_with_kr.emplace_back();
        for (const auto& p : enumerate_partitions(k, PartitionClass::NonCrossing))
            nc_with_kr.back().push_back({p, kreweras(p)});
    }

    std::vector<BasisLabel> out;
    for (const auto& I : intervals) {
        // Odometer over the partition choice of every part.
        std::vector<std::size_t> ppick(I.size(), 0);
        for (;;) {
            std::vector<long> ranges;
            std::vector<LabelPart> parts;
            bool feasible = true;
            for (std::size_t j = 0; j < I.size() && feasible; ++j) {
                const auto& [p, kp] =
                    nc_with_kr[static_cast<std::size_t>(I[j]) - 1][ppick[j]];
                LabelPart part{p, {}, {}};
                for (const auto& b : p.blocks) {
                    long r = detail::small_count(P.boolean_cumulants, b.size());
                    if (r == 0) feasible = false;
                    ranges.push_back(r);
                    part.p_idx.push_back(1);
                }
                for (const auto& c : kp.blocks) {
                    long r = detail::small_count(Q.boolean_cumulants, c.size());
                    if (r == 0) feasible = false;
                    ranges.push_back(r);
                    part.k_idx.push_back(1);
                }
                parts.push_back(std::move(part));
            }
            if (feasible) {
                // Odometer over all index slots of this (I, p_1..p_r) choice.
                std::vector<long> idx(ranges.size(), 1);
                for (;;) {
                    BasisLabel label{I, parts};
                    std::size_t at = 0;
                    for (auto& part : label.parts) {
                        for (auto& v : part.p_idx) v = static_cast<int>(idx[at++]);
                        for (auto& v : part.k_idx) v = static_cast<int>(idx[at++]);
                    }
                    out.push_back(std::move(label));
                    std::size_t j = idx.size();
                    while (j > 0 && idx[j - 1] == ranges[j - 1]) idx[--j] = 1;
                    if (j == 0) break;
                    ++idx[j - 1];
                }
            }
            std::size_t j = ppick.size();
            while (j > 0 &&
                   ppick[j - 1] + 1 ==
                       nc_with_kr[static_cast<std::size_t>(I[j - 1]) - 1].size())
                ppick[--j] = 0;
            if (j == 0) break;
            ++ppick[j - 1];
        }
    }
    return out;
}

// Character moments of the free wreath product: the fixed-point dimensions
// multiply like the free multiplicative convolution of the factor characters.
inline MomentProfile wreath_character_moments(const MomentProfile& alpha,
                                              const MomentProfile& beta, int N) {
    return free_mult_conv(alpha, beta, N);
}

// ---- concrete realization inside the tensor of two loop algebras ----

// Star graph of the tensor algebra: blocks m_i m'_j in i-major order.
inline AlgebraSpec tensor_spec(const AlgebraSpec& a, const AlgebraSpec& b) {
    std::vector<long> blocks;
    for (long ma : a.blocks)
        for (long mb : b.blocks) blocks.push_back(ma * mb);
    return AlgebraSpec(a.name + "(x)" + b.name, blocks);
}

// Pairwise zip of loops under the edge identification
// (i,k) x (j,l) -> block (i-1) nB + j, edge (k-1) m'_j + l; coefficients
// multiply. This realizes the tensor embedding on the loop bases.
inline LoopVector tensor_zip(const AlgebraSpec& a, const AlgebraSpec& b, const LoopVector& x,
                             const LoopVector& y) {
    if (x.degree != y.degree) throw DegreeMismatch("tensor_zip needs equal degrees");
    int nb = b.num_blocks();
    LoopVector out(x.degree);
    for (const auto& [lx, cx] : x.terms)
        for (const auto& [ly, cy] : y.terms) {
            Loop w(lx.size());
            for (std::size_t t = 0; t < lx.size(); ++t) {
                long mj = b.blocks[static_cast<std::size_t>(ly[t].block) - 1];
                w[t].block = (lx[t].block - 1) * nb + ly[t].block;
                w[t].idx = static_cast<int>((lx[t].idx - 1) * mj + ly[t].idx);
            }
            out.add(w, cx * cy);
        }
    return out;
}

enum class LabelSource { Tl, Full };

// Exact rank of the span of Z_{T_pi} (x) Z_{T_kr'(pi)} over all even
// non-crossing pi >= the shifted pairing, with inputs drawn from the realized
// subalgebras of the two factors (Tl: cap elements; Full: the loop basis).
// Finer free pairs add nothing: their tangles factor through these by block
// substitution. Degrees above 3 are out of computational reach.
inline int concrete_span_rank(const AlgebraSpec& spec_a, const AlgebraSpec& spec_b, int n,
                              LabelSource source) {
    if (n < 1) throw Error("concrete_span_rank needs a positive degree");
    if (n > 3)
        throw CapExceeded("concrete_span_rank cap: degree " + std::to_string(n) + " > 3");
    Caps caps = source == LabelSource::Tl ? Caps{3, 16} : Caps{2, 4};

    auto labels_for = [&](const AlgebraSpec& spec, int s) {
        if (source == LabelSource::Tl) return tl_image(spec, s, caps);
        std::vector<LoopVector> out;
        for (const auto& l : loop_basis(spec, s, caps)) {
            LoopVector v(s);
            v.add(l, Surd(1));
            out.push_back(std::move(v));
        }
        return out;
    };
    std::vector<std::vector<LoopVector>> la, lb;
    for (int s = 1; s <= n; ++s) {
        la.push_back(labels_for(spec_a, s));
        lb.push_back(labels_for(spec_b, s));
    }

    Partition base = pair_partition_shifted(2 * n);
    std::vector<LoopVector> vecs;
    for (const auto& pi : enumerate_partitions(2 * n, PartitionClass::EvenNonCrossing)) {
        if (!leq(base, pi)) continue;
        Partition kp = nested_kreweras(pi);
        std::vector<std::size_t> sizes;
        for (const auto& b : pi.blocks)
            sizes.push_back(la[b.size() / 2 - 1].size());
        for (const auto& c : kp.blocks)
            sizes.push_back(lb[c.size() / 2 - 1].size());
        std::vector<std::size_t> pick(sizes.size(), 0);
        for (;;) {
            std::vector<LoopVector> ins_a, ins_b;
            std::size_t at = 0;
            for (const auto& b : pi.blocks) ins_a.push_back(la[b.size() / 2 - 1][pick[at++]]);
            for (const auto& c : kp.blocks) ins_b.push_back(lb[c.size() / 2 - 1][pick[at++]]);
            LoopVector va = apply_tpi(spec_a, pi, ins_a);
            LoopVector vb = apply_tpi(spec_b, kp, ins_b);
            if (!va.is_zero() && !vb.is_zero())
                vecs.push_back(tensor_zip(spec_a, spec_b, va, vb));
            std::size_t j = pick.size();
            while (j > 0 && pick[j - 1] + 1 == sizes[j - 1]) pick[--j] = 0;
            if (j == 0) break;
            ++pick[j - 1];
        }
    }
    return span_rank(vecs);
}

}  // namespace spindle
