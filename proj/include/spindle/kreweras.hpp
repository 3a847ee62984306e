#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "spindle/errors.hpp"
#include "spindle/partition.hpp"

namespace spindle {

// Complement of a partial partition: the coarsest partition of the complement
// of the support whose overlay with the input stays non-crossing. Computed by
// the interval criterion: i ~ j iff no support element inside [i,j] shares a
// block with a support element outside [i,j].
inline PartialPartition partial_kreweras(const PartialPartition& pp) {
    if (!is_noncrossing(pp)) throw NotNonCrossing("partial partition crosses on its support");
    std::vector<int> comp = pp.complement();
    int m = static_cast<int>(comp.size());
    std::vector<int> block_of(pp.n + 1, -1);
    for (std::size_t b = 0; b < pp.blocks.size(); ++b)
        for (int x : pp.blocks[b]) block_of[x] = static_cast<int>(b);

    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    // For a support block, relate complement points i < j iff no element of
    // the block lies in (i,j) while another lies outside [i,j].
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            int lo = comp[a], hi = comp[b];
            bool blocked = false;
            for (const auto& blk : pp.blocks) {
                bool inside = false, outside = false;
                for (int x : blk) {
                    if (x > lo && x < hi) inside = true;
                    else outside = true;
                }
                if (inside && outside) { blocked = true; break; }
            }
            if (!blocked) parent[find(a)] = find(b);
        }

    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < m; ++i) groups[find(i)].push_back(comp[i]);
    std::vector<std::vector<int>> bs;
    for (auto& [k, v] : groups) bs.push_back(v);
    return PartialPartition(pp.n, bs);
}

namespace detail {

inline PartialPartition embed(const Partition& p, int ambient, int scale, int offset) {
    std::vector<std::vector<int>> bs;
    for (const auto& b : p.blocks) {
        std::vector<int> nb;
        for (int x : b) nb.push_back(scale * x + offset);
        bs.push_back(nb);
    }
    return PartialPartition(ambient, bs);
}

inline Partition read_off(const PartialPartition& pp, int order, int scale, int offset) {
    std::vector<std::vector<int>> bs;
    for (const auto& b : pp.blocks) {
        std::vector<int> nb;
        for (int x : b) {
            if ((x - offset) % scale) throw Error("read_off: point not on the sublattice");
            nb.push_back((x - offset) / scale);
        }
        bs.push_back(nb);
    }
    return Partition(order, bs);
}

}  // namespace detail

// Complement on interleaved points: p sits on odd points of [1,2n], the
// complement is read off the even points. |p| + |K(p)| = n + 1.
inline Partition kreweras(const Partition& p) {
    if (!is_noncrossing(p)) throw NotNonCrossing("kreweras of a crossing partition");
    auto odd = detail::embed(p, 2 * p.n, 2, -1);
    return detail::read_off(partial_kreweras(odd), p.n, 2, 0);
}

inline Partition kreweras_inverse(const Partition& q) {
    if (!is_noncrossing(q)) throw NotNonCrossing("kreweras inverse of a crossing partition");
    auto even = detail::embed(q, 2 * q.n, 2, 0);
    return detail::read_off(partial_kreweras(even), q.n, 2, -1);
}

// delta(i) = 1 for odd i; the doubling maps: f packs point i at 2i - delta(i),
// ft at 2i - (1 - delta(i)). Image of f is {1,4,5,8,...}, of ft {2,3,6,7,...}.
inline int doubling_f(int i) { return 2 * i - (i % 2); }
inline int doubling_ft(int i) { return 2 * i - 1 + (i % 2); }

// Nested complement of a partition of even order 2k, computed through the
// 4k-point embedding. Defined on all non-crossing partitions of even order.
inline Partition nested_kreweras(const Partition& pi) {
    if (pi.n % 2) throw OddOrder("nested complement needs even order");
    if (!is_noncrossing(pi)) throw NotNonCrossing("nested complement of a crossing partition");
    int two_k = pi.n;
    std::vector<std::vector<int>> bs;
    for (const auto& b : pi.blocks) {
        std::vector<int> nb;
        for (int x : b) nb.push_back(doubling_f(x));
        bs.push_back(nb);
    }
    PartialPartition embedded(2 * two_k, bs);
    PartialPartition kr = partial_kreweras(embedded);
    std::vector<int> inverse_ft(2 * two_k + 1, 0);
    for (int i = 1; i <= two_k; ++i) inverse_ft[doubling_ft(i)] = i;
    std::vector<std::vector<int>> out;
    for (const auto& b : kr.blocks) {
        std::vector<int> nb;
        for (int x : b) {
            if (!inverse_ft[x]) throw Error("nested complement: point off the ft-sublattice");
            nb.push_back(inverse_ft[x]);
        }
        out.push_back(nb);
    }
    return Partition(two_k, out);
}

// Cyclic pair partition {2i,2i+1} (wrap block {2n,1} included).
inline Partition pair_partition_shifted(int two_n) {
    if (two_n % 2) throw OddOrder("pair partition of odd order");
    std::vector<std::vector<int>> bs;
    bs.push_back({two_n, 1});
    for (int i = 1; i < two_n / 2; ++i) bs.push_back({2 * i, 2 * i + 1});
    return Partition(two_n, bs);
}

// Pair partition {2i-1,2i}.
inline Partition pair_partition_aligned(int two_n) {
    if (two_n % 2) throw OddOrder("pair partition of odd order");
    std::vector<std::vector<int>> bs;
    for (int i = 1; i <= two_n / 2; ++i) bs.push_back({2 * i - 1, 2 * i});
    return Partition(two_n, bs);
}

enum class ParityMap { F, G, FInv, GInv };

// F halves a partition above the shifted pair partition by reading odd
// points; G reads even points above the aligned pair partition.
inline Partition parity_map(const Partition& pi, ParityMap which) {
    if (which == ParityMap::F || which == ParityMap::G) {
        if (pi.n % 2) throw OddOrder("parity map needs even order");
        int n = pi.n / 2;
        const Partition required =
            which == ParityMap::F ? pair_partition_shifted(pi.n) : pair_partition_aligned(pi.n);
        if (!leq(required, pi))
            throw PrecedenceViolation("partition does not dominate the required pair partition");
        int offset = which == ParityMap::F ? -1 : 0;
        std::map<int, std::vector<int>> groups;
        for (int i = 1; i <= n; ++i) groups[pi.block_index_of(2 * i + offset)].push_back(i);
        std::vector<std::vector<int>> bs;
        for (auto& [k, v] : groups) bs.push_back(v);
        return Partition(n, bs);
    }
    int two_n = 2 * pi.n;
    std::vector<std::vector<int>> bs;
    for (const auto& b : pi.blocks) {
        std::vector<int> nb;
        for (int i : b) {
            if (which == ParityMap::FInv) {
                int prev = 2 * i - 2 == 0 ? two_n : 2 * i - 2;
                nb.push_back(prev);
                nb.push_back(2 * i - 1);
            } else {
                nb.push_back(2 * i - 1);
                nb.push_back(2 * i);
            }
        }
        bs.push_back(nb);
    }
    return Partition(two_n, bs);
}

// Depth: 1 + number of blocks strictly enclosing B. In a non-crossing
// partition span containment is enclosure.
inline std::map<int, int> depth_map(const Partition& p) {
    if (!is_noncrossing(p)) throw NotNonCrossing("depth of a crossing partition");
    std::map<int, int> out;
    for (int i = 0; i < p.num_blocks(); ++i) {
        int d = 1;
        for (int j = 0; j < p.num_blocks(); ++j) {
            if (i == j) continue;
            if (p.blocks[j].front() < p.blocks[i].front() && p.blocks[i].back() < p.blocks[j].back())
                ++d;
        }
        out[i] = d;
    }
    return out;
}

inline int depth_of_block(const Partition& p, const std::vector<int>& block) {
    auto sorted = block;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < p.num_blocks(); ++i)
        if (p.blocks[i] == sorted) return depth_map(p).at(i);
    throw Error("depth_of_block: block not in partition");
}

inline int find_block(const Partition& p, std::vector<int> block) {
    std::sort(block.begin(), block.end());
    for (int i = 0; i < p.num_blocks(); ++i)
        if (p.blocks[i] == block) return i;
    throw Error("block not in partition");
}

inline Partition merge_blocks(const Partition& p, const std::vector<int>& b1,
                              const std::vector<int>& b2) {
    if (!is_noncrossing(p)) throw NotNonCrossing("merge in a crossing partition");
    int i = find_block(p, b1), j = find_block(p, b2);
    if (i == j) throw NotAdjacent("merging a block with itself");
    std::vector<std::vector<int>> bs;
    std::vector<int> merged = p.blocks[i];
    merged.insert(merged.end(), p.blocks[j].begin(), p.blocks[j].end());
    bs.push_back(merged);
    for (int k = 0; k < p.num_blocks(); ++k)
        if (k != i && k != j) bs.push_back(p.blocks[k]);
    Partition out(p.n, bs);
    if (!is_noncrossing(out)) throw NotAdjacent("blocks cannot merge without a crossing");
    return out;
}

// Split B after its i-th element (i in [1,|B|-1]).
inline Partition split_block(const Partition& p, const std::vector<int>& block, int i) {
    if (!is_noncrossing(p)) throw NotNonCrossing("split in a crossing partition");
    int bi = find_block(p, block);
    const auto& b = p.blocks[bi];
    if (i < 1 || i >= static_cast<int>(b.size()))
        throw InvalidSplitIndex("split index must lie in [1,|B|-1]");
    std::vector<std::vector<int>> bs;
    bs.emplace_back(b.begin(), b.begin() + i);
    bs.emplace_back(b.begin() + i, b.end());
    for (int k = 0; k < p.num_blocks(); ++k)
        if (k != bi) bs.push_back(p.blocks[k]);
    return Partition(p.n, bs);
}

struct EnvelopingBlocks {
    std::vector<int> upper;                // block of K(p)
    std::vector<std::vector<int>> lower;   // blocks of K(p), left to right
};

// Computed in the overlay of p on odd and K(p) on even points of [1,2n]:
// the complement blocks that can merge with B there, split by depth. The
// unique adjacent block of depth <= depth(B) is the upper one; the |B|-1
// deeper ones, left to right, are the lower ones.
inline EnvelopingBlocks enveloping_blocks(const Partition& p, const std::vector<int>& block) {
    if (!is_noncrossing(p)) throw NotNonCrossing("enveloping blocks in a crossing partition");
    Partition k = kreweras(p);
    auto odd = detail::embed(p, 2 * p.n, 2, -1);
    auto even = detail::embed(k, 2 * p.n, 2, 0);
    Partition deg = overlay(odd, even);

    std::vector<int> b_embedded;
    for (int x : block) b_embedded.push_back(2 * x - 1);
    std::sort(b_embedded.begin(), b_embedded.end());
    int b_idx = find_block(deg, b_embedded);
    auto depths = depth_map(deg);

    EnvelopingBlocks out;
    std::vector<std::pair<int, std::vector<int>>> lower_sorted;
    for (const auto& kb : k.blocks) {
        std::vector<int> kb_embedded;
        for (int x : kb) kb_embedded.push_back(2 * x);
        bool adjacent = true;
        try {
            merge_blocks(deg, b_embedded, kb_embedded);
        } catch (const NotAdjacent&) {
            adjacent = false;
        }
        if (!adjacent) continue;
        int kb_idx = find_block(deg, kb_embedded);
        if (depths.at(kb_idx) <= depths.at(b_idx)) {
            if (!out.upper.empty()) throw Error("enveloping blocks: upper block not unique");
            out.upper = kb;
        } else {
            lower_sorted.push_back({kb.front(), kb});
        }
    }
    if (out.upper.empty()) throw Error("enveloping blocks: no upper block found");
    std::sort(lower_sorted.begin(), lower_sorted.end());
    for (auto& [key, kb] : lower_sorted) out.lower.push_back(kb);
    return out;
}

}  // namespace spindle
