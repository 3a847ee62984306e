#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "spindle/errors.hpp"

namespace spindle {

// Set partition of [1,n]. Canonical form: each block sorted ascending, blocks
// sorted by least element.
struct Partition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    Partition() = default;
    Partition(int order, std::vector<std::vector<int>> bs) : n(order), blocks(std::move(bs)) {
        canonicalize();
        validate();
    }

    void canonicalize() {
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        std::sort(blocks.begin(), blocks.end());
    }

    void validate() const {
        std::vector<char> seen(n + 1, 0);
        int count = 0;
        for (const auto& b : blocks) {
            if (b.empty()) throw Error("Partition: empty block");
            for (int x : b) {
                if (x < 1 || x > n || seen[x]) throw Error("Partition: blocks must partition [1,n]");
                seen[x] = 1;
                ++count;
            }
        }
        if (count != n) throw Error("Partition: blocks must cover [1,n]");
    }

    int num_blocks() const { return static_cast<int>(blocks.size()); }

    int block_index_of(int x) const {
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (std::binary_search(blocks[i].begin(), blocks[i].end(), x))
                return static_cast<int>(i);
        throw Error("Partition: element out of range");
    }

    bool same_block(int x, int y) const { return block_index_of(x) == block_index_of(y); }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.n == b.n && a.blocks == b.blocks;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.blocks < b.blocks;
    }
};

inline Partition full_partition(int n) {
    std::vector<int> b(n);
    std::iota(b.begin(), b.end(), 1);
    return Partition(n, {b});
}

inline Partition discrete_partition(int n) {
    std::vector<std::vector<int>> bs;
    for (int i = 1; i <= n; ++i) bs.push_back({i});
    return Partition(n, bs);
}

// Scan with a stack of open blocks: each element must belong to the block
// opened most recently among the still-open ones.
inline bool is_noncrossing(const Partition& p) {
    std::vector<int> block_of(p.n + 1), remaining(p.blocks.size());
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        remaining[i] = static_cast<int>(p.blocks[i].size());
        for (int x : p.blocks[i]) block_of[x] = static_cast<int>(i);
    }
    std::vector<int> stack;
    std::vector<char> open(p.blocks.size(), 0);
    for (int x = 1; x <= p.n; ++x) {
        int b = block_of[x];
        if (!open[b]) {
            open[b] = 1;
            stack.push_back(b);
        }
        if (stack.back() != b) return false;
        if (--remaining[b] == 0) stack.pop_back();
    }
    return true;
}

inline bool is_interval(const Partition& p) {
    for (const auto& b : p.blocks)
        if (b.back() - b.front() + 1 != static_cast<int>(b.size())) return false;
    return true;
}

inline bool is_even(const Partition& p) {
    for (const auto& b : p.blocks)
        if (b.size() % 2) return false;
    return true;
}

struct PartitionClassFlags {
    bool noncrossing;
    bool interval;
    bool even;
};

inline PartitionClassFlags classify(const Partition& p) {
    return {is_noncrossing(p), is_interval(p), is_even(p)};
}

enum class PartitionClass { All, NonCrossing, Interval, EvenNonCrossing };

namespace detail {

inline void all_partitions_rec(int n, int next, std::vector<std::vector<int>>& blocks,
                               std::vector<Partition>& out) {
    if (next > n) {
        out.emplace_back(n, blocks);
        return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        blocks[i].push_back(next);
        all_partitions_rec(n, next + 1, blocks, out);
        blocks[i].pop_back();
    }
    blocks.push_back({next});
    all_partitions_rec(n, next + 1, blocks, out);
    blocks.pop_back();
}

// Non-crossing partitions of the interval [lo,hi]: the block of lo is any
// subset of [lo,hi] containing lo; the gaps it leaves are independent.
inline std::vector<std::vector<std::vector<int>>> nc_interval(int lo, int hi) {
    std::vector<std::vector<std::vector<int>>> out;
    if (lo > hi) {
        out.push_back({});
        return out;
    }
    int m = hi - lo;  // candidates lo+1..hi
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
        std::vector<int> first = {lo};
        for (int i = 0; i < m; ++i)
            if (mask & (std::size_t(1) << i)) first.push_back(lo + 1 + i);
        std::vector<std::pair<int, int>> gaps;
        for (std::size_t t = 0; t + 1 < first.size(); ++t)
            if (first[t] + 1 <= first[t + 1] - 1) gaps.push_back({first[t] + 1, first[t + 1] - 1});
        if (first.back() + 1 <= hi) gaps.push_back({first.back() + 1, hi});
        std::vector<std::vector<std::vector<int>>> acc = {{first}};
        for (auto [glo, ghi] : gaps) {
            auto sub = nc_interval(glo, ghi);
            std::vector<std::vector<std::vector<int>>> next;
            next.reserve(acc.size() * sub.size());
            for (const auto& a : acc)
                for (const auto& s : sub) {
                    auto merged = a;
                    merged.insert(merged.end(), s.begin(), s.end());
                    next.push_back(std::move(merged));
                }
            acc = std::move(next);
        }
        for (auto& a : acc) out.push_back(std::move(a));
    }
    return out;
}

}  // namespace detail

inline std::vector<Partition> enumerate_partitions(int n, PartitionClass cls) {
    if (n < 1) throw CapExceeded("order must be positive");
    std::vector<Partition> out;
    switch (cls) {
        case PartitionClass::All: {
            if (n > 10) throw CapExceeded("all-partition enumeration capped at n=10");
            std::vector<std::vector<int>> blocks;
            detail::all_partitions_rec(n, 1, blocks, out);
            break;
        }
        case PartitionClass::NonCrossing:
        case PartitionClass::EvenNonCrossing: {
            if (n > 12) throw CapExceeded("non-crossing enumeration capped at n=12");
            for (auto& bs : detail::nc_interval(1, n)) {
                Partition p(n, std::move(bs));
                if (cls == PartitionClass::EvenNonCrossing && !is_even(p)) continue;
                out.push_back(std::move(p));
            }
            break;
        }
        case PartitionClass::Interval: {
            if (n > 16) throw CapExceeded("interval enumeration capped at n=16");
            for (std::size_t mask = 0; mask < (std::size_t(1) << (n - 1)); ++mask) {
                std::vector<std::vector<int>> bs;
                std::vector<int> cur = {1};
                for (int i = 1; i < n; ++i) {
                    if (mask & (std::size_t(1) << (i - 1))) {
                        bs.push_back(cur);
                        cur.clear();
                    }
                    cur.push_back(i + 1);
                }
                bs.push_back(cur);
                out.emplace_back(n, bs);
            }
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Partition meet(const Partition& p, const Partition& q) {
    if (p.n != q.n) throw OrderMismatch("meet of partitions of different orders");
    std::map<std::pair<int, int>, std::vector<int>> cells;
    for (int x = 1; x <= p.n; ++x)
        cells[{p.block_index_of(x), q.block_index_of(x)}].push_back(x);
    std::vector<std::vector<int>> bs;
    for (auto& [k, v] : cells) bs.push_back(v);
    return Partition(p.n, bs);
}

inline Partition join(const Partition& p, const Partition& q) {
    if (p.n != q.n) throw OrderMismatch("join of partitions of different orders");
    std::vector<int> parent(p.n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto* part : {&p, &q})
        for (const auto& b : part->blocks)
            for (std::size_t i = 1; i < b.size(); ++i) unite(b[0], b[i]);
    std::map<int, std::vector<int>> groups;
    for (int x = 1; x <= p.n; ++x) groups[find(x)].push_back(x);
    std::vector<std::vector<int>> bs;
    for (auto& [k, v] : groups) bs.push_back(v);
    return Partition(p.n, bs);
}

inline bool leq(const Partition& p, const Partition& q) {
    if (p.n != q.n) throw OrderMismatch("comparing partitions of different orders");
    for (const auto& b : p.blocks) {
        int target = q.block_index_of(b[0]);
        for (int x : b)
            if (q.block_index_of(x) != target) return false;
    }
    return true;
}

// Partition of a support set S inside [1,n].
struct PartialPartition {
    int n = 0;
    std::vector<int> support;
    std::vector<std::vector<int>> blocks;

    PartialPartition() = default;
    PartialPartition(int order, std::vector<std::vector<int>> bs) : n(order), blocks(std::move(bs)) {
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        std::sort(this->blocks.begin(), this->blocks.end());
        for (const auto& b : blocks) {
            if (b.empty()) throw Error("PartialPartition: empty block");
            support.insert(support.end(), b.begin(), b.end());
        }
        std::sort(support.begin(), support.end());
        for (std::size_t i = 0; i + 1 < support.size(); ++i)
            if (support[i] == support[i + 1]) throw Error("PartialPartition: overlapping blocks");
        if (!support.empty() && (support.front() < 1 || support.back() > n))
            throw Error("PartialPartition: support outside [1,n]");
    }

    std::vector<int> complement() const {
        std::vector<int> out;
        std::size_t idx = 0;
        for (int x = 1; x <= n; ++x) {
            if (idx < support.size() && support[idx] == x) ++idx;
            else out.push_back(x);
        }
        return out;
    }

    friend bool operator==(const PartialPartition& a, const PartialPartition& b) {
        return a.n == b.n && a.blocks == b.blocks;
    }
};

// Overlay of two partial partitions with disjoint supports covering [1,n].
inline Partition overlay(const PartialPartition& a, const PartialPartition& b) {
    if (a.n != b.n) throw OrderMismatch("overlay of different ambient orders");
    std::vector<std::vector<int>> bs = a.blocks;
    bs.insert(bs.end(), b.blocks.begin(), b.blocks.end());
    return Partition(a.n, bs);
}

// Non-crossing as a partition of the support, order inherited from [1,n].
inline bool is_noncrossing(const PartialPartition& pp) {
    if (pp.support.empty()) return true;
    std::map<int, int> compress;
    for (std::size_t i = 0; i < pp.support.size(); ++i)
        compress[pp.support[i]] = static_cast<int>(i) + 1;
    std::vector<std::vector<int>> bs;
    for (const auto& b : pp.blocks) {
        std::vector<int> nb;
        for (int x : b) nb.push_back(compress[x]);
        bs.push_back(nb);
    }
    return is_noncrossing(Partition(static_cast<int>(pp.support.size()), bs));
}

inline std::string partition_str(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        out += '{';
        for (std::size_t j = 0; j < p.blocks[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(p.blocks[i][j]);
        }
        out += '}';
        if (i + 1 < p.blocks.size()) out += ',';
    }
    return out;
}

namespace detail {

inline std::vector<std::vector<int>> parse_block_list(const std::string& text, int& max_elt) {
    std::vector<std::vector<int>> blocks;
    max_elt = 0;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '{') throw SyntaxError(1, static_cast<int>(i) + 1, "'{'");
        ++i;
        std::vector<int> block;
        skip_ws();
        while (i < text.size() && text[i] != '}') {
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            if (i == start) throw SyntaxError(1, static_cast<int>(i) + 1, "integer");
            int v = std::stoi(text.substr(start, i - start));
            block.push_back(v);
            max_elt = std::max(max_elt, v);
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
        }
        if (i >= text.size()) throw SyntaxError(1, static_cast<int>(i) + 1, "'}'");
        ++i;  // '}'
        if (!block.empty()) blocks.push_back(block);
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ',') throw SyntaxError(1, static_cast<int>(i) + 1, "',' between blocks");
            ++i;
            skip_ws();
        }
    }
    return blocks;
}

}  // namespace detail

// Format: {1,3,4},{2},{5,6}. Order defaults to the largest element.
inline Partition parse_partition(const std::string& text, int n = 0) {
    int max_elt = 0;
    auto blocks = detail::parse_block_list(text, max_elt);
    if (n == 0) n = max_elt;
    return Partition(n, blocks);
}

// Format: {1,12},{4,5,8,9}|S={1,4,5,8,9,12}. Order defaults to max(S).
inline std::string partial_partition_str(const PartialPartition& pp) {
    std::string out;
    for (std::size_t i = 0; i < pp.blocks.size(); ++i) {
        out += '{';
        for (std::size_t j = 0; j < pp.blocks[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(pp.blocks[i][j]);
        }
        out += '}';
        if (i + 1 < pp.blocks.size()) out += ',';
    }
    out += "|S={";
    for (std::size_t i = 0; i < pp.support.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(pp.support[i]);
    }
    out += '}';
    return out;
}

inline PartialPartition parse_partial_partition(const std::string& text, int n = 0) {
    auto bar = text.find('|');
    std::string block_part = bar == std::string::npos ? text : text.substr(0, bar);
    int max_elt = 0;
    auto blocks = detail::parse_block_list(block_part, max_elt);
    std::vector<int> support;
    for (const auto& b : blocks) support.insert(support.end(), b.begin(), b.end());
    std::sort(support.begin(), support.end());
    if (bar != std::string::npos) {
        std::string s_part = text.substr(bar + 1);
        auto eq = s_part.find('=');
        if (s_part.rfind("S", 0) != 0 || eq == std::string::npos)
            throw SyntaxError(1, static_cast<int>(bar) + 2, "S={...}");
        int s_max = 0;
        auto s_blocks = detail::parse_block_list(s_part.substr(eq + 1), s_max);
        std::vector<int> declared;
        for (const auto& b : s_blocks) declared.insert(declared.end(), b.begin(), b.end());
        std::sort(declared.begin(), declared.end());
        if (declared != support)
            throw Error("partial partition: declared support differs from block union");
        max_elt = std::max(max_elt, s_max);
    }
    if (n == 0) n = max_elt;
    return PartialPartition(n, blocks);
}

}  // namespace spindle
