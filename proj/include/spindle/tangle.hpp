#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "kreweras.hpp"
#include "partition.hpp"

namespace spindle {

// Boundary point of a disk: disk 0 is the outer boundary, disks 1..r are the
// inner disks; idx runs clockwise from 1, starting after the marked point.
struct Endpoint {
    int disk = 0;
    int idx = 0;
    friend bool operator==(const Endpoint& a, const Endpoint& b) {
        return a.disk == b.disk && a.idx == b.idx;
    }
    friend bool operator<(const Endpoint& a, const Endpoint& b) {
        return a.disk != b.disk ? a.disk < b.disk : a.idx < b.idx;
    }
};

using String = std::pair<Endpoint, Endpoint>;

// A planar tangle up to isotopy: the combinatorial data (boundary point counts,
// the string matching, closed-circle count) determines everything. Planarity is
// guaranteed by the constructors, never re-checked generically.
struct Tangle {
    int outer = 0;              // number of outer boundary points, always even
    std::vector<int> inner;     // boundary point counts of the inner disks
    std::vector<String> strings;
    long circles = 0;

    Tangle() = default;
    Tangle(int outer_pts, std::vector<int> inner_pts, std::vector<String> ss, long circ = 0)
        : outer(outer_pts), inner(std::move(inner_pts)), strings(std::move(ss)), circles(circ) {
        canonicalize();
        validate();
    }

    int points_of(int disk) const {
        return disk == 0 ? outer : inner.at(static_cast<std::size_t>(disk) - 1);
    }
    int num_disks() const { return static_cast<int>(inner.size()); }

    void canonicalize() {
        for (auto& s : strings)
            if (s.second < s.first) std::swap(s.first, s.second);
        std::sort(strings.begin(), strings.end());
    }

    void validate() const {
        if (outer % 2 != 0 || outer < 0) throw Error("Tangle: outer point count must be even");
        for (int m : inner)
            if (m <= 0 || m % 2 != 0) throw Error("Tangle: inner disk point counts must be even");
        std::map<Endpoint, int> seen;
        for (const auto& s : strings) {
            for (const Endpoint& e : {s.first, s.second}) {
                if (e.disk < 0 || e.disk > num_disks() || e.idx < 1 || e.idx > points_of(e.disk))
                    throw Error("Tangle: string endpoint out of range");
                if (seen[e]++) throw Error("Tangle: endpoint used twice");
            }
        }
        long total = outer + std::accumulate(inner.begin(), inner.end(), 0L);
        if (static_cast<long>(strings.size()) * 2 != total)
            throw Error("Tangle: strings must form a perfect matching");
        if (circles < 0) throw Error("Tangle: negative circle count");
    }

    friend bool operator==(const Tangle& a, const Tangle& b) {
        return a.outer == b.outer && a.inner == b.inner && a.strings == b.strings &&
               a.circles == b.circles;
    }
    friend bool operator!=(const Tangle& a, const Tangle& b) { return !(a == b); }
};

// ---- generator tangles ----

inline Tangle s_tangle(int k) {
    std::vector<String> ss;
    for (int i = 1; i <= k; ++i) ss.push_back({{0, 2 * i - 1}, {0, 2 * i}});
    return Tangle(2 * k, {}, std::move(ss));
}

inline Tangle u_tangle(int k) {
    std::vector<String> ss;
    for (int i = 1; i <= k; ++i) ss.push_back({{0, 2 * i}, {0, 2 * i % (2 * k) + 1}});
    return Tangle(2 * k, {}, std::move(ss));
}

// Temperley-Lieb diagram of a non-crossing pair partition.
inline Tangle tl_tangle(const Partition& rho) {
    if (!is_noncrossing(rho)) throw NotNonCrossing("tl_tangle: partition crosses");
    std::vector<String> ss;
    for (const auto& b : rho.blocks) {
        if (b.size() != 2) throw Error("tl_tangle: not a pair partition");
        ss.push_back({{0, b[0]}, {0, b[1]}});
    }
    return Tangle(rho.n, {}, std::move(ss));
}

inline Partition rainbow_pairing(int k, int i) {
    // pairs {i,i+1} and {2k-i,2k+1-i}, everything else matched as the rainbow j ~ 2k+1-j
    std::vector<std::vector<int>> blocks{{i, i + 1}, {2 * k - i, 2 * k + 1 - i}};
    for (int j = 1; j <= k; ++j)
        if (j != i && j != i + 1) blocks.push_back({j, 2 * k + 1 - j});
    return Partition(2 * k, blocks);
}

// Diagram underlying the Jones projection e_i in degree k (coefficient handled
// at evaluation time).
inline Tangle jones_tangle(int k, int i) {
    if (i < 1 || i >= k) throw Error("jones_tangle: need 1 <= i < k");
    return tl_tangle(rainbow_pairing(k, i));
}

inline Tangle mult_tangle(int k) {
    std::vector<String> ss;
    for (int j = 1; j <= k; ++j) {
        ss.push_back({{0, j}, {1, j}});
        ss.push_back({{1, k + j}, {2, k + 1 - j}});
        ss.push_back({{2, k + j}, {0, k + j}});
    }
    return Tangle(2 * k, {2 * k, 2 * k}, std::move(ss));
}

// Side-by-side embedding P_k (x) P_m -> P_{k+m}.
inline Tangle juxtapose_tangle(int k, int m) {
    std::vector<String> ss;
    for (int t = 1; t <= 2 * k; ++t) ss.push_back({{0, t}, {1, t}});
    for (int t = 1; t <= 2 * m; ++t) ss.push_back({{0, 2 * k + t}, {2, t}});
    return Tangle(2 * (k + m), {2 * k, 2 * m}, std::move(ss));
}

inline Tangle trl_tangle(int k) {
    std::vector<String> ss;
    for (int j = 1; j <= k; ++j) ss.push_back({{1, j}, {1, 2 * k + 1 - j}});
    return Tangle(0, {2 * k}, std::move(ss));
}

inline Tangle trr_tangle(int k) {
    std::vector<String> ss;
    for (int j = 1; j <= k; ++j) ss.push_back({{1, k + j}, {1, k + 1 - j}});
    return Tangle(0, {2 * k}, std::move(ss));
}

// Rotation by one strand pair: output point t reads the input at t+2.
inline Tangle rot_tangle(int k) {
    std::vector<String> ss;
    for (int t = 1; t <= 2 * k; ++t) ss.push_back({{0, t}, {1, (t + 1) % (2 * k) + 1}});
    return Tangle(2 * k, {2 * k}, std::move(ss));
}

// ---- T_pi and its inverse ----

namespace detail {

// Index (1-based) of the smallest odd element of a sorted block. Every block of
// an even non-crossing partition has one: the gap between consecutive same-parity
// elements would need an odd number of points covered by even blocks.
inline int first_odd_index(const std::vector<int>& b) {
    int best = -1, pos = -1;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] % 2 == 1 && (best < 0 || b[i] < best)) {
            best = b[i];
            pos = static_cast<int>(i) + 1;
        }
    if (pos < 0) throw Error("block without odd element");
    return pos;
}

}  // namespace detail

// The irreducible tangle of an even non-crossing partition: one inner disk per
// block (lex order), disk point 1 tied to the block's smallest odd outer point.
inline Tangle t_pi(const Partition& pi) {
    if (!is_even(pi)) throw NotEven("t_pi: partition has odd blocks");
    if (!is_noncrossing(pi)) throw NotNonCrossing("t_pi: partition crosses");
    std::vector<int> inner;
    std::vector<String> ss;
    for (std::size_t bi = 0; bi < pi.blocks.size(); ++bi) {
        const auto& b = pi.blocks[bi];
        int m = static_cast<int>(b.size());
        int s = detail::first_odd_index(b);
        inner.push_back(m);
        for (int u = 1; u <= m; ++u)
            ss.push_back({{0, b[(s - 1 + u - 1) % m]}, {static_cast<int>(bi) + 1, u}});
    }
    return Tangle(pi.n, std::move(inner), std::move(ss));
}

inline Tangle identity_tangle(int k) { return t_pi(full_partition(2 * k)); }

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline int endpoint_id(const Tangle& t, const Endpoint& e) {
    int id = 0;
    for (int d = 0; d < e.disk; ++d) id += t.points_of(d);
    return id + e.idx - 1;
}

inline UnionFind component_structure(const Tangle& t) {
    int total = t.outer;
    for (int m : t.inner) total += m;
    UnionFind uf(total);
    for (const auto& s : t.strings)
        uf.unite(endpoint_id(t, s.first), endpoint_id(t, s.second));
    int base = t.outer;
    for (int m : t.inner) {
        for (int u = 1; u < m; ++u) uf.unite(base, base + u);
        base += m;
    }
    return uf;
}

inline void require_connected(const Tangle& t, const char* where) {
    if (t.circles > 0) throw NotConnected(std::string(where) + ": tangle has closed circles");
    if (t.outer == 0 && !t.inner.empty())
        throw NotConnected(std::string(where) + ": no outer boundary points");
    auto uf = component_structure(t);
    int base = t.outer;
    for (int m : t.inner) {
        bool reached = false;
        for (int o = 0; o < t.outer && !reached; ++o)
            reached = uf.find(o) == uf.find(base);
        if (!reached)
            throw NotConnected(std::string(where) + ": inner disk not linked to the boundary");
        base += m;
    }
}

}  // namespace detail

inline Partition pi_of(const Tangle& t) {
    detail::require_connected(t, "pi_of");
    auto uf = detail::component_structure(t);
    std::map<int, std::vector<int>> fibers;
    for (int o = 0; o < t.outer; ++o) fibers[uf.find(o)].push_back(o + 1);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, pts] : fibers) blocks.push_back(std::move(pts));
    return Partition(t.outer, std::move(blocks));
}

// ---- regions and shading ----

// Boundary interval immediately clockwise of point idx on a disk; idx = point
// count refers to the interval containing the marked point.
struct RegionStructure {
    std::vector<std::vector<Endpoint>> regions;      // intervals, grouped
    std::map<std::pair<int, int>, int> region_of;    // (disk, interval idx) -> region id
    std::vector<bool> shaded;                        // per region
};

inline RegionStructure regions_of(const Tangle& t) {
    detail::require_connected(t, "regions_of");
    int total = 0;
    std::vector<int> offset(t.num_disks() + 1, 0);
    for (int d = 0; d <= t.num_disks(); ++d) {
        offset[d] = total;
        total += t.points_of(d);
    }
    auto interval_id = [&](int disk, int idx) { return offset[disk] + idx - 1; };
    detail::UnionFind uf(std::max(total, 1));
    auto prev = [&](int disk, int idx) { return idx > 1 ? idx - 1 : t.points_of(disk); };
    for (const auto& s : t.strings) {
        const Endpoint& a = s.first;   // departing
        const Endpoint& b = s.second;  // arriving
        int dep_left = a.disk == 0 ? interval_id(0, a.idx) : interval_id(a.disk, prev(a.disk, a.idx));
        int dep_right = a.disk == 0 ? interval_id(0, prev(0, a.idx)) : interval_id(a.disk, a.idx);
        int arr_left = b.disk == 0 ? interval_id(0, prev(0, b.idx)) : interval_id(b.disk, b.idx);
        int arr_right = b.disk == 0 ? interval_id(0, b.idx) : interval_id(b.disk, prev(b.disk, b.idx));
        uf.unite(dep_left, arr_left);
        uf.unite(dep_right, arr_right);
    }
    RegionStructure rs;
    std::map<int, int> root_to_region;
    for (int d = 0; d <= t.num_disks(); ++d) {
        for (int idx = 1; idx <= t.points_of(d); ++idx) {
            int root = uf.find(interval_id(d, idx));
            auto [it, fresh] = root_to_region.try_emplace(root, static_cast<int>(rs.regions.size()));
            if (fresh) {
                rs.regions.emplace_back();
                rs.shaded.push_back(idx % 2 == 1);
            } else if (rs.shaded[it->second] != (idx % 2 == 1)) {
                throw Error("regions_of: inconsistent shading parity");
            }
            rs.regions[it->second].push_back({d, idx});
            rs.region_of[{d, idx}] = it->second;
        }
    }
    return rs;
}

inline Partition shading_partition(const Tangle& t) {
    RegionStructure rs = regions_of(t);
    std::map<int, std::vector<int>> fibers;
    for (int p = 1; p <= t.outer; ++p) {
        int idx = p % 2 == 1 ? p : p - 1;  // the shaded interval beside p
        fibers[rs.region_of.at({0, idx})].push_back(p);
    }
    std::vector<std::vector<int>> blocks;
    for (auto& [r, pts] : fibers) blocks.push_back(std::move(pts));
    return Partition(t.outer, std::move(blocks));
}

// ---- composition ----

// Insert s into inner disk `disk` (1-based) of t. The surviving disks of t keep
// their relative order and s's disks are appended after them.
inline Tangle compose(const Tangle& t, int disk, const Tangle& s) {
    if (disk < 1 || disk > t.num_disks()) throw Error("compose: no such inner disk");
    if (t.inner[disk - 1] != s.outer)
        throw DegreeMismatch("compose: disk has " + std::to_string(t.inner[disk - 1]) +
                             " points, insert has " + std::to_string(s.outer));
    int r = t.num_disks();
    auto map_t = [&](const Endpoint& e) -> Endpoint {
        return {e.disk < disk ? e.disk : e.disk - 1, e.idx};
    };
    auto map_s = [&](const Endpoint& e) -> Endpoint { return {r - 1 + e.disk, e.idx}; };
    std::vector<int> inner;
    for (int d = 1; d <= r; ++d)
        if (d != disk) inner.push_back(t.inner[d - 1]);
    for (int m : s.inner) inner.push_back(m);

    // Seam ports: t's point (disk,u) is glued to s's outer point u. Every port
    // carries exactly one t-string end and one s-string end.
    std::vector<Endpoint> t_far(s.outer + 1), s_far(s.outer + 1);
    std::vector<String> out;
    for (const auto& str : t.strings) {
        bool p1 = str.first.disk == disk, p2 = str.second.disk == disk;
        if (p1) t_far[str.first.idx] = str.second;
        if (p2) t_far[str.second.idx] = str.first;
        if (!p1 && !p2) out.push_back({map_t(str.first), map_t(str.second)});
    }
    for (const auto& str : s.strings) {
        bool p1 = str.first.disk == 0, p2 = str.second.disk == 0;
        if (p1) s_far[str.first.idx] = str.second;
        if (p2) s_far[str.second.idx] = str.first;
        if (!p1 && !p2) out.push_back({map_s(str.first), map_s(str.second)});
    }

    auto is_port = [&](int side, const Endpoint& e) {
        return side == 0 ? e.disk == disk : e.disk == 0;
    };
    long circles = t.circles + s.circles;
    std::vector<char> visited(s.outer + 1, 0);
    // Open chains: start from a port whose string on one side leaves the seam,
    // then alternate t-string / s-string until the other open end.
    for (int p = 1; p <= s.outer; ++p) {
        if (visited[p]) continue;
        for (int side = 0; side < 2; ++side) {
            const Endpoint& far = side == 0 ? t_far[p] : s_far[p];
            if (is_port(side, far)) continue;
            Endpoint head = side == 0 ? map_t(far) : map_s(far);
            int q = p, via = side;
            Endpoint tail;
            for (;;) {
                visited[q] = 1;
                int leave = 1 - via;
                const Endpoint& nxt = leave == 0 ? t_far[q] : s_far[q];
                if (!is_port(leave, nxt)) {
                    tail = leave == 0 ? map_t(nxt) : map_s(nxt);
                    break;
                }
                q = nxt.idx;
                via = leave;
            }
            out.push_back({head, tail});
            break;
        }
    }
    // Remaining ports sit on chains closed through the seam.
    for (int p = 1; p <= s.outer; ++p) {
        if (visited[p]) continue;
        ++circles;
        int q = p, via = 0;
        do {
            visited[q] = 1;
            int leave = 1 - via;
            const Endpoint& nxt = leave == 0 ? t_far[q] : s_far[q];
            q = nxt.idx;
            via = leave;
        } while (!(q == p && via == 0));
    }
    return Tangle(t.outer, std::move(inner), std::move(out), circles);
}

// Simultaneous composition at every inner disk; the result's disks are the
// inserted tangles' disks in slot order.
inline Tangle multi_compose(const Tangle& t, const std::vector<Tangle>& xs) {
    if (static_cast<int>(xs.size()) != t.num_disks())
        throw DegreeMismatch("multi_compose: need one tangle per inner disk");
    Tangle acc = t;
    for (const auto& x : xs) acc = compose(acc, 1, x);
    return acc;
}

// ---- involution ----

inline Tangle involution(const Tangle& t) {
    auto flip = [&](const Endpoint& e) -> Endpoint {
        int m = t.points_of(e.disk);
        return {e.disk, m + 1 - e.idx};
    };
    std::vector<String> ss;
    for (const auto& s : t.strings) ss.push_back({flip(s.first), flip(s.second)});
    return Tangle(t.outer, t.inner, std::move(ss), t.circles);
}

// ---- free composition ----

inline bool is_free_pair(const Tangle& t, const Tangle& t2) {
    if (t.outer != t2.outer) throw DegreeMismatch("is_free_pair: outer degrees differ");
    Partition pi = pi_of(t), pi2 = pi_of(t2);
    return leq(pi2, nested_kreweras(pi));
}

inline Tangle free_compose(const Tangle& t, const Tangle& t2) {
    if (!is_free_pair(t, t2)) throw NotFree("free_compose: Kreweras criterion fails");
    auto first_pos = [](int j) { return 2 * j - j % 2; };
    auto second_pos = [](int j) { return 2 * j - 1 + j % 2; };
    int shift = t.num_disks();
    std::vector<int> inner = t.inner;
    inner.insert(inner.end(), t2.inner.begin(), t2.inner.end());
    std::vector<String> ss;
    auto push_mapped = [&ss](const Tangle& src, auto outer_map, int disk_shift) {
        for (const auto& s : src.strings) {
            auto map_ep = [&](const Endpoint& e) -> Endpoint {
                return e.disk == 0 ? Endpoint{0, outer_map(e.idx)}
                                   : Endpoint{e.disk + disk_shift, e.idx};
            };
            ss.push_back({map_ep(s.first), map_ep(s.second)});
        }
    };
    push_mapped(t, first_pos, 0);
    push_mapped(t2, second_pos, shift);
    return Tangle(2 * t.outer, std::move(inner), std::move(ss), t.circles + t2.circles);
}

inline std::pair<Tangle, Tangle> reduced_pair(const Partition& pi) {
    if (pi.n % 2 != 0) throw OddOrder("reduced_pair: order must be even");
    if (!leq(pair_partition_shifted(pi.n), pi))
        throw PrecedenceViolation("reduced_pair: partition is not above the shifted pairing");
    return {t_pi(pi), t_pi(nested_kreweras(pi))};
}

// ---- irreducible factorization ----

struct Factorization {
    Partition pi;
    std::vector<Tangle> factors;
};

inline Factorization irreducible_factorization(const Tangle& t) {
    Partition pi = pi_of(t);
    auto uf = detail::component_structure(t);
    Factorization out{pi, {}};
    for (const auto& b : pi.blocks) {
        int root = uf.find(b[0] - 1);
        int m = static_cast<int>(b.size());
        int s = detail::first_odd_index(b);
        std::map<int, int> outer_relabel;  // old outer point -> factor point
        for (int u = 1; u <= m; ++u) outer_relabel[b[(s - 1 + u - 1) % m]] = u;
        std::map<int, int> disk_relabel;
        std::vector<int> inner;
        int base = t.outer;
        for (int d = 1; d <= t.num_disks(); ++d) {
            if (uf.find(base) == root) {
                disk_relabel[d] = static_cast<int>(inner.size()) + 1;
                inner.push_back(t.inner[d - 1]);
            }
            base += t.inner[d - 1];
        }
        std::vector<String> ss;
        for (const auto& str : t.strings) {
            if (uf.find(detail::endpoint_id(t, str.first)) != root) continue;
            auto map_ep = [&](const Endpoint& e) -> Endpoint {
                return e.disk == 0 ? Endpoint{0, outer_relabel.at(e.idx)}
                                   : Endpoint{disk_relabel.at(e.disk), e.idx};
            };
            ss.push_back({map_ep(str.first), map_ep(str.second)});
        }
        out.factors.emplace_back(m, std::move(inner), std::move(ss));
    }
    return out;
}

// ---- interleaving form of a reduced pair ----

struct InterleavingSlot {
    int degree = 0;        // half the disk point count
    bool from_first = false;  // true: (Id, S-side); false: (U-side, Id)
};

struct InterleavingForm {
    Tangle r;
    std::vector<InterleavingSlot> slots;
};

// Surgery on the free composition: erase the outer pairs (4i-1,4i), tie their
// inner endpoints together, and advance the marked points of the second
// tangle's disks by one position so that composing U there reproduces the first
// tangle exactly (and Id there, with S on the other side, reproduces the second).
inline InterleavingForm interleaving_form(const Tangle& t, const Tangle& t2) {
    Partition pi = pi_of(t);
    if (pi.n % 2 != 0 || !leq(pair_partition_shifted(pi.n), pi) || t != t_pi(pi) ||
        t2 != t_pi(nested_kreweras(pi)))
        throw NotReduced("interleaving_form: pair is not reduced");
    Tangle f = free_compose(t, t2);
    int two_k = t.outer;
    int first_disks = t.num_disks();
    auto shift_second = [&](const Endpoint& e) -> Endpoint {
        if (e.disk <= first_disks) return e;
        int m = f.inner[e.disk - 1];
        return {e.disk, e.idx % m + 1};
    };
    std::map<int, Endpoint> inner_end;  // outer position in f -> inner endpoint
    for (const auto& s : f.strings) {
        // every string of a T_pi free composition joins the outer boundary to a disk
        const Endpoint& o = s.first.disk == 0 ? s.first : s.second;
        const Endpoint& in = s.first.disk == 0 ? s.second : s.first;
        inner_end[o.idx] = shift_second(in);
    }
    std::vector<String> ss;
    for (int p = 1; p <= 2 * two_k; ++p) {
        int rem = p % 4;
        if (rem == 1 || rem == 2)
            ss.push_back({{0, (p / 4) * 2 + rem}, inner_end.at(p)});
    }
    for (int i = 1; i <= two_k / 2; ++i)
        ss.push_back({inner_end.at(4 * i - 1), inner_end.at(4 * i)});
    InterleavingForm out{Tangle(two_k, f.inner, std::move(ss)), {}};
    for (int d = 0; d < f.num_disks(); ++d)
        out.slots.push_back({f.inner[d] / 2, d < first_disks});
    return out;
}

// ---- fattening ----

// Doubles each point of a non-crossing partition (given in the cyclic boundary
// order) and draws the block boundary lines, yielding a TL diagram.
inline Tangle fatten(const Partition& p) {
    if (!is_noncrossing(p)) throw NotNonCrossing("fatten: partition crosses");
    std::vector<String> ss;
    for (const auto& b : p.blocks) {
        int m = static_cast<int>(b.size());
        for (int i = 0; i < m; ++i)
            ss.push_back({{0, 2 * b[i]}, {0, 2 * b[(i + 1) % m] - 1}});
    }
    return Tangle(2 * p.n, {}, std::move(ss));
}

// ---- disk-relabelling isomorphism ----

inline bool tangles_isomorphic(const Tangle& a, const Tangle& b) {
    if (a.outer != b.outer || a.circles != b.circles || a.num_disks() != b.num_disks())
        return false;
    std::vector<int> sa = a.inner, sb = b.inner;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    int r = a.num_disks();
    std::vector<int> perm(r + 1, 0);  // a-disk -> b-disk
    std::vector<char> taken(r + 1, 0);
    std::function<bool(int)> place = [&](int d) -> bool {
        if (d > r) {
            std::vector<String> ss;
            for (const auto& s : a.strings) {
                auto map_ep = [&](const Endpoint& e) -> Endpoint {
                    return e.disk == 0 ? e : Endpoint{perm[e.disk], e.idx};
                };
                ss.push_back({map_ep(s.first), map_ep(s.second)});
            };
            Tangle mapped(a.outer, b.inner, std::move(ss), a.circles);
            return mapped == b;
        }
        for (int c = 1; c <= r; ++c) {
            if (taken[c] || a.inner[d - 1] != b.inner[c - 1]) continue;
            taken[c] = 1;
            perm[d] = c;
            if (place(d + 1)) return true;
            taken[c] = 0;
        }
        return false;
    };
    return place(1);
}

}  // namespace spindle
