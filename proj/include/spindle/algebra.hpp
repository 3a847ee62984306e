#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "rational.hpp"
#include "surd.hpp"

namespace spindle {

// Spin data for the star graph of a multi-matrix algebra
// A = M_{m_1} + ... + M_{m_s}. The central vertex a carries spin 1; the
// satellite vertex b_i, joined to a by m_i parallel edges, carries spin
// m_i / sqrt(d) with d = sum of m_i^2. The spin vector is a Perron
// eigenvector of the adjacency matrix with eigenvalue sqrt(d).
struct AlgebraSpec {
    std::string name;
    std::vector<long> blocks;

    AlgebraSpec(std::string nm, std::vector<long> ms)
        : name(std::move(nm)), blocks(std::move(ms)) {
        if (blocks.empty()) throw Error("algebra spec needs at least one block");
        for (long m : blocks)
            if (m < 1) throw Error("algebra spec block sizes must be positive");
    }

    int num_blocks() const { return static_cast<int>(blocks.size()); }

    long dim() const {
        long d = 0;
        for (long m : blocks) d += m * m;
        return d;
    }

    Surd delta() const { return Surd::sqrt_of(dim()); }

    // Spin of a vertex; block 0 names the central vertex a.
    Surd spin(int block) const {
        if (block == 0) return Surd(1);
        long m = blocks.at(static_cast<std::size_t>(block) - 1);
        return Surd::sqrt_of(rat(m * m, dim()));
    }

    // Partition-function weight nu = spin^2.
    Rational z(int block) const {
        if (block == 0) return Rational(1);
        long m = blocks.at(static_cast<std::size_t>(block) - 1);
        return rat(m * m, dim());
    }
};

// One traversal step: edge number idx (1-based) among the m_block parallel
// edges joining a to b_block.
struct Edge {
    int block = 0;
    int idx = 0;

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.block == b.block && a.idx == b.idx;
    }
    friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.block != b.block ? a.block < b.block : a.idx < b.idx;
    }
};

// Closed walk of even length based at a: step 2j-1 walks a -> b_i, step 2j
// walks back, so steps 2j-1 and 2j must use edges in the same block.
using Loop = std::vector<Edge>;

// Vertex reached after j steps of the loop; 0 names a.
inline int vertex_block(const Loop& l, int j) {
    if (j % 2 == 0) return 0;
    return l.at(static_cast<std::size_t>(j) - 1).block;
}

inline void validate_loop(const AlgebraSpec& spec, const Loop& l) {
    if (l.size() % 2 != 0) throw Error("loop has odd length");
    for (std::size_t i = 0; i < l.size(); ++i) {
        const Edge& e = l[i];
        if (e.block < 1 || e.block > spec.num_blocks())
            throw Error("loop edge block out of range");
        if (e.idx < 1 || e.idx > spec.blocks[static_cast<std::size_t>(e.block) - 1])
            throw Error("loop edge index out of range");
        if (i % 2 == 1 && l[i].block != l[i - 1].block)
            throw Error("loop steps 2j-1 and 2j must share a block");
    }
}

inline std::string loop_str(const Loop& l) {
    std::string out = "[";
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (i) out += ",";
        out += "[" + std::to_string(l[i].block) + "," + std::to_string(l[i].idx) + "]";
    }
    return out + "]";
}

// Formal combination of loops of one common length 2*degree.
// Invariant: no explicit zero coefficients.
struct LoopVector {
    int degree = 0;
    std::map<Loop, Surd> terms;

    LoopVector() = default;
    explicit LoopVector(int deg) : degree(deg) {
        if (deg < 0) throw Error("loop vector degree must be nonnegative");
    }

    bool is_zero() const { return terms.empty(); }

    void add(const Loop& l, const Surd& c) {
        if (l.size() != 2 * static_cast<std::size_t>(degree))
            throw DegreeMismatch("loop length does not match vector degree");
        if (c.is_zero()) return;
        auto [it, fresh] = terms.try_emplace(l, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    LoopVector& operator+=(const LoopVector& o) {
        if (degree != o.degree) throw DegreeMismatch("loop vector degrees differ");
        for (const auto& [l, c] : o.terms) add(l, c);
        return *this;
    }
    LoopVector& operator-=(const LoopVector& o) {
        if (degree != o.degree) throw DegreeMismatch("loop vector degrees differ");
        for (const auto& [l, c] : o.terms) add(l, -c);
        return *this;
    }
    LoopVector& operator*=(const Surd& s) {
        if (s.is_zero()) {
            terms.clear();
            return *this;
        }
        for (auto& [l, c] : terms) c = c * s;
        return *this;
    }

    friend LoopVector operator+(LoopVector a, const LoopVector& b) { return a += b; }
    friend LoopVector operator-(LoopVector a, const LoopVector& b) { return a -= b; }
    friend LoopVector operator*(LoopVector a, const Surd& s) { return a *= s; }
    friend LoopVector operator*(const Surd& s, LoopVector a) { return a *= s; }
    friend bool operator==(const LoopVector& a, const LoopVector& b) {
        return a.degree == b.degree && a.terms == b.terms;
    }
    friend bool operator!=(const LoopVector& a, const LoopVector& b) { return !(a == b); }
};

// Coefficient of the empty loop in a degree-0 vector.
inline Surd scalar_value(const LoopVector& v) {
    if (v.degree != 0) throw DegreeMismatch("scalar_value needs a degree-0 vector");
    auto it = v.terms.find(Loop{});
    return it == v.terms.end() ? Surd() : it->second;
}

// Guard rails for full-space enumerations: degree n costs d^n loops.
struct Caps {
    int max_degree = 4;
    long max_dim = 9;
};

// All loops of length 2n in block-major, edge-minor lexicographic order.
inline std::vector<Loop> loop_basis(const AlgebraSpec& spec, int n, const Caps& caps = {}) {
    if (n < 0) throw Error("loop_basis needs a nonnegative degree");
    if (n > caps.max_degree || spec.dim() > caps.max_dim)
        throw CapExceeded("loop_basis cap: degree " + std::to_string(n) + ", dim " +
                          std::to_string(spec.dim()));
    std::vector<std::pair<Edge, Edge>> steps;
    for (int i = 1; i <= spec.num_blocks(); ++i)
        for (int k = 1; k <= spec.blocks[static_cast<std::size_t>(i) - 1]; ++k)
            for (int l = 1; l <= spec.blocks[static_cast<std::size_t>(i) - 1]; ++l)
                steps.push_back({Edge{i, k}, Edge{i, l}});
    std::vector<Loop> out;
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    for (;;) {
        Loop l;
        l.reserve(2 * static_cast<std::size_t>(n));
        for (std::size_t j = 0; j < pick.size(); ++j) {
            l.push_back(steps[pick[j]].first);
            l.push_back(steps[pick[j]].second);
        }
        out.push_back(std::move(l));
        int j = n - 1;
        while (j >= 0 && pick[static_cast<std::size_t>(j)] + 1 == steps.size()) {
            pick[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
        ++pick[static_cast<std::size_t>(j)];
    }
    return out;
}

// Walks of length k starting at a, lexicographic in the edge order.
inline std::vector<Loop> paths_from_base(const AlgebraSpec& spec, int k) {
    std::vector<Loop> out;
    Loop cur;
    auto rec = [&](auto&& self, int at) -> void {
        if (at == k) {
            out.push_back(cur);
            return;
        }
        if (at % 2 == 0) {
            for (int i = 1; i <= spec.num_blocks(); ++i)
                for (int e = 1; e <= spec.blocks[static_cast<std::size_t>(i) - 1]; ++e) {
                    cur.push_back(Edge{i, e});
                    self(self, at + 1);
                    cur.pop_back();
                }
        } else {
            int i = cur.back().block;
            for (int e = 1; e <= spec.blocks[static_cast<std::size_t>(i) - 1]; ++e) {
                cur.push_back(Edge{i, e});
                self(self, at + 1);
                cur.pop_back();
            }
        }
    };
    rec(rec, 0);
    return out;
}

// Identity of the degree-k multiplication: sum over length-k walks p of the
// loop p followed by its reversal, all with coefficient 1.
inline LoopVector identity_element(const AlgebraSpec& spec, int k, const Caps& caps = {}) {
    if (k < 0) throw Error("identity_element needs a nonnegative degree");
    if (k > caps.max_degree)
        throw CapExceeded("identity_element cap: degree " + std::to_string(k));
    LoopVector out(k);
    for (const Loop& p : paths_from_base(spec, k)) {
        Loop l = p;
        l.insert(l.end(), p.rbegin(), p.rend());
        out.add(l, Surd(1));
    }
    return out;
}

inline LoopVector unit_element(const AlgebraSpec& spec) { return identity_element(spec, 1); }

// Degree-1 loop (b_i^k, b_i^l); these multiply as matrix units of M_{m_i}.
inline LoopVector matrix_unit(const AlgebraSpec& spec, int i, int k, int l) {
    if (i < 1 || i > spec.num_blocks()) throw Error("matrix_unit block out of range");
    long m = spec.blocks[static_cast<std::size_t>(i) - 1];
    if (k < 1 || k > m || l < 1 || l > m) throw Error("matrix_unit edge out of range");
    LoopVector out(1);
    out.add(Loop{Edge{i, k}, Edge{i, l}}, Surd(1));
    return out;
}

// Product of degree-n vectors: loops x and y concatenate to a nonzero product
// exactly when the reversed second half of x equals the first half of y, and
// then x . y = (x_1..x_n, y_{n+1}..y_{2n}) with no extra weight.
inline LoopVector mult(const LoopVector& x, const LoopVector& y) {
    if (x.degree != y.degree) throw DegreeMismatch("mult needs equal degrees");
    std::size_t n = static_cast<std::size_t>(x.degree);
    std::map<Loop, std::vector<const std::pair<const Loop, Surd>*>> by_head;
    for (const auto& term : y.terms)
        by_head[Loop(term.first.begin(), term.first.begin() + static_cast<long>(n))]
            .push_back(&term);
    LoopVector out(x.degree);
    for (const auto& [lx, cx] : x.terms) {
        Loop key(lx.rbegin(), lx.rbegin() + static_cast<long>(n));
        auto it = by_head.find(key);
        if (it == by_head.end()) continue;
        for (const auto* ty : it->second) {
            Loop l(lx.begin(), lx.begin() + static_cast<long>(n));
            l.insert(l.end(), ty->first.begin() + static_cast<long>(n), ty->first.end());
            out.add(l, cx * ty->second);
        }
    }
    return out;
}

// Adjoint: reverse every loop. Coefficients here are real, so they are fixed.
inline LoopVector star(const LoopVector& x) {
    LoopVector out(x.degree);
    for (const auto& [l, c] : x.terms) out.add(Loop(l.rbegin(), l.rend()), c);
    return out;
}

// Rotation by one strand pair: (e_1, e_2, e_3, ..., e_2k) -> (e_3, ..., e_2k, e_1, e_2).
inline LoopVector rotate(const LoopVector& x) {
    LoopVector out(x.degree);
    for (const auto& [l, c] : x.terms) {
        if (l.size() < 2) {
            out.add(l, c);
            continue;
        }
        Loop r(l.begin() + 2, l.end());
        r.push_back(l[0]);
        r.push_back(l[1]);
        out.add(r, c);
    }
    return out;
}

enum class TraceSide { Left, Right };

// Normalized Markov trace. A loop (p, q reversed) traces to zero unless
// p = q, and then contributes delta^{-n} times the spin of the midpoint
// vertex u_n. The left closure weights u_n by nu(u_n)/spin(u_n) instead;
// sphericality of the spin eigenvector makes the two sides agree.
inline Surd trace(const AlgebraSpec& spec, const LoopVector& x, TraceSide side) {
    std::size_t n = static_cast<std::size_t>(x.degree);
    long d = spec.dim();
    Rational dn(1);
    for (std::size_t i = 0; i < n; ++i) dn *= Rational(1, d);
    Surd acc;
    for (const auto& [l, c] : x.terms) {
        bool closes = true;
        for (std::size_t i = 0; i < n && closes; ++i)
            if (l[i] != l[2 * n - 1 - i]) closes = false;
        if (!closes) continue;
        int mid = vertex_block(l, static_cast<int>(n));
        Surd w;
        if (side == TraceSide::Right) {
            w = spec.spin(mid);
        } else if (mid == 0) {
            w = Surd(spec.z(0));
        } else {
            long m = spec.blocks[static_cast<std::size_t>(mid) - 1];
            w = Surd(spec.z(mid)) * Surd::sqrt_of(rat(d, m * m));
        }
        acc += c * Surd::sqrt_of(dn) * w;
    }
    return acc;
}

namespace detail {

inline Rational rational_pow(const Rational& base, long e) {
    Rational out(1);
    Rational b = e < 0 ? Rational(1) / base : base;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) out *= b;
    return out;
}

}  // namespace detail

// Boolean concatenation U_{k,m}: glue a degree-k and a degree-m loop into a
// degree-(k+m) loop, weighted by sqrt(spin(u_k(x)) spin(u_m(y)) / spin(u_{k+m}(xy))).
// An even number of the three vertices are satellites, so the weight is the
// square root of a rational.
inline LoopVector concat(const AlgebraSpec& spec, const LoopVector& x, const LoopVector& y) {
    int k = x.degree, m = y.degree;
    LoopVector out(k + m);
    for (const auto& [lx, cx] : x.terms) {
        for (const auto& [ly, cy] : y.terms) {
            Loop l = lx;
            l.insert(l.end(), ly.begin(), ly.end());
            Rational w2(1);
            long fsum = 0;
            auto times_spin = [&](int blk, long e) {
                if (blk == 0) return;
                w2 *= detail::rational_pow(
                    Rational(spec.blocks[static_cast<std::size_t>(blk) - 1]), e);
                fsum += e;
            };
            times_spin(vertex_block(lx, k), 1);
            times_spin(vertex_block(ly, m), 1);
            times_spin(vertex_block(l, k + m), -1);
            if (fsum % 2 != 0) throw Error("internal: unpaired spin weight");
            w2 *= detail::rational_pow(Rational(1, spec.dim()), fsum / 2);
            out.add(l, cx * cy * Surd::sqrt_of(w2));
        }
    }
    return out;
}

// Universal evaluation of the partition tangle T_pi on one input vector per
// block of pi (blocks in lexicographic order). Each choice of one loop per
// block is transported onto the boundary: block B = {j_1 < ... < j_2b} puts
// its loop's u-th edge at position j_t, where u = t - s* + 1 cyclically and
// s* is 1 for odd j_1, else 2, so that odd boundary positions always receive
// odd loop positions. A term survives when the assembled word obeys the loop
// pair rule, with weight
//   prod_B sqrt(spin(u_b(xi_B))) * prod_{B: j_1 even} spin(u_{j_1 - 1}(eta))^{-1}
//     * spin(u_k(eta))^{-1/2},
// where eta is the assembled length-2k word. The quarter powers of spins
// always pair up, so each weight is the square root of a single rational.
inline LoopVector apply_tpi(const AlgebraSpec& spec, const Partition& pi,
                            const std::vector<LoopVector>& inputs) {
    if (pi.n % 2 != 0) throw NotEven("T_pi needs a partition of even order");
    if (!is_noncrossing(pi)) throw NotNonCrossing("T_pi needs a non-crossing partition");
    if (inputs.size() != pi.blocks.size())
        throw DegreeMismatch("T_pi needs one input per block");
    for (std::size_t bi = 0; bi < pi.blocks.size(); ++bi)
        if (pi.blocks[bi].size() != 2 * static_cast<std::size_t>(inputs[bi].degree))
            throw DegreeMismatch("input degree does not match block size");

    int k = pi.n / 2;
    LoopVector out(k);
    std::vector<std::vector<const std::pair<const Loop, Surd>*>> choices;
    for (const auto& v : inputs) {
        choices.emplace_back();
        for (const auto& term : v.terms) choices.back().push_back(&term);
        if (choices.back().empty()) return out;
    }

    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
        Loop eta(static_cast<std::size_t>(pi.n));
        Surd coeff(1);
        for (std::size_t bi = 0; bi < pi.blocks.size(); ++bi) {
            const auto& b = pi.blocks[bi];
            const Loop& xi = choices[bi][pick[bi]]->first;
            coeff = coeff * choices[bi][pick[bi]]->second;
            int m = static_cast<int>(b.size());
            int sstar = b[0] % 2 == 1 ? 1 : 2;
            for (int t = 1; t <= m; ++t) {
                int u = ((t - sstar) % m + m) % m + 1;
                eta[static_cast<std::size_t>(b[static_cast<std::size_t>(t) - 1]) - 1] =
                    xi[static_cast<std::size_t>(u) - 1];
            }
        }
        bool valid = true;
        for (int j = 0; j < pi.n && valid; j += 2)
            if (eta[static_cast<std::size_t>(j)].block !=
                eta[static_cast<std::size_t>(j) + 1].block)
                valid = false;
        if (valid) {
            // Quarter-power exponent of (m_i^2/d) per spec block i.
            std::map<int, long> f;
            long fsum = 0;
            for (std::size_t bi = 0; bi < pi.blocks.size(); ++bi) {
                const auto& b = pi.blocks[bi];
                const Loop& xi = choices[bi][pick[bi]]->first;
                int half = static_cast<int>(b.size()) / 2;
                if (half % 2 == 1) {
                    f[vertex_block(xi, half)] += 1;
                    fsum += 1;
                }
                if (b[0] % 2 == 0) {
                    f[vertex_block(eta, b[0] - 1)] -= 2;
                    fsum -= 2;
                }
            }
            if (k % 2 == 1) {
                f[vertex_block(eta, k)] -= 1;
                fsum -= 1;
            }
            // All spin factors sit at satellite vertices, and the quarter
            // powers pair up: fsum is even, so w2 below is rational.
            if (fsum % 2 != 0) throw Error("internal: unpaired spin weight");
            Rational w2(1);
            for (const auto& [blk, e] : f)
                if (blk != 0 && e != 0)
                    w2 *= detail::rational_pow(
                        Rational(spec.blocks[static_cast<std::size_t>(blk) - 1]), e);
            w2 *= detail::rational_pow(Rational(1, spec.dim()), fsum / 2);
            out.add(eta, coeff * Surd::sqrt_of(w2));
        }
        std::size_t j = pick.size();
        while (j > 0 && pick[j - 1] + 1 == choices[j - 1].size()) pick[--j] = 0;
        if (j == 0) break;
        ++pick[j - 1];
    }
    return out;
}

}  // namespace spindle
