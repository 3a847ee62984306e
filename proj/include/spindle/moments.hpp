#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "kreweras.hpp"
#include "linalg.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace spindle {

// A measure enters the calculus only through a finite prefix of its moment
// sequence; every identity below is a prefix identity.
struct MomentProfile {
    std::string name;
    std::vector<Rational> moments;  // moments[k-1] = m(k)

    int order() const { return static_cast<int>(moments.size()); }
    const Rational& m(int k) const { return moments.at(k - 1); }
};

enum class CumulantKind { Free, Boolean };

struct CumulantProfile {
    CumulantKind kind = CumulantKind::Free;
    std::vector<Rational> values;  // values[k-1] = c(k) or b(k)

    int order() const { return static_cast<int>(values.size()); }
    const Rational& c(int k) const { return values.at(k - 1); }
};

inline Rational multiplicative_extension(const std::vector<Rational>& seq, const Partition& p) {
    Rational prod(1);
    for (const auto& b : p.blocks) {
        if (b.size() > seq.size())
            throw SequenceTooShort("multiplicative_extension: block of size " +
                                   std::to_string(b.size()) + " exceeds sequence length " +
                                   std::to_string(seq.size()));
        prod *= seq[b.size() - 1];
    }
    return prod;
}

inline PartitionClass lattice_of(CumulantKind kind) {
    return kind == CumulantKind::Free ? PartitionClass::NonCrossing : PartitionClass::Interval;
}

// m(n) = sum over the kind's lattice of the multiplicative extension of the
// cumulants; solved for c(n) by peeling off the full partition.
inline CumulantProfile cumulants_from_moments(const MomentProfile& mu, CumulantKind kind) {
    CumulantProfile out;
    out.kind = kind;
    for (int n = 1; n <= mu.order(); ++n) {
        Rational rest(0);
        for (const auto& p : enumerate_partitions(n, lattice_of(kind))) {
            if (p.num_blocks() == 1) continue;
            rest += multiplicative_extension(out.values, p);
        }
        out.values.push_back(mu.m(n) - rest);
    }
    return out;
}

inline MomentProfile moments_from_cumulants(const CumulantProfile& cp,
                                            const std::string& name = "reconstructed") {
    MomentProfile out;
    out.name = name;
    for (int n = 1; n <= cp.order(); ++n) {
        Rational total(0);
        for (const auto& p : enumerate_partitions(n, lattice_of(cp.kind)))
            total += multiplicative_extension(cp.values, p);
        out.moments.push_back(total);
    }
    return out;
}

inline void require_order(const MomentProfile& mu, int N, const char* where) {
    if (mu.order() < N)
        throw SequenceTooShort(std::string(where) + ": profile '" + mu.name + "' has " +
                               std::to_string(mu.order()) + " moments, need " + std::to_string(N));
}

// c_{mu (x) nu}(n) = sum_{p in NC(n)} c_mu(p) c_nu(K(p)), then invert.
inline MomentProfile free_mult_conv(const MomentProfile& mu, const MomentProfile& nu, int N) {
    require_order(mu, N, "free_mult_conv");
    require_order(nu, N, "free_mult_conv");
    MomentProfile muN{mu.name, {mu.moments.begin(), mu.moments.begin() + N}};
    MomentProfile nuN{nu.name, {nu.moments.begin(), nu.moments.begin() + N}};
    CumulantProfile cmu = cumulants_from_moments(muN, CumulantKind::Free);
    CumulantProfile cnu = cumulants_from_moments(nuN, CumulantKind::Free);
    CumulantProfile conv;
    conv.kind = CumulantKind::Free;
    for (int n = 1; n <= N; ++n) {
        Rational total(0);
        for (const auto& p : enumerate_partitions(n, PartitionClass::NonCrossing))
            total += multiplicative_extension(cmu.values, p) *
                     multiplicative_extension(cnu.values, kreweras(p));
        conv.values.push_back(total);
    }
    return moments_from_cumulants(conv, mu.name + "*" + nu.name);
}

struct BooleanConvReport {
    std::vector<Rational> lhs;  // Boolean cumulants of mu (x) nu
    std::vector<Rational> rhs;  // sum_{p in NC(n)} b_mu(p) b_nu(K(p))
    bool equal = false;
};

inline BooleanConvReport boolean_conv_check(const MomentProfile& mu, const MomentProfile& nu,
                                            int N) {
    require_order(mu, N, "boolean_conv_check");
    require_order(nu, N, "boolean_conv_check");
    BooleanConvReport report;
    MomentProfile prod = free_mult_conv(mu, nu, N);
    report.lhs = cumulants_from_moments(prod, CumulantKind::Boolean).values;
    MomentProfile muN{mu.name, {mu.moments.begin(), mu.moments.begin() + N}};
    MomentProfile nuN{nu.name, {nu.moments.begin(), nu.moments.begin() + N}};
    CumulantProfile bmu = cumulants_from_moments(muN, CumulantKind::Boolean);
    CumulantProfile bnu = cumulants_from_moments(nuN, CumulantKind::Boolean);
    for (int n = 1; n <= N; ++n) {
        Rational total(0);
        for (const auto& p : enumerate_partitions(n, PartitionClass::NonCrossing))
            total += multiplicative_extension(bmu.values, p) *
                     multiplicative_extension(bnu.values, kreweras(p));
        report.rhs.push_back(total);
    }
    report.equal = report.lhs == report.rhs;
    return report;
}

// ---- fixed-point character moments of a finite permutation group ----

using Perm = std::vector<int>;  // perm[i-1] = image of i, 1-based

inline void validate_perm(const Perm& g, int n) {
    if (static_cast<int>(g.size()) != n)
        throw OrderMismatch("permutation acts on " + std::to_string(g.size()) +
                            " points, expected " + std::to_string(n));
    std::vector<char> seen(n + 1, 0);
    for (int x : g) {
        if (x < 1 || x > n || seen[x]) throw Error("not a permutation of [1,n]");
        seen[x] = 1;
    }
}

inline Perm perm_compose(const Perm& f, const Perm& g) {
    Perm out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[g[i] - 1];
    return out;
}

constexpr long kGroupCap = 3628800;  // 10!

inline std::set<Perm> group_closure(const std::vector<Perm>& generators, long cap = kGroupCap) {
    if (generators.empty()) throw Error("group_closure: need at least one generator");
    int n = static_cast<int>(generators[0].size());
    for (const auto& g : generators) validate_perm(g, n);
    Perm id(n);
    for (int i = 0; i < n; ++i) id[i] = i + 1;
    std::set<Perm> elems{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& e : frontier)
            for (const auto& g : generators) {
                Perm h = perm_compose(g, e);
                if (elems.insert(h).second) {
                    if (static_cast<long>(elems.size()) > cap)
                        throw GroupTooLarge("group closure exceeds cap " + std::to_string(cap));
                    next.push_back(std::move(h));
                }
            }
        frontier = std::move(next);
    }
    return elems;
}

inline MomentProfile perm_group_character_moments(const std::vector<Perm>& generators, int K,
                                                  long cap = kGroupCap) {
    std::set<Perm> group = group_closure(generators, cap);
    MomentProfile out;
    out.name = "fixed_point_character";
    Rational size(static_cast<long>(group.size()));
    for (int k = 1; k <= K; ++k) {
        Rational total(0);
        for (const auto& g : group) {
            long fix = 0;
            for (std::size_t i = 0; i < g.size(); ++i)
                if (g[i] == static_cast<int>(i) + 1) ++fix;
            Rational pw(1);
            for (int t = 0; t < k; ++t) pw *= fix;
            total += pw;
        }
        out.moments.push_back(total / size);
    }
    return out;
}

// Hankel positive semidefiniteness of the prefix (m(0)=1 implied); optional
// sanity gate, not applied by default.
inline bool hankel_psd(const MomentProfile& mu) {
    int N = mu.order();
    int r = N / 2;
    std::vector<std::vector<Rational>> H(r + 1, std::vector<Rational>(r + 1));
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= r; ++j) H[i][j] = (i + j == 0) ? Rational(1) : mu.m(i + j);
    return is_positive_semidefinite(H, RationalOps{});
}

}  // namespace spindle
