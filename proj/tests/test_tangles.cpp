#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "spindle/tangle.hpp"
#include "spindle/tangle_expr.hpp"

using namespace spindle;

namespace {

std::vector<Partition> even_nc(int two_k) {
    return enumerate_partitions(two_k, PartitionClass::EvenNonCrossing);
}

std::vector<Partition> above_pairing(int two_k) {
    std::vector<Partition> out;
    Partition base = pair_partition_shifted(two_k);
    for (auto& p : even_nc(two_k))
        if (leq(base, p)) out.push_back(p);
    return out;
}

// Blocks {2b-1, 2b} for b in each block of p.
Partition doubled(const Partition& p) {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks) {
        std::vector<int> nb;
        for (int x : b) {
            nb.push_back(2 * x - 1);
            nb.push_back(2 * x);
        }
        blocks.push_back(nb);
    }
    return Partition(2 * p.n, blocks);
}

// Boundary partition of the free composition: pi through f, pi2 through ft.
Partition interleaved(const Partition& pi, const Partition& pi2) {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : pi.blocks) {
        std::vector<int> nb;
        for (int x : b) nb.push_back(doubling_f(x));
        blocks.push_back(nb);
    }
    for (const auto& b : pi2.blocks) {
        std::vector<int> nb;
        for (int x : b) nb.push_back(doubling_ft(x));
        blocks.push_back(nb);
    }
    return Partition(2 * pi.n, blocks);
}

// pi with block bi replaced by pi2 transported along the cyclic order of the
// block starting at its smallest odd element.
Partition substituted(const Partition& pi, int bi, const Partition& pi2) {
    const auto& b = pi.blocks[bi];
    int m = static_cast<int>(b.size());
    int s = 0;
    for (int i = 0; i < m; ++i)
        if (b[i] % 2 == 1) {
            s = i;
            break;
        }
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < static_cast<int>(pi.blocks.size()); ++i)
        if (i != bi) blocks.push_back(pi.blocks[i]);
    for (const auto& nb : pi2.blocks) {
        std::vector<int> tb;
        for (int u : nb) tb.push_back(b[(s + u - 1) % m]);
        blocks.push_back(tb);
    }
    return Partition(pi.n, blocks);
}

Partition id_pairing(int k) {
    std::vector<std::vector<int>> blocks;
    for (int j = 1; j <= k; ++j) blocks.push_back({j, 2 * k + 1 - j});
    return Partition(2 * k, blocks);
}

Tangle prod(const Tangle& x, const Tangle& y) {
    return multi_compose(mult_tangle(x.outer / 2), {x, y});
}

long catalan(int n) {
    long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

}  // namespace

TEST_CASE("generator tangle boundary partitions") {
    for (int k = 1; k <= 4; ++k) {
        REQUIRE(pi_of(s_tangle(k)) == pair_partition_aligned(2 * k));
        REQUIRE(pi_of(u_tangle(k)) == pair_partition_shifted(2 * k));
        REQUIRE(pi_of(mult_tangle(k)) == full_partition(2 * k));
        REQUIRE(pi_of(rot_tangle(k)) == full_partition(2 * k));
    }
    REQUIRE(pi_of(juxtapose_tangle(2, 1)) == Partition(6, {{1, 2, 3, 4}, {5, 6}}));
    REQUIRE_THROWS_AS(pi_of(trl_tangle(2)), NotConnected);
    REQUIRE_THROWS_AS(pi_of(trr_tangle(1)), NotConnected);
}

TEST_CASE("tangle validation") {
    REQUIRE_THROWS_AS(Tangle(3, {}, {}), Error);
    REQUIRE_THROWS_AS(Tangle(2, {3}, {}), Error);
    REQUIRE_THROWS_AS(Tangle(2, {}, {{{0, 1}, {0, 3}}}), Error);
    REQUIRE_THROWS_AS(Tangle(4, {}, {{{0, 1}, {0, 2}}, {{0, 2}, {0, 3}}}), Error);
    REQUIRE_THROWS_AS(Tangle(4, {}, {{{0, 1}, {0, 2}}}), Error);
    REQUIRE_THROWS_AS(Tangle(0, {}, {}, -1), Error);
    REQUIRE(Tangle(0, {}, {}, 2).circles == 2);
    // canonical form: strings sorted, endpoints sorted within a string
    Tangle a(2, {}, {{{0, 2}, {0, 1}}});
    REQUIRE(a.strings[0].first == Endpoint{0, 1});
}

TEST_CASE("t_pi round trip") {
    for (int two_k : {2, 4, 6}) {
        for (const auto& pi : even_nc(two_k)) {
            Tangle t = t_pi(pi);
            REQUIRE(t.num_disks() == pi.num_blocks());
            REQUIRE(pi_of(t) == pi);
        }
    }
    for (int k = 1; k <= 3; ++k) REQUIRE(t_pi(full_partition(2 * k)) == identity_tangle(k));
    REQUIRE_THROWS_AS(t_pi(parse_partition("{1},{2,3,4}")), NotEven);
    REQUIRE_THROWS_AS(t_pi(parse_partition("{1,3},{2,4}")), NotNonCrossing);
}

TEST_CASE("pinned irreducible tangle") {
    // disk for {2,3} is marked at 3, the block's smallest odd point
    Tangle expected(4, {2, 2},
                    {{{0, 1}, {1, 1}}, {{0, 4}, {1, 2}}, {{0, 3}, {2, 1}}, {{0, 2}, {2, 2}}});
    REQUIRE(t_pi(parse_partition("{1,4},{2,3}")) == expected);
}

TEST_CASE("even non-crossing counts match the free Fuss-Catalan sequence") {
    REQUIRE(even_nc(2).size() == 1);
    REQUIRE(even_nc(4).size() == 3);
    REQUIRE(even_nc(6).size() == 12);
    REQUIRE(even_nc(8).size() == 55);
}

TEST_CASE("shading partition is the nested complement") {
    for (int two_k : {2, 4, 6, 8}) {
        for (const auto& pi : even_nc(two_k)) {
            REQUIRE(shading_partition(t_pi(pi)) == nested_kreweras(pi));
        }
    }
    REQUIRE(shading_partition(t_pi(parse_partition("{1,6},{2,3,4,5}"))) ==
            parse_partition("{1,2,5,6},{3,4}"));
    for (int k = 1; k <= 4; ++k) {
        REQUIRE(shading_partition(s_tangle(k)) == pair_partition_aligned(2 * k));
        REQUIRE(shading_partition(u_tangle(k)) ==
                nested_kreweras(pair_partition_shifted(2 * k)));
    }
}

TEST_CASE("region counts") {
    for (int two_k : {2, 4, 6}) {
        for (const auto& pi : even_nc(two_k)) {
            Tangle t = t_pi(pi);
            RegionStructure rs = regions_of(t);
            // disk complement of a connected string diagram
            REQUIRE(static_cast<int>(rs.regions.size()) ==
                    1 + static_cast<int>(t.strings.size()) - t.num_disks());
            int shaded = 0;
            for (bool s : rs.shaded) shaded += s;
            REQUIRE(shaded == shading_partition(t).num_blocks());
        }
    }
}

TEST_CASE("composition lemma: plugging an irreducible tangle substitutes the block") {
    for (int two_k : {2, 4, 6}) {
        for (const auto& pi : even_nc(two_k)) {
            for (int bi = 0; bi < pi.num_blocks(); ++bi) {
                int m = static_cast<int>(pi.blocks[bi].size());
                for (const auto& pi2 : even_nc(m)) {
                    Tangle got = compose(t_pi(pi), bi + 1, t_pi(pi2));
                    REQUIRE(tangles_isomorphic(got, t_pi(substituted(pi, bi, pi2))));
                }
            }
        }
    }
}

TEST_CASE("pinned compositions") {
    Partition p01 = parse_partition("{1,2},{3,4}");
    Partition p04 = parse_partition("{1,4},{2,3}");
    REQUIRE(compose(t_pi(full_partition(4)), 1, t_pi(p01)) == t_pi(p01));
    REQUIRE(compose(t_pi(full_partition(4)), 1, t_pi(p04)) == t_pi(p04));
    for (int two_k : {2, 4, 6}) {
        for (const auto& pi : even_nc(two_k)) {
            Tangle t = t_pi(pi);
            REQUIRE(compose(identity_tangle(two_k / 2), 1, t) == t);
        }
    }
    REQUIRE_THROWS_AS(compose(t_pi(full_partition(4)), 2, s_tangle(1)), Error);
    REQUIRE_THROWS_AS(compose(t_pi(full_partition(4)), 1, s_tangle(1)), DegreeMismatch);
}

TEST_CASE("involution") {
    for (int two_k : {2, 4, 6}) {
        for (const auto& pi : even_nc(two_k)) {
            Tangle t = t_pi(pi);
            REQUIRE(involution(involution(t)) == t);
        }
    }
    for (int k = 1; k <= 4; ++k) {
        REQUIRE(involution(s_tangle(k)) == s_tangle(k));
        REQUIRE(involution(u_tangle(k)) == u_tangle(k));
        REQUIRE(involution(identity_tangle(k)) == identity_tangle(k));
        REQUIRE(involution(involution(mult_tangle(k))) == mult_tangle(k));
        REQUIRE(involution(involution(rot_tangle(k))) == rot_tangle(k));
    }
    for (int k = 2; k <= 4; ++k)
        for (int i = 1; i < k; ++i) REQUIRE(involution(jones_tangle(k, i)) == jones_tangle(k, i));
}

TEST_CASE("free pairs") {
    for (int two_k : {2, 4, 6}) {
        for (const auto& pi : even_nc(two_k)) {
            Partition comp = nested_kreweras(pi);
            for (const auto& pi2 : even_nc(two_k)) {
                bool expect = leq(pi2, comp);
                Tangle t = t_pi(pi), t2 = t_pi(pi2);
                REQUIRE(is_free_pair(t, t2) == expect);
                if (expect) {
                    REQUIRE(pi_of(free_compose(t, t2)) == interleaved(pi, pi2));
                } else {
                    REQUIRE_THROWS_AS(free_compose(t, t2), NotFree);
                }
            }
        }
    }
    REQUIRE(is_free_pair(t_pi(parse_partition("{1,6},{2,3,4,5}")),
                         t_pi(parse_partition("{1,2,5,6},{3,4}"))));
    REQUIRE(is_free_pair(u_tangle(3), s_tangle(3)));
    REQUIRE_FALSE(is_free_pair(s_tangle(3), u_tangle(3)));
    REQUIRE(pi_of(free_compose(u_tangle(2), s_tangle(2))) == pair_partition_shifted(8));
    REQUIRE_THROWS_AS(is_free_pair(s_tangle(1), s_tangle(2)), DegreeMismatch);
}

TEST_CASE("reduced pairs") {
    REQUIRE(above_pairing(2).size() == static_cast<std::size_t>(catalan(1)));
    REQUIRE(above_pairing(4).size() == static_cast<std::size_t>(catalan(2)));
    REQUIRE(above_pairing(6).size() == static_cast<std::size_t>(catalan(3)));
    REQUIRE(above_pairing(8).size() == static_cast<std::size_t>(catalan(4)));
    for (const auto& pi : above_pairing(6)) {
        auto [t, t2] = reduced_pair(pi);
        REQUIRE(t == t_pi(pi));
        REQUIRE(t2 == t_pi(nested_kreweras(pi)));
        REQUIRE(is_free_pair(t, t2));
    }
    REQUIRE_THROWS_AS(reduced_pair(parse_partition("{1,2,3}")), OddOrder);
    REQUIRE_THROWS_AS(reduced_pair(pair_partition_aligned(4)), PrecedenceViolation);
}

TEST_CASE("interleaving form recomposes both constituents exactly") {
    for (int two_k : {2, 4, 6}) {
        for (const auto& pi : above_pairing(two_k)) {
            auto [t, t2] = reduced_pair(pi);
            InterleavingForm f = interleaving_form(t, t2);
            REQUIRE(f.r.outer == two_k);
            std::vector<Tangle> first_fill, second_fill;
            int first_pts = 0, second_pts = 0;
            for (const auto& slot : f.slots) {
                if (slot.from_first) {
                    first_fill.push_back(identity_tangle(slot.degree));
                    second_fill.push_back(s_tangle(slot.degree));
                    first_pts += 2 * slot.degree;
                } else {
                    first_fill.push_back(u_tangle(slot.degree));
                    second_fill.push_back(identity_tangle(slot.degree));
                    second_pts += 2 * slot.degree;
                }
            }
            REQUIRE(first_pts == two_k);
            REQUIRE(second_pts == two_k);
            REQUIRE(multi_compose(f.r, first_fill) == t);
            REQUIRE(multi_compose(f.r, second_fill) == t2);
        }
    }
    REQUIRE_THROWS_AS(interleaving_form(t_pi(pair_partition_aligned(4)),
                                        t_pi(pair_partition_aligned(4))),
                      NotReduced);
    REQUIRE_THROWS_AS(interleaving_form(t_pi(pair_partition_shifted(4)),
                                        t_pi(pair_partition_aligned(4))),
                      NotReduced);
    REQUIRE_THROWS_AS(interleaving_form(u_tangle(2), t_pi(full_partition(4))), NotReduced);
}

TEST_CASE("irreducible factorization") {
    for (int two_k : {2, 4, 6}) {
        for (const auto& pi : even_nc(two_k)) {
            Tangle t = t_pi(pi);
            Factorization f = irreducible_factorization(t);
            REQUIRE(f.pi == pi);
            REQUIRE(f.factors.size() == static_cast<std::size_t>(pi.num_blocks()));
            for (int bi = 0; bi < pi.num_blocks(); ++bi)
                REQUIRE(f.factors[bi] ==
                        identity_tangle(static_cast<int>(pi.blocks[bi].size()) / 2));
            REQUIRE(multi_compose(t_pi(f.pi), f.factors) == t);
        }
    }
    // a factor retaining two inner disks
    Factorization fm = irreducible_factorization(mult_tangle(2));
    REQUIRE(fm.pi == full_partition(4));
    REQUIRE(fm.factors.size() == 1);
    REQUIRE(fm.factors[0] == mult_tangle(2));
    REQUIRE(multi_compose(t_pi(fm.pi), fm.factors) == mult_tangle(2));

    Factorization fj = irreducible_factorization(juxtapose_tangle(2, 1));
    REQUIRE(fj.pi == Partition(6, {{1, 2, 3, 4}, {5, 6}}));
    REQUIRE(fj.factors[0] == identity_tangle(2));
    REQUIRE(fj.factors[1] == identity_tangle(1));
    REQUIRE(multi_compose(t_pi(fj.pi), fj.factors) == juxtapose_tangle(2, 1));

    // free compositions: the factors carry the embedded disks, recomposition is
    // exact up to disk relabelling
    for (int two_k : {2, 4}) {
        for (const auto& pi : even_nc(two_k)) {
            Partition comp = nested_kreweras(pi);
            for (const auto& pi2 : even_nc(two_k)) {
                if (!leq(pi2, comp)) continue;
                Tangle t = free_compose(t_pi(pi), t_pi(pi2));
                Factorization f = irreducible_factorization(t);
                REQUIRE(f.pi == interleaved(pi, pi2));
                REQUIRE(tangles_isomorphic(multi_compose(t_pi(f.pi), f.factors), t));
            }
        }
    }
}

TEST_CASE("closed chains become circles") {
    REQUIRE(compose(trl_tangle(1), 1, s_tangle(1)) == Tangle(0, {}, {}, 1));
    REQUIRE(compose(trl_tangle(2), 1, s_tangle(2)).circles == 1);
    REQUIRE(compose(trl_tangle(2), 1, u_tangle(2)).circles == 2);
    REQUIRE(compose(trr_tangle(2), 1, s_tangle(2)).circles == 1);
    REQUIRE(compose(trr_tangle(2), 1, u_tangle(2)).circles == 2);
    REQUIRE(compose(trl_tangle(2), 1, identity_tangle(2)) == trl_tangle(2));
    // circle counts accumulate
    Tangle seeded(4, {}, {{{0, 1}, {0, 2}}, {{0, 3}, {0, 4}}}, 3);
    REQUIRE(compose(trl_tangle(2), 1, seeded).circles == 4);
}

TEST_CASE("rotation") {
    REQUIRE(rot_tangle(1) == identity_tangle(1));
    Tangle x = tl_tangle(parse_partition("{1,2},{3,6},{4,5}"));
    Tangle once = compose(rot_tangle(3), 1, x);
    REQUIRE(once == tl_tangle(parse_partition("{1,4},{2,3},{5,6}")));
    Tangle cur = x;
    for (int i = 0; i < 6; ++i) cur = compose(rot_tangle(3), 1, cur);
    REQUIRE(cur == x);
    Tangle t = t_pi(parse_partition("{1,2},{3,4,5,6}"));
    cur = t;
    for (int i = 0; i < 6; ++i) cur = compose(rot_tangle(3), 1, cur);
    REQUIRE(cur == t);
}

TEST_CASE("multiplication tangle laws") {
    Tangle e = s_tangle(2);
    Tangle ee = prod(e, e);
    REQUIRE(ee.circles == 1);
    REQUIRE(ee == Tangle(4, {}, {{{0, 1}, {0, 2}}, {{0, 3}, {0, 4}}}, 1));

    Tangle idel = tl_tangle(id_pairing(2));
    std::vector<Tangle> elems{s_tangle(2), u_tangle(2), idel,
                              tl_tangle(parse_partition("{1,4},{2,3}"))};
    for (const auto& x : elems) {
        REQUIRE(prod(idel, x) == x);
        REQUIRE(prod(x, idel) == x);
        for (const auto& y : elems)
            for (const auto& z : elems) REQUIRE(prod(prod(x, y), z) == prod(x, prod(y, z)));
    }

    Tangle e1 = jones_tangle(3, 1), e2 = jones_tangle(3, 2);
    Tangle lhs = prod(prod(e1, e2), e1);
    REQUIRE(lhs.circles == 0);
    REQUIRE(lhs == e1);
    REQUIRE(prod(e1, e1).circles == 1);
}

TEST_CASE("fattening") {
    REQUIRE(fatten(full_partition(2)) == tl_tangle(parse_partition("{1,4},{2,3}")));
    REQUIRE(fatten(discrete_partition(2)) == tl_tangle(parse_partition("{1,2},{3,4}")));
    for (int k = 1; k <= 4; ++k) {
        REQUIRE(fatten(discrete_partition(k)) == s_tangle(k));
        for (const auto& p : enumerate_partitions(k, PartitionClass::NonCrossing)) {
            Tangle f = fatten(p);
            REQUIRE(f.outer == 2 * k);
            // shaded regions trace out the original blocks
            REQUIRE(shading_partition(f) == doubled(p));
        }
    }
    REQUIRE_THROWS_AS(fatten(parse_partition("{1,3},{2,4}")), NotNonCrossing);
}

TEST_CASE("disk relabelling isomorphism") {
    Tangle a = t_pi(parse_partition("{1,2},{3,4}"));
    REQUIRE(tangles_isomorphic(a, a));
    REQUIRE_FALSE(tangles_isomorphic(a, t_pi(parse_partition("{1,4},{2,3}"))));
    REQUIRE_FALSE(tangles_isomorphic(a, t_pi(full_partition(4))));
    // swapping the disks of a symmetric tangle is an isomorphism
    Tangle b(4, {2, 2}, {{{0, 1}, {2, 1}}, {{0, 2}, {2, 2}}, {{0, 3}, {1, 1}}, {{0, 4}, {1, 2}}});
    REQUIRE(tangles_isomorphic(a, b));
    REQUIRE_FALSE(tangles_isomorphic(a, s_tangle(2)));
}

TEST_CASE("expression parsing round trips") {
    for (const char* s : {"Tpi[{1,6},{2,3,4,5}]", "compose(Tpi[{1,2},{3,4}], 1, S 1)",
                          "free(U 2, S 2)", "inv(Rot 3)", "M(2,1)", "E(3,2)", "Mult 2", "TrL 1",
                          "TrR 2", "Unit", "compose(compose(Tpi[{1,2},{3,4}], 1, S 1), 1, U 1)"}) {
        REQUIRE(expr_str(*parse_tangle_expr(s)) == s);
    }
    REQUIRE(expr_str(*parse_tangle_expr("  compose( Tpi[ {1,2} ,{3,4} ] ,1, S 1 )")) ==
            "compose(Tpi[{1,2},{3,4}], 1, S 1)");
}

TEST_CASE("expression syntax errors carry position") {
    try {
        parse_tangle_expr("S");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        REQUIRE(e.line == 1);
        REQUIRE(e.col == 2);
        REQUIRE(e.expected == "an integer");
    }
    try {
        parse_tangle_expr("compose(S 1, 2)");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        REQUIRE(e.line == 1);
        REQUIRE(e.col == 15);
        REQUIRE(e.expected == "','");
    }
    try {
        parse_tangle_expr("compose(\nS 1,\n1,\nbogus 2)");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        REQUIRE(e.line == 4);
        REQUIRE(e.col == 1);
    }
    REQUIRE_THROWS_AS(parse_tangle_expr("Tpi[{1,2}"), SyntaxError);
    REQUIRE_THROWS_AS(parse_tangle_expr("S 0"), SyntaxError);
    REQUIRE_THROWS_AS(parse_tangle_expr("S 1 extra"), SyntaxError);
    REQUIRE_THROWS_AS(parse_tangle_expr("Tpi[{1,oops}]"), SyntaxError);
}

TEST_CASE("expression shapes") {
    ExprShape sh = expr_shape(*parse_tangle_expr("Tpi[{1,6},{2,3,4,5}]"));
    REQUIRE(sh.degree == 3);
    REQUIRE(sh.slots == std::vector<int>{1, 2});

    sh = expr_shape(*parse_tangle_expr("compose(Tpi[{1,6},{2,3,4,5}], 2, Mult 2)"));
    REQUIRE(sh.degree == 3);
    REQUIRE(sh.slots == std::vector<int>{1, 2, 2});

    sh = expr_shape(*parse_tangle_expr("free(U 2, S 2)"));
    REQUIRE(sh.degree == 4);
    REQUIRE(sh.slots.empty());

    sh = expr_shape(*parse_tangle_expr("TrL 3"));
    REQUIRE(sh.degree == 0);
    REQUIRE(sh.slots == std::vector<int>{3});

    REQUIRE(expr_shape(*parse_tangle_expr("Unit")).degree == 1);
    REQUIRE_THROWS_AS(expr_shape(*parse_tangle_expr("compose(Tpi[{1,2},{3,4}], 1, S 2)")),
                      DegreeMismatch);
    REQUIRE_THROWS_AS(expr_shape(*parse_tangle_expr("compose(S 1, 1, S 1)")), DegreeMismatch);
    REQUIRE_THROWS_AS(expr_shape(*parse_tangle_expr("free(S 2, U 2)")), NotFree);
    REQUIRE_THROWS_AS(expr_shape(*parse_tangle_expr("free(S 2, S 3)")), DegreeMismatch);
    REQUIRE_THROWS_AS(expr_shape(*parse_tangle_expr("E(2,2)")), Error);
}

TEST_CASE("expression realization") {
    REQUIRE(to_tangle(*parse_tangle_expr("E(2,1)")) == s_tangle(2));
    REQUIRE(to_tangle(*parse_tangle_expr("Rot 1")) == identity_tangle(1));
    REQUIRE(to_tangle(*parse_tangle_expr("inv(U 2)")) == u_tangle(2));
    REQUIRE(to_tangle(*parse_tangle_expr("free(U 2, S 2)")) ==
            free_compose(u_tangle(2), s_tangle(2)));
    REQUIRE(to_tangle(*parse_tangle_expr("compose(Mult 2, 1, S 2)")) ==
            compose(mult_tangle(2), 1, s_tangle(2)));
    REQUIRE(to_tangle(*parse_tangle_expr("M(2,1)")) == juxtapose_tangle(2, 1));
    REQUIRE_THROWS_AS(to_tangle(*parse_tangle_expr("Unit")), UnsupportedTangleShape);
    REQUIRE_THROWS_AS(to_tangle(*parse_tangle_expr("free(S 2, U 2)")), NotFree);
}
