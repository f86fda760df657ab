#include "mp/shrink.hpp"

#include "mp/f2.hpp"
#include "mp/verify.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace mp;

TEST_CASE("row selection keeps an independent generating set") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto [b, retries] = sample_odd_base(4, seed);
        auto [reduced, report] = linalg_reduce(b);
        CHECK(int(report.rows_kept.size()) == b.w_count);
        CHECK(reduced.v_count == b.w_count);
        CHECK(reduced.w_count == b.w_count);
        CHECK(is_odd(reduced));
        // kept rows really are independent (naive oracle) and in order
        std::vector<std::vector<int>> rows;
        for (std::size_t i = 0; i < report.rows_kept.size(); ++i) {
            if (i > 0) CHECK(report.rows_kept[i - 1] < report.rows_kept[i]);
            std::vector<int> row(b.w_count, 0);
            for (int w : b.v_neighbors[report.rows_kept[i]]) row[w] = 1;
            rows.push_back(row);
            CHECK(reduced.v_neighbors[i] == b.v_neighbors[report.rows_kept[i]]);
        }
        CHECK(oracle::naive_rank(rows) == b.w_count);
    }
}

TEST_CASE("even bases are rejected with a verified witness") {
    // identity sigma wires both copies of every vertex identically, so any
    // vertex's edge set meets all neighborhoods evenly
    BipartiteBase even = bipartite_base(4, identity_permutation(12));
    CHECK_FALSE(is_odd(even));
    try {
        linalg_reduce(even);
        CHECK(false);
    } catch (const EvenBaseError& e) {
        CHECK_FALSE(e.witness.empty());
        for (int v = 0; v < even.v_count; ++v) {
            int hits = 0;
            for (int w : even.v_neighbors[v])
                for (int x : e.witness)
                    if (w == x) ++hits;
            CHECK(hits % 2 == 0);
        }
    }
}

TEST_CASE("already-square odd bases reduce to themselves") {
    BipartiteBase sq; // incidence J+I over 4 points, invertible over GF(2)
    sq.v_count = sq.w_count = 4;
    sq.v_neighbors = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    REQUIRE(is_odd(sq));
    auto [reduced, report] = linalg_reduce(sq);
    CHECK(report.rows_kept == std::vector<int>{0, 1, 2, 3});
    CHECK(reduced.v_neighbors == sq.v_neighbors);
}

TEST_CASE("bypassing outer vertices") {
    auto [b, retries] = sample_odd_base(4, 2);
    MultipedeLayout m = multipede(b);
    auto [g, report] = bypass_outer(m);
    CHECK(g.vertex_count() == m.inner_count());
    CHECK(report.bypassed == 2 * b.w_count);
    // candidate count: C(deg,2) per outer vertex
    long long candidates = 0;
    for (int o = m.inner_count(); o < m.graph.vertex_count(); ++o) {
        long long d = m.graph.degree(o);
        candidates += d * (d - 1) / 2;
    }
    CHECK(report.merged_parallel_edges == candidates - g.edge_count());
    // every bypass edge comes from a shared outer neighbor
    for (auto [u, v] : g.edges()) {
        bool shared = false;
        for (int o = m.inner_count(); o < m.graph.vertex_count() && !shared;
             ++o)
            shared = m.graph.has_edge(u, o) && m.graph.has_edge(v, o);
        CHECK(shared);
    }

    // a degree-2 outer vertex collapses to a single edge
    BipartiteBase tiny;
    tiny.v_count = 2;
    tiny.w_count = 4;
    tiny.v_neighbors = {{0, 1, 2}, {0, 1, 3}};
    auto [tg, treport] = bypass_outer(multipede(tiny));
    CHECK(tg.vertex_count() == 8);
    CHECK(treport.bypassed == 8);
}

TEST_CASE("shrunken pipeline") {
    for (int n : {4, 6}) {
        auto [g, meta] = shrunken_multipede(n, 7);
        CHECK(g.vertex_count() == 12 * n);
        CHECK(average_degree(g).to_double() <= 24.0);
        CHECK(meta.n == n);
        CHECK(meta.seed == 7);
        CHECK(meta.vertices == g.vertex_count());
        CHECK(meta.edges == g.edge_count());
        // pure function of (n, seed, twists)
        auto [g2, meta2] = shrunken_multipede(n, 7);
        CHECK(g == g2);
        CHECK(meta2.to_lines() == meta.to_lines());
    }
    CHECK_THROWS(shrunken_multipede(3, 1));
}

TEST_CASE("slot twists on reduced bases are absorbed") {
    // the reduced incidence matrix is invertible over GF(2), so a twisted
    // variant stays isomorphic; the non-isomorphic mate must come from an
    // independent base
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        auto [b, retries] = sample_odd_base(4, seed);
        auto [reduced, report] = linalg_reduce(b);
        TwistSet tw{{{0, reduced.v_neighbors[0][0]}}};
        Graph plain = shrunken_multipede(4, seed).first;
        Graph twisted = shrunken_multipede(4, seed, tw).first;
        CHECK(twisted != plain);
        CHECK(are_isomorphic(plain, twisted).has_value());
        // unreduced multipedes keep the twist distinction
        CHECK_FALSE(are_isomorphic(
                        multipede(b).graph,
                        multipede(b, TwistSet{{{0, b.v_neighbors[0][0]}}}).graph)
                        .has_value());
    }
}

TEST_CASE("mate pairs are certified non-isomorphic") {
    InstancePair p = shrunken_pair(4, 3, /*certify=*/true);
    CHECK(p.relation == Relation::non_isomorphic);
    CHECK(p.g1.vertex_count() == 48);
    CHECK(p.g2.vertex_count() == 48);
    CHECK_FALSE(are_isomorphic(p.g1, p.g2).has_value());

    InstancePair q = shrunken_pair(4, 3, /*certify=*/false);
    CHECK(q.relation == Relation::unknown);
    CHECK(q.g1 == p.g1);
}
