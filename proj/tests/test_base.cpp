#include "mp/base.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace mp;

TEST_CASE("cycle with diagonals") {
    Graph g = cycle_with_diagonals(4);
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 12);
    for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(7, 0));
    CHECK(g.has_edge(0, 4));
    CHECK(g.has_edge(3, 7));
    CHECK_THROWS(cycle_with_diagonals(3));

    auto edges = cycle_with_diagonals_edges(4);
    REQUIRE(edges.size() == 12);
    CHECK(edges[0] == std::pair<int, int>{0, 1});
    CHECK(edges[7] == std::pair<int, int>{7, 0});
    CHECK(edges[8] == std::pair<int, int>{0, 4});
    CHECK(edges[11] == std::pair<int, int>{3, 7});
    // the fixed edge order covers exactly the edge set
    std::set<std::pair<int, int>> as_set;
    for (auto [u, v] : edges) as_set.insert(u < v ? std::pair{u, v} : std::pair{v, u});
    auto graph_edges = g.edges();
    std::set<std::pair<int, int>> from_graph(graph_edges.begin(),
                                             graph_edges.end());
    CHECK(as_set == from_graph);
}

TEST_CASE("seeded permutations are deterministic and uniform") {
    CHECK(random_edge_permutation(12, 7) == random_edge_permutation(12, 7));
    CHECK(random_edge_permutation(12, 7) != random_edge_permutation(12, 8));
    CHECK(is_permutation(random_edge_permutation(30, 1)));
    CHECK_THROWS(random_edge_permutation(0, 1));

    // chi-square uniformity over the 24 permutations of 4 elements;
    // 12000 draws, df = 23, p = 0.001 critical value 49.73 -> bound 60
    std::map<Permutation, int> counts;
    const int draws = 12000;
    for (std::uint64_t s = 0; s < draws; ++s)
        ++counts[random_edge_permutation(4, s)];
    CHECK(counts.size() == 24);
    double expected = draws / 24.0, chi2 = 0;
    for (const auto& [p, c] : counts)
        chi2 += (c - expected) * (c - expected) / expected;
    CHECK(chi2 < 60.0);
}

TEST_CASE("bipartite base matches its definition") {
    int n = 5;
    Permutation sigma = random_edge_permutation(3 * n, 9);
    BipartiteBase b = bipartite_base(n, sigma);
    CHECK(b.v_count == 4 * n);
    CHECK(b.w_count == 3 * n);
    for (const auto& nb : b.v_neighbors) {
        CHECK(nb[0] < nb[1]);
        CHECK(nb[1] < nb[2]);
    }
    for (int d : b.w_degrees()) CHECK(d == 4);
    REQUIRE(b.origin.has_value());
    CHECK(b.origin->n_parameter == n);
    CHECK(b.origin->sigma == sigma);

    // independent reconstruction: (v,0) ~ e iff v in e, (v,1) ~ e iff v in
    // sigma(e), with (v,0) -> v and (v,1) -> 2n + v
    auto edges = cycle_with_diagonals_edges(n);
    for (int v = 0; v < 2 * n; ++v) {
        std::set<int> copy0, copy1;
        for (int e = 0; e < 3 * n; ++e) {
            if (edges[e].first == v || edges[e].second == v) copy0.insert(e);
            auto se = edges[sigma[e]];
            if (se.first == v || se.second == v) copy1.insert(e);
        }
        CHECK(std::set<int>(b.v_neighbors[v].begin(), b.v_neighbors[v].end()) ==
              copy0);
        CHECK(std::set<int>(b.v_neighbors[2 * n + v].begin(),
                            b.v_neighbors[2 * n + v].end()) == copy1);
    }

    Graph g = b.to_graph();
    CHECK(g.vertex_count() == 7 * n);
    CHECK(g.edge_count() == 12 * n);
    for (int v = 0; v < b.v_count; ++v) CHECK(g.degree(v) == 3);
    for (int w = 0; w < b.w_count; ++w) CHECK(g.degree(b.v_count + w) == 4);
}
