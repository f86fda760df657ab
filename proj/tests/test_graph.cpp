#include "mp/graph.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace mp;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("permutation helpers") {
    CHECK(is_permutation({2, 0, 1}));
    CHECK_FALSE(is_permutation({0, 0, 1}));
    CHECK_FALSE(is_permutation({0, 3, 1}));
    CHECK(identity_permutation(3) == Permutation{0, 1, 2});

    Permutation p{2, 0, 1};
    CHECK(compose(inverse_permutation(p), p) == identity_permutation(3));
    CHECK(compose(p, inverse_permutation(p)) == identity_permutation(3));
    // (p * q)(x) = p(q(x))
    Permutation q{1, 2, 0};
    CHECK(compose(p, q)[0] == p[q[0]]);
}

TEST_CASE("rational normalization") {
    CHECK(Rational(4, 8) == Rational(1, 2));
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK(Rational(3, -6).den == 2);
    CHECK(Rational(3, -6).num == -1);
    CHECK(Rational(0, 5) == Rational(0, 1));
}

TEST_CASE("graph edge handling") {
    Graph g(4);
    g.add_edge(1, 0);
    g.add_edge(0, 1); // idempotent
    g.add_edge(2, 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_THROWS(g.add_edge(2, 2));
    CHECK_THROWS(g.add_edge(0, 4));
    CHECK_THROWS(g.add_edge(-1, 0));

    g.add_edge(3, 0);
    CHECK(g.neighbors(3) == std::vector<int>{0, 2});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {2, 3}});
    CHECK(g.degree_sequence() == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("permute_vertices preserves structure") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(9, 0.4, seed);
        std::mt19937_64 rng(seed + 100);
        Permutation p = identity_permutation(9);
        for (int i = 8; i > 0; --i) std::swap(p[i], p[int(rng() % (i + 1))]);

        Graph h = permute_vertices(g, p);
        CHECK(h.edge_count() == g.edge_count());
        CHECK(h.degree_sequence() == g.degree_sequence());
        for (auto [u, v] : g.edges()) CHECK(h.has_edge(p[u], p[v]));
    }
}

TEST_CASE("average degree is exact") {
    Graph g(3); // path: degrees 1,2,1
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(average_degree(g) == Rational(4, 3));
}

TEST_CASE("dimacs round trip") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = random_graph(11, 0.3, seed);
        if (seed % 2 == 0) {
            std::vector<int> colors(11);
            for (int v = 0; v < 11; ++v) colors[v] = v % 3;
            g.set_colors(colors);
        }
        std::string text = write_dimacs(g, {"test instance"});
        CHECK(write_dimacs(g, {"test instance"}) == text); // byte-stable
        Graph back = read_dimacs_string(text);
        CHECK(back == g);
    }
}

TEST_CASE("dimacs rejects malformed input") {
    CHECK_THROWS(read_dimacs_string("e 1 2\n"));          // missing header
    CHECK_THROWS(read_dimacs_string("p edge 2 2\ne 1 2\n")); // count mismatch
    CHECK_THROWS(read_dimacs_string("p edge 2 1\ne 1 3\n")); // out of range
    CHECK_THROWS(read_dimacs_string("p edge x 1\n"));
    // parse errors carry the offending line number
    try {
        read_dimacs_string("p edge 2 1\ne 1 3\n");
        CHECK(false);
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
}

TEST_CASE("adjlist round trip") {
    Graph g = random_graph(7, 0.5, 42);
    std::ostringstream out;
    write_adjlist(g, out);
    std::istringstream in(out.str());
    CHECK(read_adjlist(in) == g);
}

TEST_CASE("relation names") {
    CHECK(to_string(Relation::isomorphic) == "isomorphic");
    CHECK(to_string(Relation::non_isomorphic) == "non_isomorphic");
    CHECK(to_string(Relation::unknown) == "unknown");
}
