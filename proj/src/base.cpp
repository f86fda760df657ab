#include "mp/base.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace mp {

std::vector<std::pair<int, int>> cycle_with_diagonals_edges(int n) {
    std::vector<std::pair<int, int>> es;
    es.reserve(3 * n);
    for (int i = 0; i < 2 * n; ++i) es.emplace_back(i, (i + 1) % (2 * n));
    for (int i = 0; i < n; ++i) es.emplace_back(i, i + n);
    return es;
}

Graph cycle_with_diagonals(int n) {
    if (n < 4) throw std::invalid_argument("cycle_with_diagonals: n < 4");
    Graph g(2 * n);
    for (auto [u, v] : cycle_with_diagonals_edges(n)) g.add_edge(u, v);
    return g;
}

Permutation random_edge_permutation(int m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("random_edge_permutation: m < 1");
    Permutation p = identity_permutation(m);
    std::mt19937_64 rng(seed);
    // Fisher-Yates, explicit so the output is platform-independent
    for (int i = m - 1; i > 0; --i) {
        int j = int(rng() % std::uint64_t(i + 1));
        std::swap(p[i], p[j]);
    }
    return p;
}

std::vector<int> BipartiteBase::w_degrees() const {
    std::vector<int> deg(w_count, 0);
    for (const auto& nb : v_neighbors)
        for (int w : nb) ++deg[w];
    return deg;
}

Graph BipartiteBase::to_graph() const {
    Graph g(v_count + w_count);
    for (int v = 0; v < v_count; ++v)
        for (int w : v_neighbors[v]) g.add_edge(v, v_count + w);
    return g;
}

BipartiteBase bipartite_base(int n, const Permutation& sigma) {
    if (n < 4) throw std::invalid_argument("bipartite_base: n < 4");
    if (int(sigma.size()) != 3 * n)
        throw std::invalid_argument("bipartite_base: sigma length != 3n");
    if (!is_permutation(sigma))
        throw std::invalid_argument("bipartite_base: sigma not a permutation");

    auto edges = cycle_with_diagonals_edges(n);
    BipartiteBase b;
    b.v_count = 4 * n;
    b.w_count = 3 * n;
    b.v_neighbors.resize(b.v_count);

    // incident edge indices per vertex of G_n
    std::vector<std::vector<int>> inc(2 * n);
    for (int e = 0; e < 3 * n; ++e) {
        inc[edges[e].first].push_back(e);
        inc[edges[e].second].push_back(e);
    }
    Permutation sigma_inv = inverse_permutation(sigma);
    for (int v = 0; v < 2 * n; ++v) {
        // (v,0) ~ e iff v in e
        std::array<int, 3> nb0{inc[v][0], inc[v][1], inc[v][2]};
        std::sort(nb0.begin(), nb0.end());
        b.v_neighbors[v] = nb0;
        // (v,1) ~ e iff v in sigma(e), i.e. e = sigma^{-1}(f) for incident f
        std::array<int, 3> nb1{sigma_inv[inc[v][0]], sigma_inv[inc[v][1]],
                               sigma_inv[inc[v][2]]};
        std::sort(nb1.begin(), nb1.end());
        b.v_neighbors[2 * n + v] = nb1;
    }
    b.origin = BipartiteBase::Origin{n, sigma};
    return b;
}

} // namespace mp
