#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

bool maps_edges(const mp::Graph& g1, const mp::Graph& g2,
                const mp::Permutation& p) {
    for (int v = 0; v < g1.vertex_count(); ++v)
        for (int u : g1.neighbors(v))
            if (!g2.has_edge(p[v], p[u])) return false;
    return true;
}

bool maps_colors(const mp::Graph& g1, const mp::Graph& g2,
                 const mp::Permutation& p) {
    if (!g1.colors() && !g2.colors()) return true;
    if (!g1.colors() || !g2.colors()) return false;
    for (int v = 0; v < g1.vertex_count(); ++v)
        if ((*g1.colors())[v] != (*g2.colors())[p[v]]) return false;
    return true;
}

} // namespace

std::vector<mp::Permutation> all_isomorphisms(const mp::Graph& g1,
                                              const mp::Graph& g2) {
    if (g1.vertex_count() > 8)
        throw std::invalid_argument("oracle limited to 8 vertices");
    std::vector<mp::Permutation> found;
    if (g1.vertex_count() != g2.vertex_count() ||
        g1.edge_count() != g2.edge_count())
        return found;
    mp::Permutation p(g1.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    do {
        if (maps_edges(g1, g2, p) && maps_colors(g1, g2, p)) found.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return found;
}

std::vector<mp::Permutation> all_automorphisms(const mp::Graph& g) {
    return all_isomorphisms(g, g);
}

int naive_rank(std::vector<std::vector<int>> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    int rank = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] % 2 == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (int(r) != rank && rows[r][c] % 2 == 1)
                for (std::size_t k = 0; k < cols; ++k)
                    rows[r][k] = (rows[r][k] + rows[rank][k]) % 2;
        ++rank;
    }
    return rank;
}

std::optional<std::vector<int>>
exhaustive_even_witness(const mp::BipartiteBase& b) {
    if (b.w_count > 16)
        throw std::invalid_argument("oracle limited to 16 W vertices");
    for (unsigned mask = 1; mask < (1u << b.w_count); ++mask) {
        bool even_everywhere = true;
        for (int v = 0; v < b.v_count && even_everywhere; ++v) {
            int hits = 0;
            for (int w : b.v_neighbors[v])
                if (mask & (1u << w)) ++hits;
            if (hits % 2 != 0) even_everywhere = false;
        }
        if (even_everywhere) {
            std::vector<int> witness;
            for (int w = 0; w < b.w_count; ++w)
                if (mask & (1u << w)) witness.push_back(w);
            return witness;
        }
    }
    return std::nullopt;
}

} // namespace oracle
