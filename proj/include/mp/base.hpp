#ifndef MP_BASE_HPP
#define MP_BASE_HPP

#include "mp/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace mp {

// The 2n-cycle with diagonals: vertices 0..2n-1, cycle edges {i, i+1 mod 2n}
// for 0 <= i < 2n, then diagonals {i, i+n} for 0 <= i < n. Edge indexing for
// sigma follows exactly this order: cycle edges by i ascending, then
// diagonals by i ascending.
Graph cycle_with_diagonals(int n);

std::vector<std::pair<int, int>> cycle_with_diagonals_edges(int n);

// Uniform permutation of 0..m-1 from a seeded mt19937_64 via Fisher-Yates.
Permutation random_edge_permutation(int m, std::uint64_t seed);

// Bipartite base graph (V, W, E) where every V-side vertex has degree 3.
// V-side vertices are 0..v_count-1, W-side vertices 0..w_count-1 in their
// own index space; as a plain Graph the W side is shifted by v_count.
struct BipartiteBase {
    int v_count = 0;
    int w_count = 0;
    // neighbors[v] = the three W-side neighbors of v, ascending
    std::vector<std::array<int, 3>> v_neighbors;

    struct Origin {
        int n_parameter;
        Permutation sigma;
    };
    std::optional<Origin> origin;

    std::vector<int> w_degrees() const;
    Graph to_graph() const; // V first, then W, monochromatic
};

// Algorithm: V = V(G_n) x {0,1}, W = E(G_n); (v,0) ~ e iff v in e,
// (v,1) ~ e iff v in sigma(e). Layout: (v,0) -> v, (v,1) -> 2n + v.
BipartiteBase bipartite_base(int n, const Permutation& sigma);

} // namespace mp

#endif
