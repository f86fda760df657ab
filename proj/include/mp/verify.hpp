#ifndef MP_VERIFY_HPP
#define MP_VERIFY_HPP

#include "mp/base.hpp"
#include "mp/graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mp {

// Raised when an exact check exceeds the configured size limits.
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Vertices at distance exactly reachable via one intermediate vertex,
// excluding v itself. Adjacent vertices sharing a common neighbor with v
// are included; the rigidity argument depends on this exact set.
std::vector<int> second_neighborhood(const Graph& g, int v);

// True iff all W-side vertices have pairwise distinct second neighborhoods
// (computed inside the bipartite graph).
bool distinct_second_neighborhoods(const BipartiteBase& b);

// Exhaustive oracle for evenness of B(G_n, sigma): a 2-regular edge set C
// of G_n with sigma(C) also 2-regular, if one exists. Edge index sets refer
// to the fixed edge order of cycle_with_diagonals. n <= 6 only.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
two_regular_even_check(int n, const Permutation& sigma);

struct Coloring {
    std::vector<int> color_of;
    int rounds = 0;

    int class_count() const;
    std::vector<int> histogram() const; // class sizes by color id
};

// Coarsest stable refinement of the initial coloring. Color ids are
// canonical: isomorphic graphs get identical histograms. If no initial
// coloring is given, the graph's own colors are used when present.
Coloring color_refinement(const Graph& g,
                          const std::optional<std::vector<int>>& initial =
                              std::nullopt);

struct AutReport {
    bool is_rigid = false;
    std::optional<Permutation> witness; // verified non-identity automorphism
    std::optional<std::uint64_t> group_order;
    std::uint64_t nodes_explored = 0;
};

// Complete individualization-refinement search. Returns the first
// non-identity automorphism in deterministic search order, or certifies
// rigidity. With count_order the full automorphism count is computed.
AutReport find_automorphism(const Graph& g, bool count_order = false,
                            int vertex_limit = 4000);

// Complete search for an isomorphism; respects colors when present.
// Absent result certifies non-isomorphism.
std::optional<Permutation> are_isomorphic(const Graph& g1, const Graph& g2,
                                          int vertex_limit = 4000,
                                          std::uint64_t* nodes_explored =
                                              nullptr);

bool is_automorphism(const Graph& g, const Permutation& p);
bool is_isomorphism(const Graph& g1, const Graph& g2, const Permutation& p);

} // namespace mp

#endif
