#ifndef MP_MULTIPEDE_HPP
#define MP_MULTIPEDE_HPP

#include "mp/base.hpp"
#include "mp/graph.hpp"

#include <array>
#include <vector>

namespace mp {

// The four even-weight bit-triples, ascending as 3-bit values; bit j is the
// connection rule for neighbor slot j. Fig-style labels m_1..m_4 correspond
// to the complements (flip the pair at slot 0 to translate).
inline constexpr std::array<int, 4> kEvenTriples = {0b000, 0b011, 0b101,
                                                   0b110};

// Gadget-local a/b exchanges, one per (V-side vertex, W-side neighbor) slot.
struct TwistSet {
    std::vector<std::pair<int, int>> swaps;
};

// Vertex layout of a multipede R(B): inner vertices first (four per V-side
// base vertex, in kEvenTriples order), then outer pairs a(w), b(w) per
// W-side base vertex.
struct MultipedeLayout {
    Graph graph;
    BipartiteBase base;

    int inner_of(int v, int triple_index) const { return 4 * v + triple_index; }
    int outer_a(int w) const { return 4 * base.v_count + 2 * w; }
    int outer_b(int w) const { return 4 * base.v_count + 2 * w + 1; }
    int inner_count() const { return 4 * base.v_count; }
};

// The 10-vertex gadget: inner 0..3 (kEvenTriples order), then outer pairs
// a_1,b_1,a_2,b_2,a_3,b_3 as vertices 4..9. Inner triple i is adjacent to
// a_j when bit j of i is 0, to b_j when it is 1.
Graph cfi_gadget_x3();

// Replace every V-side vertex by an X_3 copy wired to the outer pairs of its
// three neighbors (ascending W order); twisted slots swap the a/b rule.
MultipedeLayout multipede(const BipartiteBase& b, const TwistSet& twists = {});

// Classic construction on a connected 3-regular base: one X_3 copy per base
// vertex (10 vertices each), pair edges straight except on twisted edges.
Graph cfi_classic(const Graph& g,
                  const std::vector<std::pair<int, int>>& twisted_edges = {});

// CFI(g, {}) versus CFI(g, {first edge}); relation = non_isomorphic.
InstancePair cfi_pair(const Graph& g);

} // namespace mp

#endif
