#ifndef TESTS_ORACLES_HPP
#define TESTS_ORACLES_HPP

#include "mp/base.hpp"
#include "mp/graph.hpp"

#include <optional>
#include <vector>

namespace oracle {

// Every automorphism of g by checking all n! permutations (n <= 8).
// Respects vertex colors when present.
std::vector<mp::Permutation> all_automorphisms(const mp::Graph& g);

// Every isomorphism g1 -> g2 by exhaustive permutation check (n <= 8).
std::vector<mp::Permutation> all_isomorphisms(const mp::Graph& g1,
                                              const mp::Graph& g2);

// GF(2) rank by plain row reduction over int vectors, written independently
// of the bit-packed implementation.
int naive_rank(std::vector<std::vector<int>> rows);

// First nonempty W-subset (ascending as bitmask) meeting every V-side
// neighborhood an even number of times; |W| <= 16.
std::optional<std::vector<int>>
exhaustive_even_witness(const mp::BipartiteBase& b);

} // namespace oracle

#endif
