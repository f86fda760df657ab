#ifndef MP_GROUPS_HPP
#define MP_GROUPS_HPP

#include "mp/graph.hpp"

#include <array>
#include <optional>
#include <vector>

namespace mp {

// Desk-scale permutation group: explicit element list.
struct PermGroup {
    int degree = 0;
    std::vector<Permutation> elements;

    bool contains(const Permutation& p) const;
    bool is_group() const; // identity, closure, inverses
    bool is_abelian() const;
    bool is_transitive() const;
};

PermGroup cyclic_group(int k);   // k rotations of {0..k-1}, k >= 2
PermGroup dihedral_group(int k); // 2k rotations + reflections, k >= 3

// Colored gadget: outer classes C_1..C_t carry colors 1..t, inner vertices
// color 0. Class i element j is vertex i*n + j; inner vertices follow.
struct Gadget {
    Graph graph;
    std::vector<std::vector<int>> outer_classes;
    std::vector<int> inner;
    std::optional<PermGroup> realized;

    int class_size() const { return int(outer_classes.at(0).size()); }
};

// Inner vertices are the triples (g1,g2,g3) in Gamma^3 with g1 g2 g3 = id;
// m_(g1,g2,g3) is adjacent to a in C_i iff g_i(0) = a. Gamma must be
// transitive and abelian.
Gadget abelian_gadget(const PermGroup& gamma);

// Semidirect-product gadget for D_k: triples (ah, bh, ch) with rotations
// a,b,c, abc = id, h in {id, reflection}; m_g ~ a in C_i iff g_i maps 0 or 1
// to a. Twin inner vertices (identical neighborhoods) are merged before
// wiring, keeping the enumeration-least representative.
Gadget dihedral_gadget(int k);

// Triples under componentwise composition.
struct TripleGroup {
    std::vector<std::array<Permutation, 3>> triples;

    bool is_group() const;
    std::size_t order() const { return triples.size(); }
};

struct TwoFactorDiagnostics {
    bool inj_12, inj_13, inj_23;
    bool surj_12, surj_13, surj_23;

    bool injective() const { return inj_12 && inj_13 && inj_23; }
    bool surjective() const { return surj_12 && surj_13 && surj_23; }
};

TwoFactorDiagnostics two_factor_diagnostics(const TripleGroup& delta);

// Unentwined subdirect product {((h2,h3),(h1,h3),(h1,h2))} with the H_i
// acting on disjoint blocks, padded to a common degree.
TripleGroup unentwined_triple_group(const PermGroup& h1, const PermGroup& h2,
                                    const PermGroup& h3);

TripleGroup full_product_triple_group(const PermGroup& gamma);

// Componentwise product group {(a,b,c) in Gamma^3 | abc = id}.
TripleGroup abelian_triple_group(const PermGroup& gamma);

// Enumerate all color-preserving automorphisms of the gadget (complete
// backtracking; capability-limited) and restrict them to the outer classes.
TripleGroup induced_outer_group(const Gadget& gadget, int vertex_limit = 40);

// Generalized construction: one gadget copy per vertex of a connected
// 3-regular base, classes bound to incident edges in ascending order,
// straight matchings everywhere except the last base edge, which is matched
// through gamma_twist. Output keeps the gadget colors.
Graph generalized_cfi(const Graph& g, const Gadget& gadget,
                      const Permutation& gamma_twist);

} // namespace mp

#endif
