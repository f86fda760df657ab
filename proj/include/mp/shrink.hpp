#ifndef MP_SHRINK_HPP
#define MP_SHRINK_HPP

#include "mp/base.hpp"
#include "mp/graph.hpp"
#include "mp/multipede.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mp {

struct ReductionReport {
    std::vector<int> rows_kept;      // V-side vertices retained by linalg_reduce
    int bypassed = 0;                // outer vertices removed by bypass_outer
    int merged_parallel_edges = 0;   // candidate bypass edges lost to dedup
};

// linalg_reduce on an even base; carries the witness set.
class EvenBaseError : public std::runtime_error {
public:
    explicit EvenBaseError(std::vector<int> witness)
        : std::runtime_error("linalg_reduce: base is even"),
          witness(std::move(witness)) {}
    std::vector<int> witness;
};

// Keep the first V-side vertices (construction order) whose incidence rows
// are linearly independent over GF(2); exactly |W| remain and the result is
// still odd. Requires an odd input.
std::pair<BipartiteBase, ReductionReport> linalg_reduce(const BipartiteBase& b);

// Remove every outer vertex, joining all pairs of its former neighbors
// directly; parallel edges collapse. Inner vertices keep their order.
std::pair<Graph, ReductionReport> bypass_outer(const MultipedeLayout& m);

struct ShrunkenMeta {
    std::string construction = "shrunken";
    int n = 0;
    std::uint64_t seed = 0;
    int retries = 0; // extra sigma draws needed to reach an odd base
    std::vector<std::pair<int, int>> twists;
    int vertices = 0;
    int edges = 0;
    Rational avg_degree;

    std::vector<std::string> to_lines() const;
};

// Full pipeline: seeded sigma -> B(G_n, sigma), resampling with seed+1,
// seed+2, ... while even (up to kMaxOddRetries extra draws) -> linalg_reduce
// -> multipede with twists -> bypass_outer. Pure function of (n, seed,
// twists). Twists refer to the reduced base B*.
inline constexpr int kMaxOddRetries = 64;

std::pair<Graph, ShrunkenMeta> shrunken_multipede(int n, std::uint64_t seed,
                                                  const TwistSet& twists = {});

// The odd-base sampling step shared by the reduced pipelines: returns the
// first odd B(G_n, seed + r) and the retry count r.
std::pair<BipartiteBase, int> sample_odd_base(int n, std::uint64_t seed);

// Seed offset between the two members of a non-isomorphic pair; far larger
// than the retry window so the chains cannot collide.
inline constexpr std::uint64_t kMateSeedStride = 1u << 20;

// Non-isomorphic mate pair: two shrunken multipedes from independent odd
// bases (seed and seed + stride). A twisted variant cannot serve here: the
// reduced incidence matrix is invertible over GF(2), so every a/b slot twist
// is absorbed by outer-pair relabelings plus gadget automorphisms and the
// twisted graph stays isomorphic. With certify the complete solver confirms
// non-isomorphism (advancing the mate seed on the rare collision); without,
// relation is unknown.
InstancePair shrunken_pair(int n, std::uint64_t seed, bool certify);

} // namespace mp

#endif
