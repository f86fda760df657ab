#include "mp/verify.hpp"

#include <algorithm>
#include <set>

namespace mp {

std::vector<int> second_neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("second_neighborhood: vertex out of range");
    std::set<int> out;
    for (int w : g.neighbors(v))
        for (int u : g.neighbors(w))
            if (u != v) out.insert(u);
    return {out.begin(), out.end()};
}

bool distinct_second_neighborhoods(const BipartiteBase& b) {
    Graph g = b.to_graph();
    std::set<std::vector<int>> seen;
    for (int w = 0; w < b.w_count; ++w)
        if (!seen.insert(second_neighborhood(g, b.v_count + w)).second)
            return false;
    return true;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>>
two_regular_even_check(int n, const Permutation& sigma) {
    if (n < 4) throw std::invalid_argument("two_regular_even_check: n < 4");
    if (n > 6)
        throw CapabilityError("two_regular_even_check: n > 6 (exhaustive)");
    int m = 3 * n;
    if (int(sigma.size()) != m)
        throw std::invalid_argument("two_regular_even_check: sigma length");
    auto edges = cycle_with_diagonals_edges(n);

    auto two_regular = [&](std::uint32_t mask) {
        std::vector<int> deg(2 * n, 0);
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1u) {
                ++deg[edges[e].first];
                ++deg[edges[e].second];
            }
        for (int d : deg)
            if (d != 0 && d != 2) return false;
        return true;
    };

    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << m); ++mask) {
        if (!two_regular(mask)) continue;
        std::uint32_t image = 0;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1u) image |= std::uint32_t(1) << sigma[e];
        if (!two_regular(image)) continue;
        std::vector<int> c, sc;
        for (int e = 0; e < m; ++e) {
            if (mask >> e & 1u) c.push_back(e);
            if (image >> e & 1u) sc.push_back(e);
        }
        return std::make_pair(std::move(c), std::move(sc));
    }
    return std::nullopt;
}

} // namespace mp
