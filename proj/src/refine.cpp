#include "mp/verify.hpp"

#include <algorithm>
#include <map>

namespace mp {

int Coloring::class_count() const {
    if (color_of.empty()) return 0;
    return *std::max_element(color_of.begin(), color_of.end()) + 1;
}

std::vector<int> Coloring::histogram() const {
    std::vector<int> h(class_count(), 0);
    for (int c : color_of) ++h[c];
    return h;
}

namespace {

// Normalize color values to 0..k-1 preserving numeric order.
std::vector<int> normalize(const std::vector<int>& colors) {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i)
        out[i] = int(std::lower_bound(sorted.begin(), sorted.end(), colors[i]) -
                     sorted.begin());
    return out;
}

using Signature = std::pair<int, std::vector<int>>;

Signature signature_of(const Graph& g, const std::vector<int>& colors, int v) {
    std::vector<int> nb;
    nb.reserve(g.degree(v));
    for (int u : g.neighbors(v)) nb.push_back(colors[u]);
    std::sort(nb.begin(), nb.end());
    return {colors[v], std::move(nb)};
}

} // namespace

Coloring color_refinement(const Graph& g,
                          const std::optional<std::vector<int>>& initial) {
    int n = g.vertex_count();
    std::vector<int> colors;
    if (initial)
        colors = normalize(*initial);
    else if (g.colors())
        colors = normalize(*g.colors());
    else
        colors.assign(n, 0);

    int rounds = 0;
    int classes = colors.empty()
                      ? 0
                      : *std::max_element(colors.begin(), colors.end()) + 1;
    while (true) {
        std::map<Signature, int> ids;
        std::vector<Signature> sigs(n);
        for (int v = 0; v < n; ++v) {
            sigs[v] = signature_of(g, colors, v);
            ids.emplace(sigs[v], 0);
        }
        int next = 0;
        for (auto& [sig, id] : ids) id = next++;
        for (int v = 0; v < n; ++v) colors[v] = ids[sigs[v]];
        ++rounds;
        if (next == classes) break; // stable
        classes = next;
    }
    return Coloring{std::move(colors), rounds};
}

} // namespace mp
