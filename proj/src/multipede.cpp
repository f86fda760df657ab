#include "mp/multipede.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mp {

Graph cfi_gadget_x3() {
    Graph g(10);
    for (int t = 0; t < 4; ++t)
        for (int j = 0; j < 3; ++j) {
            bool b = (kEvenTriples[t] >> j) & 1;
            g.add_edge(t, 4 + 2 * j + (b ? 1 : 0));
        }
    return g;
}

MultipedeLayout multipede(const BipartiteBase& b, const TwistSet& twists) {
    std::set<std::pair<int, int>> twisted(twists.swaps.begin(),
                                          twists.swaps.end());
    for (auto [v, w] : twisted) {
        if (v < 0 || v >= b.v_count)
            throw std::invalid_argument("multipede: twist vertex out of range");
        const auto& nb = b.v_neighbors[v];
        if (std::find(nb.begin(), nb.end(), w) == nb.end())
            throw std::invalid_argument("multipede: twist references non-edge");
    }
    // duplicate (v,w) entries cancel pairwise
    std::set<std::pair<int, int>> effective;
    for (auto [v, w] : twists.swaps) {
        auto it = effective.find({v, w});
        if (it == effective.end()) effective.insert({v, w});
        else effective.erase(it);
    }

    MultipedeLayout m;
    m.base = b;
    m.graph = Graph(4 * b.v_count + 2 * b.w_count);
    for (int v = 0; v < b.v_count; ++v) {
        const auto& nb = b.v_neighbors[v]; // ascending = fixed neighbor order
        for (int t = 0; t < 4; ++t)
            for (int j = 0; j < 3; ++j) {
                bool use_b = (kEvenTriples[t] >> j) & 1;
                if (effective.count({v, nb[j]})) use_b = !use_b;
                int outer = use_b ? m.outer_b(nb[j]) : m.outer_a(nb[j]);
                m.graph.add_edge(m.inner_of(v, t), outer);
            }
    }
    return m;
}

namespace {

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!seen[u]) {
                seen[u] = true;
                ++count;
                stack.push_back(u);
            }
    }
    return count == n;
}

} // namespace

Graph cfi_classic(const Graph& g,
                  const std::vector<std::pair<int, int>>& twisted_edges) {
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 3)
            throw std::invalid_argument("cfi_classic: base not 3-regular");
    if (!is_connected(g))
        throw std::invalid_argument("cfi_classic: base not connected");

    auto norm = [](int u, int v) {
        return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    };
    std::set<std::pair<int, int>> twisted;
    for (auto [u, v] : twisted_edges) {
        if (!g.has_edge(u, v))
            throw std::invalid_argument("cfi_classic: twisted non-edge");
        twisted.insert(norm(u, v));
    }

    // block of 10 per base vertex: inner 0..3, then a,b per slot
    auto slot_of = [&](int v, int w) {
        const auto& nb = g.neighbors(v);
        return int(std::find(nb.begin(), nb.end(), w) - nb.begin());
    };
    auto a_of = [&](int v, int slot) { return 10 * v + 4 + 2 * slot; };
    auto b_of = [&](int v, int slot) { return 10 * v + 5 + 2 * slot; };

    Graph out(10 * n);
    for (int v = 0; v < n; ++v)
        for (int t = 0; t < 4; ++t)
            for (int j = 0; j < 3; ++j) {
                bool b = (kEvenTriples[t] >> j) & 1;
                out.add_edge(10 * v + t, b ? b_of(v, j) : a_of(v, j));
            }
    for (auto [v, w] : g.edges()) {
        int sv = slot_of(v, w), sw = slot_of(w, v);
        if (twisted.count({v, w})) {
            out.add_edge(a_of(v, sv), b_of(w, sw));
            out.add_edge(b_of(v, sv), a_of(w, sw));
        } else {
            out.add_edge(a_of(v, sv), a_of(w, sw));
            out.add_edge(b_of(v, sv), b_of(w, sw));
        }
    }
    return out;
}

InstancePair cfi_pair(const Graph& g) {
    InstancePair p;
    p.g1 = cfi_classic(g, {});
    p.g2 = cfi_classic(g, {g.edges().front()});
    p.relation = Relation::non_isomorphic;
    p.construction = "cfi";
    p.n_parameter = g.vertex_count();
    return p;
}

} // namespace mp
