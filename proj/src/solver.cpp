#include "mp/verify.hpp"

#include <algorithm>
#include <utility>

namespace mp {

bool is_automorphism(const Graph& g, const Permutation& p) {
    return is_isomorphism(g, g, p);
}

bool is_isomorphism(const Graph& g1, const Graph& g2, const Permutation& p) {
    if (g1.vertex_count() != g2.vertex_count() ||
        g1.edge_count() != g2.edge_count())
        return false;
    if (int(p.size()) != g1.vertex_count() || !is_permutation(p)) return false;
    for (auto [u, v] : g1.edges())
        if (!g2.has_edge(p[u], p[v])) return false;
    if (g1.colors() || g2.colors()) {
        if (!g1.colors() || !g2.colors()) return false;
        for (int v = 0; v < g1.vertex_count(); ++v)
            if ((*g1.colors())[v] != (*g2.colors())[p[v]]) return false;
    }
    return true;
}

namespace {

// Lockstep individualization-refinement over a pair of graphs. Color ids are
// kept identical across the pair, so equal ids mean "still possibly
// corresponding". Automorphism search runs the pair (g, g).
class PairSearch {
public:
    PairSearch(const Graph& g1, const Graph& g2, bool count_all,
               bool skip_identity)
        : g1_(g1), g2_(g2), n_(g1.vertex_count()), count_all_(count_all),
          skip_identity_(skip_identity) {}

    std::uint64_t nodes = 0;
    std::uint64_t leaf_count = 0;
    std::optional<Permutation> result;

    void run() {
        std::vector<int> c1 = initial_colors(g1_);
        std::vector<int> c2 = initial_colors(g2_);
        search(std::move(c1), std::move(c2));
    }

private:
    const Graph& g1_;
    const Graph& g2_;
    int n_;
    bool count_all_;
    bool skip_identity_;
    bool done_ = false;

    static std::vector<int> initial_colors(const Graph& g) {
        if (g.colors()) return *g.colors();
        return std::vector<int>(g.vertex_count(), 0);
    }

    // Refine both colorings to the joint stable partition. Returns false
    // when the class histograms diverge (no correspondence possible).
    bool joint_refine(std::vector<int>& c1, std::vector<int>& c2) const {
        // key = (old color, sorted neighbor colors); tag 0/1 selects graph
        std::vector<std::vector<int>> keys(2 * n_);
        std::vector<int> order(2 * n_);
        int classes = -1;
        while (true) {
            for (int t = 0; t < 2; ++t) {
                const Graph& g = t == 0 ? g1_ : g2_;
                const std::vector<int>& c = t == 0 ? c1 : c2;
                for (int v = 0; v < n_; ++v) {
                    auto& key = keys[t * n_ + v];
                    key.clear();
                    key.push_back(c[v]);
                    for (int u : g.neighbors(v)) key.push_back(c[u]);
                    std::sort(key.begin() + 1, key.end());
                }
            }
            for (int i = 0; i < 2 * n_; ++i) order[i] = i;
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return keys[a] < keys[b]; });
            int next = -1;
            int bal = 0; // (#g1 minus #g2) within the current class
            bool ok = true;
            for (int idx = 0; idx < 2 * n_; ++idx) {
                int i = order[idx];
                if (idx == 0 || keys[i] != keys[order[idx - 1]]) {
                    if (bal != 0) { ok = false; break; }
                    ++next;
                }
                bal += i < n_ ? 1 : -1;
                if (i < n_) c1[i] = next; else c2[i - n_] = next;
            }
            if (!ok || bal != 0) return false;
            ++next;
            if (next == classes) return true; // stable
            classes = next;
        }
    }

    void search(std::vector<int> c1, std::vector<int> c2) {
        if (done_) return;
        ++nodes;
        if (n_ == 0) {
            handle_leaf(c1, c2);
            return;
        }
        if (!joint_refine(c1, c2)) return;

        // target cell: smallest non-singleton class, lowest color id
        int classes = *std::max_element(c1.begin(), c1.end()) + 1;
        std::vector<int> sizes(classes, 0);
        for (int v = 0; v < n_; ++v) ++sizes[c1[v]];
        int target = -1;
        for (int c = 0; c < classes; ++c)
            if (sizes[c] > 1 && (target < 0 || sizes[c] < sizes[target]))
                target = c;

        if (target < 0) {
            handle_leaf(c1, c2);
            return;
        }
        int v = 0;
        while (c1[v] != target) ++v;
        for (int u = 0; u < n_; ++u) {
            if (c2[u] != target) continue;
            std::vector<int> d1 = c1, d2 = c2;
            d1[v] = classes; // fresh color, identical in both copies
            d2[u] = classes;
            search(std::move(d1), std::move(d2));
            if (done_) return;
        }
    }

    void handle_leaf(const std::vector<int>& c1, const std::vector<int>& c2) {
        Permutation p(n_);
        std::vector<int> by_color(n_, -1);
        for (int u = 0; u < n_; ++u) by_color[c2[u]] = u;
        for (int v = 0; v < n_; ++v) p[v] = by_color[c1[v]];
        if (!is_isomorphism(g1_, g2_, p)) return;
        ++leaf_count;
        bool identity = skip_identity_ && p == identity_permutation(n_);
        if (!identity && !result) {
            result = p;
            if (!count_all_) done_ = true;
        }
    }
};

} // namespace

AutReport find_automorphism(const Graph& g, bool count_order,
                            int vertex_limit) {
    if (g.vertex_count() > vertex_limit)
        throw CapabilityError("find_automorphism: graph exceeds vertex limit");
    PairSearch s(g, g, count_order, /*skip_identity=*/true);
    s.run();
    AutReport rep;
    rep.nodes_explored = s.nodes;
    rep.witness = s.result;
    rep.is_rigid = !s.result.has_value();
    if (count_order) rep.group_order = s.leaf_count;
    return rep;
}

std::optional<Permutation> are_isomorphic(const Graph& g1, const Graph& g2,
                                          int vertex_limit,
                                          std::uint64_t* nodes_explored) {
    if (g1.vertex_count() + g2.vertex_count() > 2 * vertex_limit)
        throw CapabilityError("are_isomorphic: graphs exceed vertex limit");
    if (g1.vertex_count() != g2.vertex_count() ||
        g1.edge_count() != g2.edge_count()) {
        if (nodes_explored) *nodes_explored = 0;
        return std::nullopt;
    }
    PairSearch s(g1, g2, /*count_all=*/false, /*skip_identity=*/false);
    s.run();
    if (nodes_explored) *nodes_explored = s.nodes;
    return s.result;
}

} // namespace mp
