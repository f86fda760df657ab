#include "mp/groups.hpp"

#include "mp/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace mp {

bool PermGroup::contains(const Permutation& p) const {
    return std::find(elements.begin(), elements.end(), p) != elements.end();
}

bool PermGroup::is_group() const {
    if (!contains(identity_permutation(degree))) return false;
    for (const auto& a : elements) {
        if (int(a.size()) != degree || !is_permutation(a)) return false;
        if (!contains(inverse_permutation(a))) return false;
        for (const auto& b : elements)
            if (!contains(compose(a, b))) return false;
    }
    return true;
}

bool PermGroup::is_abelian() const {
    for (const auto& a : elements)
        for (const auto& b : elements)
            if (compose(a, b) != compose(b, a)) return false;
    return true;
}

bool PermGroup::is_transitive() const {
    if (degree == 0) return false;
    std::set<int> orbit;
    for (const auto& g : elements) orbit.insert(g[0]);
    return int(orbit.size()) == degree;
}

PermGroup cyclic_group(int k) {
    if (k < 2) throw std::invalid_argument("cyclic_group: k < 2");
    PermGroup g;
    g.degree = k;
    for (int i = 0; i < k; ++i) {
        Permutation p(k);
        for (int x = 0; x < k; ++x) p[x] = (x + i) % k;
        g.elements.push_back(std::move(p));
    }
    return g;
}

PermGroup dihedral_group(int k) {
    if (k < 3) throw std::invalid_argument("dihedral_group: k < 3");
    PermGroup g = cyclic_group(k);
    for (int i = 0; i < k; ++i) {
        Permutation p(k);
        for (int x = 0; x < k; ++x) p[x] = ((i - x) % k + k) % k;
        g.elements.push_back(std::move(p));
    }
    return g;
}

namespace {

Graph colored_gadget_graph(int n_classes, int class_size, int inner_count) {
    Graph g(n_classes * class_size + inner_count);
    std::vector<int> colors(g.vertex_count(), 0);
    for (int i = 0; i < n_classes; ++i)
        for (int j = 0; j < class_size; ++j) colors[i * class_size + j] = i + 1;
    g.set_colors(std::move(colors));
    return g;
}

} // namespace

Gadget abelian_gadget(const PermGroup& gamma) {
    if (!gamma.is_group())
        throw std::invalid_argument("abelian_gadget: not a group");
    if (!gamma.is_abelian())
        throw std::invalid_argument("abelian_gadget: group not abelian");
    if (!gamma.is_transitive())
        throw std::invalid_argument("abelian_gadget: group not transitive");

    int n = gamma.degree;
    // triples (g1, g2, (g1 g2)^-1) in element-index order
    std::vector<std::array<Permutation, 3>> triples;
    for (const auto& g1 : gamma.elements)
        for (const auto& g2 : gamma.elements)
            triples.push_back({g1, g2, inverse_permutation(compose(g1, g2))});

    Gadget gad;
    gad.graph = colored_gadget_graph(3, n, int(triples.size()));
    for (int i = 0; i < 3; ++i) {
        std::vector<int> cls(n);
        for (int j = 0; j < n; ++j) cls[j] = i * n + j;
        gad.outer_classes.push_back(std::move(cls));
    }
    for (int t = 0; t < int(triples.size()); ++t) {
        int m = 3 * n + t;
        gad.inner.push_back(m);
        for (int i = 0; i < 3; ++i) gad.graph.add_edge(m, i * n + triples[t][i][0]);
    }
    gad.realized = gamma;
    return gad;
}

Gadget dihedral_gadget(int k) {
    if (k < 3) throw std::invalid_argument("dihedral_gadget: k < 3");
    PermGroup rotations = cyclic_group(k);
    Permutation reflection(k);
    for (int x = 0; x < k; ++x) reflection[x] = (k - x) % k;
    std::vector<Permutation> h = {identity_permutation(k), reflection};

    // enumerate (a h, b h, c h) with rotations a,b,c, abc = id
    std::vector<std::array<Permutation, 3>> triples;
    for (const auto& hh : h)
        for (const auto& a : rotations.elements)
            for (const auto& b : rotations.elements) {
                Permutation c = inverse_permutation(compose(a, b));
                triples.push_back(
                    {compose(a, hh), compose(b, hh), compose(c, hh)});
            }

    // neighborhood of m_g in class i is {g_i(0), g_i(1)}; merge twins,
    // keeping the first triple per signature
    using Sig = std::array<std::pair<int, int>, 3>;
    auto sig_of = [](const std::array<Permutation, 3>& g) {
        Sig s;
        for (int i = 0; i < 3; ++i)
            s[i] = std::minmax(g[i][0], g[i][1]);
        return s;
    };
    std::set<Sig> seen;
    std::vector<int> survivors;
    for (int t = 0; t < int(triples.size()); ++t)
        if (seen.insert(sig_of(triples[t])).second) survivors.push_back(t);

    Gadget gad;
    gad.graph = colored_gadget_graph(3, k, int(survivors.size()));
    for (int i = 0; i < 3; ++i) {
        std::vector<int> cls(k);
        for (int j = 0; j < k; ++j) cls[j] = i * k + j;
        gad.outer_classes.push_back(std::move(cls));
    }
    for (int s = 0; s < int(survivors.size()); ++s) {
        int m = 3 * k + s;
        gad.inner.push_back(m);
        const auto& g = triples[survivors[s]];
        for (int i = 0; i < 3; ++i) {
            gad.graph.add_edge(m, i * k + g[i][0]);
            gad.graph.add_edge(m, i * k + g[i][1]);
        }
    }
    gad.realized = dihedral_group(k);
    return gad;
}

bool TripleGroup::is_group() const {
    std::set<std::array<Permutation, 3>> all(triples.begin(), triples.end());
    if (triples.empty()) return false;
    int deg[3];
    for (int i = 0; i < 3; ++i) deg[i] = int(triples[0][i].size());
    std::array<Permutation, 3> id = {identity_permutation(deg[0]),
                                     identity_permutation(deg[1]),
                                     identity_permutation(deg[2])};
    if (!all.count(id)) return false;
    for (const auto& a : triples) {
        std::array<Permutation, 3> inv = {inverse_permutation(a[0]),
                                          inverse_permutation(a[1]),
                                          inverse_permutation(a[2])};
        if (!all.count(inv)) return false;
        for (const auto& b : triples) {
            std::array<Permutation, 3> ab = {
                compose(a[0], b[0]), compose(a[1], b[1]), compose(a[2], b[2])};
            if (!all.count(ab)) return false;
        }
    }
    return true;
}

TwoFactorDiagnostics two_factor_diagnostics(const TripleGroup& delta) {
    if (!delta.is_group())
        throw std::invalid_argument("two_factor_diagnostics: not a group");
    auto factor = [&](int i) {
        std::set<Permutation> s;
        for (const auto& t : delta.triples) s.insert(t[i]);
        return s;
    };
    auto pair_proj = [&](int i, int j) {
        std::set<std::pair<Permutation, Permutation>> s;
        for (const auto& t : delta.triples) s.insert({t[i], t[j]});
        return s;
    };
    std::size_t f1 = factor(0).size(), f2 = factor(1).size(),
                f3 = factor(2).size();
    std::size_t p12 = pair_proj(0, 1).size(), p13 = pair_proj(0, 2).size(),
                p23 = pair_proj(1, 2).size();
    std::size_t order = delta.order();
    return TwoFactorDiagnostics{
        p12 == order, p13 == order, p23 == order,
        p12 == f1 * f2, p13 == f1 * f3, p23 == f2 * f3};
}

namespace {

// H1 acting on [off, off+deg), embedded into a degree-d permutation
Permutation embed(const Permutation& p, int off, int total) {
    Permutation out = identity_permutation(total);
    for (int x = 0; x < int(p.size()); ++x) out[off + x] = off + p[x];
    return out;
}

} // namespace

TripleGroup unentwined_triple_group(const PermGroup& h1, const PermGroup& h2,
                                    const PermGroup& h3) {
    int total = std::max({h2.degree + h3.degree, h1.degree + h3.degree,
                          h1.degree + h2.degree});
    TripleGroup delta;
    for (const auto& a : h1.elements)
        for (const auto& b : h2.elements)
            for (const auto& c : h3.elements)
                delta.triples.push_back(
                    {compose(embed(b, 0, total), embed(c, h2.degree, total)),
                     compose(embed(a, 0, total), embed(c, h1.degree, total)),
                     compose(embed(a, 0, total), embed(b, h1.degree, total))});
    return delta;
}

TripleGroup full_product_triple_group(const PermGroup& gamma) {
    TripleGroup delta;
    for (const auto& a : gamma.elements)
        for (const auto& b : gamma.elements)
            for (const auto& c : gamma.elements)
                delta.triples.push_back({a, b, c});
    return delta;
}

TripleGroup abelian_triple_group(const PermGroup& gamma) {
    TripleGroup delta;
    for (const auto& a : gamma.elements)
        for (const auto& b : gamma.elements)
            delta.triples.push_back({a, b, inverse_permutation(compose(a, b))});
    return delta;
}

namespace {

// Complete enumeration of color-preserving automorphisms; outer vertices are
// assigned first so inner images are mostly forced.
void enumerate_automorphisms(const Graph& g, const std::vector<int>& order,
                             std::vector<int>& image, std::vector<bool>& used,
                             std::size_t depth,
                             const std::function<void(const Permutation&)>& cb) {
    if (depth == order.size()) {
        cb(image);
        return;
    }
    int v = order[depth];
    const auto& colors = *g.colors();
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (used[u] || colors[u] != colors[v] || g.degree(u) != g.degree(v))
            continue;
        bool ok = true;
        for (std::size_t d = 0; d < depth && ok; ++d) {
            int w = order[d];
            if (g.has_edge(v, w) != g.has_edge(u, image[w])) ok = false;
        }
        if (!ok) continue;
        image[v] = u;
        used[u] = true;
        enumerate_automorphisms(g, order, image, used, depth + 1, cb);
        used[u] = false;
    }
}

} // namespace

TripleGroup induced_outer_group(const Gadget& gadget, int vertex_limit) {
    if (gadget.outer_classes.size() != 3)
        throw std::invalid_argument("induced_outer_group: need 3 classes");
    const Graph& g = gadget.graph;
    if (g.vertex_count() > vertex_limit)
        throw CapabilityError("induced_outer_group: gadget too large");
    if (!g.colors())
        throw std::invalid_argument("induced_outer_group: gadget uncolored");

    std::vector<int> order;
    for (const auto& cls : gadget.outer_classes)
        order.insert(order.end(), cls.begin(), cls.end());
    order.insert(order.end(), gadget.inner.begin(), gadget.inner.end());
    if (int(order.size()) != g.vertex_count())
        throw std::invalid_argument("induced_outer_group: bad gadget layout");

    int n = gadget.class_size();
    std::set<std::array<Permutation, 3>> induced;
    std::vector<int> image(g.vertex_count(), -1);
    std::vector<bool> used(g.vertex_count(), false);
    enumerate_automorphisms(
        g, order, image, used, 0, [&](const Permutation& p) {
            if (!is_automorphism(g, p)) return; // paranoia; cheap at this size
            std::array<Permutation, 3> t;
            for (int i = 0; i < 3; ++i) {
                const auto& cls = gadget.outer_classes[i];
                std::map<int, int> pos;
                for (int j = 0; j < n; ++j) pos[cls[j]] = j;
                Permutation q(n);
                for (int j = 0; j < n; ++j) q[j] = pos.at(p[cls[j]]);
                t[i] = std::move(q);
            }
            induced.insert(std::move(t));
        });

    TripleGroup out;
    out.triples.assign(induced.begin(), induced.end());
    return out;
}

Graph generalized_cfi(const Graph& g, const Gadget& gadget,
                      const Permutation& gamma_twist) {
    int bn = g.vertex_count();
    for (int v = 0; v < bn; ++v)
        if (g.degree(v) != 3)
            throw std::invalid_argument("generalized_cfi: base not 3-regular");
    if (gadget.outer_classes.size() != 3)
        throw std::invalid_argument("generalized_cfi: gadget needs 3 classes");
    int n = gadget.class_size();
    for (const auto& cls : gadget.outer_classes)
        if (int(cls.size()) != n)
            throw std::invalid_argument("generalized_cfi: unequal classes");
    if (int(gamma_twist.size()) != n || !is_permutation(gamma_twist))
        throw std::invalid_argument("generalized_cfi: bad twist permutation");

    int block = gadget.graph.vertex_count();
    Graph out(bn * block);
    std::vector<int> colors(out.vertex_count());
    for (int v = 0; v < bn; ++v) {
        for (auto [x, y] : gadget.graph.edges())
            out.add_edge(v * block + x, v * block + y);
        for (int x = 0; x < block; ++x)
            colors[v * block + x] = (*gadget.graph.colors())[x];
    }
    out.set_colors(std::move(colors));

    auto slot_of = [&](int v, int w) {
        const auto& nb = g.neighbors(v);
        return int(std::find(nb.begin(), nb.end(), w) - nb.begin());
    };
    auto edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [v, w] = edges[e];
        bool last = e + 1 == edges.size();
        const auto& cv = gadget.outer_classes[slot_of(v, w)];
        const auto& cw = gadget.outer_classes[slot_of(w, v)];
        for (int j = 0; j < n; ++j) {
            int target = last ? gamma_twist[j] : j;
            out.add_edge(v * block + cv[j], w * block + cw[target]);
        }
    }
    return out;
}

} // namespace mp
