#include "mp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mp {

bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (int x : p) {
        if (x < 0 || x >= int(p.size()) || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

Permutation identity_permutation(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation inverse_permutation(const Permutation& p) {
    Permutation inv(p.size());
    for (int i = 0; i < int(p.size()); ++i) inv[p[i]] = i;
    return inv;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    Permutation r(p.size());
    for (int i = 0; i < int(p.size()); ++i) r[i] = p[q[i]];
    return r;
}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.resize(n);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("add_edge: vertex out of range");
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return; // already present
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    const auto& au = adj_.at(u);
    return std::binary_search(au.begin(), au.end(), v);
}

void Graph::set_colors(std::vector<int> colors) {
    if (int(colors.size()) != vertex_count())
        throw std::invalid_argument("set_colors: size mismatch");
    for (int c : colors)
        if (c < 0) throw std::invalid_argument("set_colors: negative color");
    colors_ = std::move(colors);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(vertex_count());
    for (int v = 0; v < vertex_count(); ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

bool Graph::operator==(const Graph& o) const {
    return adj_ == o.adj_ && colors_ == o.colors_;
}

Graph permute_vertices(const Graph& g, const Permutation& p) {
    if (int(p.size()) != g.vertex_count())
        throw std::invalid_argument("permute_vertices: length mismatch");
    if (!is_permutation(p))
        throw std::invalid_argument("permute_vertices: not a permutation");
    Graph h(g.vertex_count());
    for (auto [u, v] : g.edges()) h.add_edge(p[u], p[v]);
    if (g.colors()) {
        std::vector<int> c(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) c[p[v]] = (*g.colors())[v];
        h.set_colors(std::move(c));
    }
    return h;
}

Rational average_degree(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("average_degree: empty graph");
    return Rational(2LL * g.edge_count(), g.vertex_count());
}

void write_dimacs(const Graph& g, std::ostream& out,
                  const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    if (g.colors())
        for (int v = 0; v < g.vertex_count(); ++v)
            out << "n " << v + 1 << " " << (*g.colors())[v] << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

std::string write_dimacs(const Graph& g,
                         const std::vector<std::string>& comments) {
    std::ostringstream os;
    write_dimacs(g, os, comments);
    return os.str();
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw std::runtime_error("dimacs parse error at line " +
                             std::to_string(line) + ": " + msg);
}

} // namespace

Graph read_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_p = false;
    int n = 0, m = 0, edges_seen = 0;
    Graph g;
    std::vector<int> colors;
    bool have_colors = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char kind;
        ls >> kind;
        if (kind == 'p') {
            if (have_p) parse_fail(lineno, "duplicate p line");
            std::string fmt;
            ls >> fmt >> n >> m;
            if (!ls || fmt != "edge" || n < 0 || m < 0)
                parse_fail(lineno, "malformed p line");
            have_p = true;
            g = Graph(n);
            colors.assign(n, 0);
        } else if (kind == 'n') {
            if (!have_p) parse_fail(lineno, "n line before p line");
            int v, c;
            ls >> v >> c;
            if (!ls || v < 1 || v > n || c < 0)
                parse_fail(lineno, "malformed n line");
            colors[v - 1] = c;
            have_colors = true;
        } else if (kind == 'e') {
            if (!have_p) parse_fail(lineno, "e line before p line");
            int u, v;
            ls >> u >> v;
            if (!ls || u < 1 || u > n || v < 1 || v > n || u == v)
                parse_fail(lineno, "malformed e line");
            g.add_edge(u - 1, v - 1);
            ++edges_seen;
        } else {
            parse_fail(lineno, "unknown line kind");
        }
    }
    if (!have_p) parse_fail(lineno, "missing p line");
    if (edges_seen != m) parse_fail(lineno, "edge count mismatch with header");
    if (have_colors) g.set_colors(std::move(colors));
    return g;
}

Graph read_dimacs_string(const std::string& text) {
    std::istringstream is(text);
    return read_dimacs(is);
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_dimacs(in);
}

void write_dimacs_file(const Graph& g, const std::string& path,
                       const std::vector<std::string>& comments) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_dimacs(g, out, comments);
}

void write_adjlist(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph read_adjlist(std::istream& in) {
    int n;
    if (!(in >> n) || n < 0) throw std::runtime_error("adjlist: bad header");
    Graph g(n);
    int u, v;
    while (in >> u >> v) g.add_edge(u, v);
    return g;
}

std::string to_string(Relation r) {
    switch (r) {
    case Relation::isomorphic: return "isomorphic";
    case Relation::non_isomorphic: return "non_isomorphic";
    default: return "unknown";
    }
}

} // namespace mp
