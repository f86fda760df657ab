#ifndef MP_GRAPH_HPP
#define MP_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace mp {

// A permutation of 0..n-1, stored as its image table.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);
Permutation identity_permutation(int n);
Permutation inverse_permutation(const Permutation& p);
// (p * q)(x) = p(q(x))
Permutation compose(const Permutation& p, const Permutation& q);

// Exact rational, normalized with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    double to_double() const { return double(num) / double(den); }
};

// Simple undirected graph on vertices 0..n-1 with optional vertex colors.
// Mutable while being built; all library constructions treat a finished
// Graph as immutable, so sharing across threads is safe.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return int(adj_.size()); }
    int edge_count() const { return edge_count_; }

    // Idempotent; rejects loops and out-of-range endpoints.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    // Sorted ascending.
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return int(adj_.at(v).size()); }

    const std::optional<std::vector<int>>& colors() const { return colors_; }
    void set_colors(std::vector<int> colors);
    void clear_colors() { colors_.reset(); }

    // Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    std::vector<int> degree_sequence() const; // sorted ascending

    bool operator==(const Graph& o) const;

private:
    std::vector<std::vector<int>> adj_;
    std::optional<std::vector<int>> colors_;
    int edge_count_ = 0;
};

Graph permute_vertices(const Graph& g, const Permutation& p);
Rational average_degree(const Graph& g);

// DIMACS: optional "c" comments, one "p edge <n> <m>" line, optional
// "n <v> <c>" color lines, then "e <u> <v>" lines, all 1-indexed.
void write_dimacs(const Graph& g, std::ostream& out,
                  const std::vector<std::string>& comments = {});
std::string write_dimacs(const Graph& g,
                         const std::vector<std::string>& comments = {});
Graph read_dimacs(std::istream& in);
Graph read_dimacs_string(const std::string& text);
Graph read_dimacs_file(const std::string& path);
void write_dimacs_file(const Graph& g, const std::string& path,
                       const std::vector<std::string>& comments = {});

// Plain adjacency list: "<n>\n" then one "u v" pair per line, 0-indexed.
void write_adjlist(const Graph& g, std::ostream& out);
Graph read_adjlist(std::istream& in);

enum class Relation { isomorphic, non_isomorphic, unknown };

std::string to_string(Relation r);

struct InstancePair {
    Graph g1;
    Graph g2;
    Relation relation = Relation::unknown;
    std::string construction;
    int n_parameter = 0;
    std::uint64_t seed = 0;
};

} // namespace mp

#endif
