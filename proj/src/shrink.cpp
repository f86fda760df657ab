#include "mp/shrink.hpp"

#include "mp/f2.hpp"
#include "mp/verify.hpp"

#include <map>
#include <set>

namespace mp {

std::pair<BipartiteBase, ReductionReport>
linalg_reduce(const BipartiteBase& b) {
    auto witness = find_even_witness(b);
    if (witness) throw EvenBaseError(*witness);

    // incremental elimination; keep a row iff it grows the row space
    F2Matrix basis(b.w_count, b.w_count);
    std::vector<int> pivot_of_row(b.w_count, -1);
    int basis_rows = 0;
    ReductionReport report;
    for (int v = 0; v < b.v_count; ++v) {
        F2Matrix row(1, b.w_count);
        for (int w : b.v_neighbors[v]) row.set(0, w, true);
        for (int r = 0; r < basis_rows; ++r)
            if (row.get(0, pivot_of_row[r])) {
                for (int c = 0; c < b.w_count; ++c)
                    if (basis.get(r, c)) row.set(0, c, !row.get(0, c));
            }
        int pivot = -1;
        for (int c = 0; c < b.w_count; ++c)
            if (row.get(0, c)) { pivot = c; break; }
        if (pivot < 0) continue;
        for (int c = 0; c < b.w_count; ++c)
            basis.set(basis_rows, c, row.get(0, c));
        pivot_of_row[basis_rows] = pivot;
        ++basis_rows;
        report.rows_kept.push_back(v);
        if (basis_rows == b.w_count) break;
    }

    BipartiteBase out;
    out.v_count = int(report.rows_kept.size());
    out.w_count = b.w_count;
    for (int v : report.rows_kept) out.v_neighbors.push_back(b.v_neighbors[v]);
    out.origin = b.origin;
    return {std::move(out), std::move(report)};
}

std::pair<Graph, ReductionReport> bypass_outer(const MultipedeLayout& m) {
    int inner = m.inner_count();
    Graph out(inner);
    ReductionReport report;
    report.bypassed = 2 * m.base.w_count;
    long long candidates = 0;
    for (int o = inner; o < m.graph.vertex_count(); ++o) {
        const auto& nb = m.graph.neighbors(o); // all inner by construction
        int d = int(nb.size());
        candidates += 1LL * d * (d - 1) / 2;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                out.add_edge(nb[i], nb[j]);
    }
    report.merged_parallel_edges = int(candidates - out.edge_count());
    return {std::move(out), std::move(report)};
}

std::pair<BipartiteBase, int> sample_odd_base(int n, std::uint64_t seed) {
    for (int retry = 0; retry <= kMaxOddRetries; ++retry) {
        Permutation sigma = random_edge_permutation(3 * n, seed + retry);
        BipartiteBase b = bipartite_base(n, sigma);
        if (is_odd(b)) return {std::move(b), retry};
    }
    throw std::runtime_error(
        "sample_odd_base: no odd base within " +
        std::to_string(kMaxOddRetries + 1) + " draws (n=" + std::to_string(n) +
        ", seed=" + std::to_string(seed) + ")");
}

std::vector<std::string> ShrunkenMeta::to_lines() const {
    std::vector<std::string> lines;
    lines.push_back("construction " + construction);
    lines.push_back("n " + std::to_string(n));
    lines.push_back("seed " + std::to_string(seed));
    lines.push_back("retries " + std::to_string(retries));
    std::string tw = "twists";
    for (auto [v, w] : twists)
        tw += " " + std::to_string(v) + ":" + std::to_string(w);
    lines.push_back(tw);
    lines.push_back("vertices " + std::to_string(vertices));
    lines.push_back("edges " + std::to_string(edges));
    lines.push_back("average_degree " + std::to_string(avg_degree.num) + "/" +
                    std::to_string(avg_degree.den));
    return lines;
}

std::pair<Graph, ShrunkenMeta> shrunken_multipede(int n, std::uint64_t seed,
                                                  const TwistSet& twists) {
    if (n < 4) throw std::invalid_argument("shrunken_multipede: n < 4");
    auto [base, retries] = sample_odd_base(n, seed);
    auto [reduced, lin_report] = linalg_reduce(base);
    MultipedeLayout layout = multipede(reduced, twists);
    auto [graph, bypass_report] = bypass_outer(layout);

    ShrunkenMeta meta;
    meta.n = n;
    meta.seed = seed;
    meta.retries = retries;
    meta.twists = twists.swaps;
    meta.vertices = graph.vertex_count();
    meta.edges = graph.edge_count();
    meta.avg_degree = average_degree(graph);
    return {std::move(graph), std::move(meta)};
}

InstancePair shrunken_pair(int n, std::uint64_t seed, bool certify) {
    InstancePair p;
    p.construction = "shrunken";
    p.n_parameter = n;
    p.seed = seed;
    p.g1 = shrunken_multipede(n, seed).first;
    std::uint64_t mate = seed + kMateSeedStride;
    for (;;) {
        p.g2 = shrunken_multipede(n, mate).first;
        if (!certify) {
            p.relation = Relation::unknown;
            return p;
        }
        if (!are_isomorphic(p.g1, p.g2)) {
            p.relation = Relation::non_isomorphic;
            return p;
        }
        mate += kMateSeedStride;
    }
}

} // namespace mp
