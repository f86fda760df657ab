// mpbench: generate, verify, and benchmark hard graph-isomorphism instances.

#include "mp/base.hpp"
#include "mp/f2.hpp"
#include "mp/graph.hpp"
#include "mp/groups.hpp"
#include "mp/multipede.hpp"
#include "mp/shrink.hpp"
#include "mp/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fcntl.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

namespace {

using namespace mp;

// ---------------------------------------------------------------- generate

struct BuiltInstance {
    Graph g1;
    std::optional<Graph> g2;
    Relation relation = Relation::unknown;
    std::vector<std::string> meta;
};

Permutation seeded_vertex_permutation(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    Permutation p = identity_permutation(n);
    for (int i = n - 1; i > 0; --i) {
        int j = int(rng() % std::uint64_t(i + 1));
        std::swap(p[i], p[j]);
    }
    return p;
}

// One a/b twist at the first slot of V-side vertex 0.
TwistSet first_slot_twist(const BipartiteBase& b) {
    return TwistSet{{{0, b.v_neighbors.at(0)[0]}}};
}

void append_base_meta(std::vector<std::string>& meta, const std::string& cons,
                      int n, std::uint64_t seed, int retries) {
    meta.push_back("construction " + cons);
    meta.push_back("n " + std::to_string(n));
    meta.push_back("seed " + std::to_string(seed));
    meta.push_back("retries " + std::to_string(retries));
}

BuiltInstance build_instance(const std::string& construction, int n,
                             std::uint64_t seed, const std::string& pair_mode) {
    if (n < 4) throw CLI::ValidationError("--n", "n must be >= 4");
    bool noniso = pair_mode == "noniso";
    BuiltInstance out;

    auto finish_pair = [&](Graph g) {
        out.g1 = std::move(g);
        if (pair_mode == "iso") {
            out.g2 = permute_vertices(
                out.g1,
                seeded_vertex_permutation(out.g1.vertex_count(), seed));
            out.relation = Relation::isomorphic;
        } else if (pair_mode == "single") {
            out.relation = Relation::unknown;
        }
    };

    if (construction == "multipede" || construction == "multipede-linalg" ||
        construction == "multipede-bypass" || construction == "shrunken") {
        bool reduced_kind = construction == "multipede-linalg" ||
                            construction == "shrunken";
        auto build = [&](std::uint64_t s, const TwistSet& tw, int* retries) {
            auto [base, r] = sample_odd_base(n, s);
            if (retries) *retries = r;
            BipartiteBase working =
                reduced_kind ? linalg_reduce(base).first : std::move(base);
            MultipedeLayout layout = multipede(working, tw);
            if (construction == "multipede-bypass" ||
                construction == "shrunken")
                return bypass_outer(layout).first;
            return layout.graph;
        };
        int retries = 0;
        finish_pair(build(seed, {}, &retries));
        append_base_meta(out.meta, construction, n, seed, retries);
        if (noniso && !reduced_kind) {
            // one a/b slot twist; certified non-isomorphic within solver reach
            auto [base, r] = sample_odd_base(n, seed);
            TwistSet tw = first_slot_twist(base);
            out.g2 = build(seed, tw, nullptr);
            out.relation = n <= 8 && !are_isomorphic(out.g1, *out.g2)
                               ? Relation::non_isomorphic
                               : Relation::unknown;
            out.meta.push_back("twist " + std::to_string(tw.swaps[0].first) +
                               ":" + std::to_string(tw.swaps[0].second));
        } else if (noniso) {
            // a slot twist on a reduced base is always absorbable (the
            // reduced incidence matrix is invertible over GF(2)), so the
            // mate comes from an independent odd base instead
            std::uint64_t mate = seed + kMateSeedStride;
            out.g2 = build(mate, {}, nullptr);
            while (n <= 10 && are_isomorphic(out.g1, *out.g2)) {
                mate += kMateSeedStride;
                out.g2 = build(mate, {}, nullptr);
            }
            out.relation =
                n <= 10 ? Relation::non_isomorphic : Relation::unknown;
            out.meta.push_back("mate_seed " + std::to_string(mate));
        }
    } else if (construction == "cfi") {
        Graph base = cycle_with_diagonals(n);
        finish_pair(cfi_classic(base, {}));
        if (noniso) {
            out.g2 = cfi_classic(base, {base.edges().front()});
            out.relation = Relation::non_isomorphic;
        }
        append_base_meta(out.meta, construction, n, seed, 0);
    } else if (construction.rfind("abelian-", 0) == 0 ||
               construction.rfind("dihedral-", 0) == 0) {
        bool abelian = construction[0] == 'a';
        int k = std::stoi(construction.substr(construction.find('-') + 1));
        Gadget gadget =
            abelian ? abelian_gadget(cyclic_group(k)) : dihedral_gadget(k);
        Graph base = cycle_with_diagonals(n);
        int cls = gadget.class_size();
        Permutation shift(cls);
        for (int x = 0; x < cls; ++x) shift[x] = (x + 1) % cls;
        finish_pair(generalized_cfi(base, gadget,
                                    identity_permutation(cls)));
        if (noniso) {
            out.g2 = generalized_cfi(base, gadget, shift);
            // certified within solver reach, otherwise left unknown
            if (out.g1.vertex_count() <= 200)
                out.relation = are_isomorphic(out.g1, *out.g2)
                                   ? Relation::isomorphic
                                   : Relation::non_isomorphic;
        }
        append_base_meta(out.meta, construction, n, seed, 0);
    } else {
        throw CLI::ValidationError("--construction",
                                   "unknown construction " + construction);
    }

    out.meta.push_back("pair " + pair_mode);
    out.meta.push_back("relation " + to_string(out.relation));
    out.meta.push_back("vertices " + std::to_string(out.g1.vertex_count()));
    out.meta.push_back("edges " + std::to_string(out.g1.edge_count()));
    Rational d = average_degree(out.g1);
    out.meta.push_back("average_degree " + std::to_string(d.num) + "/" +
                       std::to_string(d.den));
    return out;
}

void write_graph_file(const Graph& g, const std::string& path,
                      const std::string& format,
                      const std::vector<std::string>& comments) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    if (format == "dimacs") write_dimacs(g, out, comments);
    else write_adjlist(g, out);
}

int cmd_generate(const std::string& construction, int n, std::uint64_t seed,
                 const std::string& pair_mode, const std::string& format,
                 const std::string& out_dir) {
    BuiltInstance inst = build_instance(construction, n, seed, pair_mode);
    std::string ext = format == "dimacs" ? ".dimacs" : ".adjlist";
    std::string prefix = out_dir + "/" + construction + "-n" +
                         std::to_string(n) + "-s" + std::to_string(seed);

    std::vector<std::string> comments = inst.meta;
    if (inst.g2) {
        write_graph_file(inst.g1, prefix + "-g1" + ext, format, comments);
        write_graph_file(*inst.g2, prefix + "-g2" + ext, format, comments);
    } else {
        write_graph_file(inst.g1, prefix + ext, format, comments);
    }
    std::ofstream meta(prefix + "-meta.txt", std::ios::binary);
    for (const auto& line : inst.meta) meta << line << "\n";
    std::cout << prefix << (inst.g2 ? " (pair)" : "") << " written\n";
    return 0;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& construction, int n, std::uint64_t seed,
               const std::string& file) {
    if (!file.empty()) {
        Graph g = read_dimacs_file(file);
        std::cout << "vertices " << g.vertex_count() << "\n"
                  << "edges " << g.edge_count() << "\n";
        Rational d = average_degree(g);
        std::cout << "average_degree " << d.num << "/" << d.den << "\n";
        try {
            AutReport r = find_automorphism(g);
            std::cout << "rigid " << (r.is_rigid ? "yes" : "no") << "\n";
        } catch (const CapabilityError& e) {
            std::cout << "rigid skipped (" << e.what() << ")\n";
        }
        return 0;
    }

    auto [base, retries] = sample_odd_base(n, seed);
    std::cout << "construction " << construction << "\nn " << n << "\nseed "
              << seed << "\nretries " << retries << "\n";

    std::cout << "odd yes\n"; // sample_odd_base only returns odd bases
    Permutation first_sigma = random_edge_permutation(3 * n, seed);
    BipartiteBase first = bipartite_base(n, first_sigma);
    if (auto witness = find_even_witness(first)) {
        std::cout << "first_draw_odd no, witness";
        for (int w : *witness) std::cout << " " << w;
        std::cout << "\n";
    } else {
        std::cout << "first_draw_odd yes\n";
    }

    try {
        AutReport r = find_automorphism(base.to_graph());
        std::cout << "base_rigid " << (r.is_rigid ? "yes" : "no") << "\n";
    } catch (const CapabilityError& e) {
        std::cout << "base_rigid skipped (" << e.what() << ")\n";
    }
    std::cout << "distinct_second_neighborhoods "
              << (distinct_second_neighborhoods(base) ? "yes" : "no") << "\n";

    BuiltInstance inst = build_instance(construction, n, seed, "single");
    std::cout << "vertices " << inst.g1.vertex_count() << "\nedges "
              << inst.g1.edge_count() << "\n";
    Rational d = average_degree(inst.g1);
    std::cout << "average_degree " << d.num << "/" << d.den << "\n";
    try {
        AutReport r = find_automorphism(inst.g1);
        std::cout << "final_rigid " << (r.is_rigid ? "yes" : "no") << "\n";
    } catch (const CapabilityError& e) {
        std::cout << "final_rigid skipped (" << e.what() << ")\n";
    }
    return 0;
}

// ------------------------------------------------------------------- bench

struct RunResult {
    double wall_seconds = 0;
    std::string outcome; // completed / timeout / memout / error
    std::string answer;  // iso / non_iso / empty
};

std::string substitute(std::string tmpl, const std::string& key,
                       const std::string& value) {
    for (std::size_t pos; (pos = tmpl.find(key)) != std::string::npos;)
        tmpl.replace(pos, key.size(), value);
    return tmpl;
}

RunResult run_solver(const std::string& command, double timeout_sec,
                     long mem_mb) {
    int out_pipe[2];
    if (pipe(out_pipe) != 0) throw std::runtime_error("pipe failed");

    auto start = std::chrono::steady_clock::now();
    pid_t pid = fork();
    if (pid < 0) throw std::runtime_error("fork failed");
    if (pid == 0) {
        dup2(out_pipe[1], STDOUT_FILENO);
        close(out_pipe[0]);
        close(out_pipe[1]);
        if (mem_mb > 0) {
            rlimit lim{};
            lim.rlim_cur = lim.rlim_max = rlim_t(mem_mb) * 1024 * 1024;
            setrlimit(RLIMIT_AS, &lim);
        }
        execl("/bin/sh", "sh", "-c", command.c_str(), (char*)nullptr);
        _exit(127);
    }
    close(out_pipe[1]);
    fcntl(out_pipe[0], F_SETFL, O_NONBLOCK);

    std::string output;
    bool killed = false;
    int status = 0;
    for (;;) {
        char buf[4096];
        ssize_t got;
        while ((got = read(out_pipe[0], buf, sizeof buf)) > 0)
            output.append(buf, std::size_t(got));
        pid_t done = waitpid(pid, &status, WNOHANG);
        if (done == pid) break;
        double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        if (!killed && elapsed > timeout_sec) {
            kill(pid, SIGKILL);
            killed = true;
        }
        usleep(10000);
    }
    for (;;) { // drain what remains after exit
        char buf[4096];
        ssize_t got = read(out_pipe[0], buf, sizeof buf);
        if (got <= 0) break;
        output.append(buf, std::size_t(got));
    }
    close(out_pipe[0]);

    RunResult r;
    r.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (killed) {
        r.outcome = "timeout";
        return r;
    }
    if (WIFSIGNALED(status)) {
        r.outcome = "error";
        return r;
    }
    int code = WEXITSTATUS(status);
    if (code != 0) {
        // an aborted allocation under RLIMIT_AS usually surfaces as a
        // nonzero exit mentioning allocation failure
        r.outcome = output.find("bad_alloc") != std::string::npos ||
                            output.find("out of memory") != std::string::npos
                        ? "memout"
                        : "error";
        return r;
    }
    if (output.find("non-isomorphic") != std::string::npos)
        r.answer = "non_iso";
    else if (output.find("isomorphic") != std::string::npos)
        r.answer = "iso";
    r.outcome = r.answer.empty() ? "error" : "completed";
    return r;
}

std::optional<Relation> ground_truth_for(const std::string& g1_path) {
    auto pos = g1_path.rfind("-g1.");
    if (pos == std::string::npos) return std::nullopt;
    std::ifstream meta(g1_path.substr(0, pos) + "-meta.txt");
    if (!meta) return std::nullopt;
    std::string key, value;
    while (meta >> key >> value)
        if (key == "relation") {
            if (value == "isomorphic") return Relation::isomorphic;
            if (value == "non_isomorphic") return Relation::non_isomorphic;
            return Relation::unknown;
        }
    return std::nullopt;
}

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s)
        out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return out.substr(0, 40);
}

int cmd_bench(const std::vector<std::string>& files,
              const std::vector<std::string>& solver_cmds, double timeout_sec,
              long mem_mb, int repeats, const std::string& out_dir) {
    if (files.size() % 2 != 0)
        throw CLI::ValidationError("files", "expected g1/g2 file pairs");

    struct Row {
        std::string instance_id;
        int vertices;
        std::string solver;
        int repeat;
        RunResult result;
        std::string ground_truth;
        bool flagged;
        std::uint64_t seed;
    };
    std::vector<Row> rows;
    bool any_flagged = false;

    for (std::size_t i = 0; i + 1 < files.size(); i += 2) {
        const std::string& f1 = files[i];
        const std::string& f2 = files[i + 1];
        Graph g1 = read_dimacs_file(f1);
        auto truth = ground_truth_for(f1);
        std::string truth_str =
            truth ? to_string(*truth) : std::string("unknown");
        std::string id = f1.substr(f1.find_last_of('/') + 1);
        if (auto p = id.rfind("-g1."); p != std::string::npos)
            id = id.substr(0, p);

        for (const auto& solver : solver_cmds)
            for (int rep = 0; rep < repeats; ++rep) {
                std::string cmd = substitute(solver, "{g1}", f1);
                cmd = substitute(cmd, "{g2}", f2);
                RunResult res = run_solver(cmd, timeout_sec, mem_mb);
                bool flagged = false;
                if (res.outcome == "completed" && truth &&
                    *truth != Relation::unknown) {
                    std::string want = *truth == Relation::isomorphic
                                           ? "iso"
                                           : "non_iso";
                    flagged = res.answer != want;
                }
                any_flagged = any_flagged || flagged;
                rows.push_back({id, g1.vertex_count(), solver, rep, res,
                                truth_str, flagged, 0});
            }
    }

    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.instance_id, a.solver, a.repeat) <
               std::tie(b.instance_id, b.solver, b.repeat);
    });

    std::ofstream csv(out_dir + "/bench.csv", std::ios::binary);
    csv << "# mpbench csv schema v1: instance_id,vertices,solver,repeat,"
           "wall_seconds,outcome,answer,ground_truth,flagged\n";
    csv << "instance_id,vertices,solver,repeat,wall_seconds,outcome,answer,"
           "ground_truth,flagged\n";
    for (const auto& r : rows)
        csv << r.instance_id << ',' << r.vertices << ',' << '"' << r.solver
            << '"' << ',' << r.repeat << ',' << r.result.wall_seconds << ','
            << r.result.outcome << ','
            << (r.result.answer.empty() ? "-" : r.result.answer) << ','
            << r.ground_truth << ',' << (r.flagged ? 1 : 0) << "\n";

    // per-solver two-column data, sorted by vertex count
    std::map<std::string, std::vector<std::pair<int, double>>> dat;
    for (const auto& r : rows)
        if (r.result.outcome == "completed")
            dat[r.solver].push_back({r.vertices, r.result.wall_seconds});
    for (auto& [solver, points] : dat) {
        std::sort(points.begin(), points.end());
        std::ofstream out(out_dir + "/" + sanitize(solver) + ".dat",
                          std::ios::binary);
        for (auto [v, t] : points) out << v << " " << t << "\n";
    }

    for (const auto& r : rows)
        std::cout << r.instance_id << " " << r.solver << " rep " << r.repeat
                  << ": " << r.result.outcome
                  << (r.result.answer.empty() ? "" : " " + r.result.answer)
                  << " in " << r.result.wall_seconds << "s"
                  << (r.flagged ? "  [DISAGREES WITH GROUND TRUTH]" : "")
                  << "\n";
    return any_flagged ? 1 : 0;
}

// ------------------------------------------------------------------- rates

int cmd_rates(const std::vector<int>& n_values, int samples,
              std::uint64_t seed0) {
    std::cout << "n even_base base_nonrigid snbhd_collision final_nonrigid\n";
    for (int n : n_values) {
        int even = 0, nonrigid = 0, collision = 0, final_nonrigid = 0;
        int final_checked = 0;
        for (int s = 0; s < samples; ++s) {
            std::uint64_t seed = seed0 + std::uint64_t(s) * 1000003ULL;
            BipartiteBase b =
                bipartite_base(n, random_edge_permutation(3 * n, seed));
            if (!is_odd(b)) ++even;
            if (!distinct_second_neighborhoods(b)) ++collision;
            AutReport base_rep = find_automorphism(b.to_graph());
            if (!base_rep.is_rigid) ++nonrigid;
            try {
                AutReport rep = find_automorphism(multipede(b).graph);
                ++final_checked;
                if (!rep.is_rigid) ++final_nonrigid;
            } catch (const CapabilityError&) {
            }
        }
        auto frac = [&](int c, int total) {
            return total ? double(c) / total : 0.0;
        };
        std::cout << n << " " << frac(even, samples) << " "
                  << frac(nonrigid, samples) << " " << frac(collision, samples)
                  << " " << frac(final_nonrigid, final_checked) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------- solve

int cmd_solve(const std::string& f1, const std::string& f2) {
    Graph g1 = read_dimacs_file(f1);
    Graph g2 = read_dimacs_file(f2);
    auto witness = are_isomorphic(g1, g2);
    std::cout << (witness ? "isomorphic" : "non-isomorphic") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hard graph-isomorphism instance generator and benchmark"};
    app.require_subcommand(1);

    std::string construction = "shrunken", pair_mode = "single",
                format = "dimacs", out_dir = ".", file;
    int n = 8;
    std::uint64_t seed = 1;

    auto* gen = app.add_subcommand("generate", "write instance files");
    gen->add_option("--construction", construction)
        ->check(CLI::IsMember({"multipede", "multipede-linalg",
                               "multipede-bypass", "shrunken", "cfi"}) |
                CLI::Validator(
                    [](std::string& s) -> std::string {
                        if (s.rfind("abelian-", 0) == 0 ||
                            s.rfind("dihedral-", 0) == 0)
                            return {};
                        return "unknown construction";
                    },
                    "GROUP"));
    gen->add_option("--n", n);
    gen->add_option("--seed", seed);
    gen->add_option("--pair", pair_mode)
        ->check(CLI::IsMember({"iso", "noniso", "single"}));
    gen->add_option("--format", format)
        ->check(CLI::IsMember({"dimacs", "adjlist"}));
    gen->add_option("--out", out_dir);

    auto* ver = app.add_subcommand("verify", "check instance properties");
    ver->add_option("--construction", construction);
    ver->add_option("--n", n);
    ver->add_option("--seed", seed);
    ver->add_option("--file", file);

    std::vector<std::string> bench_files, solver_cmds;
    double timeout_sec = 10800;
    long mem_mb = 4096;
    int repeats = 1, workers = 1, samples = 100;
    std::vector<int> n_values;

    auto* bench = app.add_subcommand("bench", "run external solvers");
    bench->add_option("files", bench_files, "g1/g2 file pairs")->required();
    bench->add_option("--solver-cmd", solver_cmds,
                      "command template with {g1} {g2}")
        ->required();
    bench->add_option("--timeout-sec", timeout_sec);
    bench->add_option("--mem-mb", mem_mb);
    bench->add_option("--repeats", repeats);
    bench->add_option("--workers", workers); // runs execute sequentially so
                                             // that wall-clock timings do not
                                             // perturb each other
    bench->add_option("--out", out_dir);

    auto* rates = app.add_subcommand("rates", "sampled property fractions");
    rates->add_option("--n", n_values)->required();
    rates->add_option("--samples", samples);
    rates->add_option("--seed", seed);

    std::string f1, f2;
    auto* solve = app.add_subcommand("solve", "internal isomorphism solver");
    solve->add_option("g1", f1)->required();
    solve->add_option("g2", f2)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_generate(construction, n, seed, pair_mode, format,
                                out_dir);
        if (ver->parsed()) return cmd_verify(construction, n, seed, file);
        if (bench->parsed())
            return cmd_bench(bench_files, solver_cmds, timeout_sec, mem_mb,
                             repeats, out_dir);
        if (rates->parsed()) return cmd_rates(n_values, samples, seed);
        if (solve->parsed()) return cmd_solve(f1, f2);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
