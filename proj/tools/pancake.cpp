#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "pancake/exact.hpp"
#include "pancake/io.hpp"
#include "pancake/search.hpp"
#include "pancake/sequences.hpp"
#include "pancake/stack.hpp"
#include "pancake/verify.hpp"

namespace {

using nlohmann::json;
using namespace pancake;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::optional<int> env_int(const char* name) {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    return std::atoi(v);
}

int default_workers() {
    if (auto w = env_int("PANCAKE_WORKERS")) return std::max(1, *w);
    return std::max(1u, std::thread::hardware_concurrency());
}

SolverLimits limits_from_env() {
    SolverLimits lim;
    if (auto l = env_int("PANCAKE_SOLVE_LIMIT")) {
        lim.bfs_max = *l;
        lim.bidir_max = *l;
        lim.ida_max = *l;
        lim.reverse_bfs_max = *l;
    }
    return lim;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

int cmd_generate(int n, const std::string& format, const std::string& out_path) {
    const auto fam = family_of(n);
    if (const auto* err = std::get_if<FamilyError>(&fam)) {
        std::cerr << "generate " << n << ": " << family_error_message(*err) << '\n';
        return kExitUsage;
    }
    const auto doc = document_from(generate(n), "generated");
    if (format == "json")
        write_output(to_json(doc).dump(1) + "\n", out_path);
    else
        write_output(to_text(doc), out_path);
    return 0;
}

SequenceDocument read_input_document(const std::string& file, int n_flag, bool use_stdin) {
    if (use_stdin) {
        if (n_flag <= 0) throw std::runtime_error("--stdin needs --n");
        SequenceDocument doc;
        doc.n = n_flag;
        int k;
        while (std::cin >> k) doc.flips.push_back(k);
        for (int f : doc.flips)
            if (f < 1 || f > doc.n) throw std::runtime_error("flip out of range: " + std::to_string(f));
        return doc;
    }
    if (file.empty()) throw std::runtime_error("need a document file or --stdin");
    auto doc = load_document(file);
    if (n_flag > 0 && n_flag != doc.n) throw std::runtime_error("--n disagrees with the document");
    return doc;
}

int cmd_verify(const std::string& file, int n_flag, bool use_stdin, bool as_json) {
    SequenceDocument doc;
    try {
        doc = read_input_document(file, n_flag, use_stdin);
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << '\n';
        return kExitUsage;
    }

    VerifyReport rep;
    if (!doc.phases.empty()) {
        AnnotatedSeq seq;
        seq.n = doc.n;
        seq.family = doc.family.value_or(FamilyTag::S1);
        for (size_t i = 0; i < doc.flips.size(); ++i)
            seq.items.push_back({doc.flips[i], doc.phases[i]});
        rep = verify_sorts(seq);
    } else {
        rep = verify_sorts(doc.n, doc.flips);
    }

    if (as_json) {
        std::cout << to_json(rep).dump(1) << '\n';
    } else {
        std::cout << "n " << doc.n << ": " << (rep.sorted ? "sorted" : "NOT sorted") << ", "
                  << rep.total_flips << " flips (" << rep.waste_count << " wastes, "
                  << rep.improve_count << " improves)";
        if (!doc.phases.empty()) std::cout << ", " << rep.phase_violations.size() << " phase violations";
        std::cout << '\n';
        if (!rep.sorted) std::cout << "final " << format_stack(rep.final_stack) << '\n';
    }
    return rep.sorted && rep.phase_violations.empty() ? 0 : kExitVerifyFailed;
}

int cmd_trace(int n, const std::string& file, const std::string& golden_id,
              const std::string& corpus_dir, const std::string& out_path) {
    FlipSeq flips;
    if (!file.empty()) {
        const auto doc = load_document(file);
        if (doc.n != n) throw std::runtime_error("document n disagrees with the command line");
        flips = doc.flips;
    } else {
        flips = generate(n).flips();
    }
    const Trace t = trace(n, flips);
    write_output(render_trace(t), out_path);

    if (!golden_id.empty()) {
        const auto entry = load_corpus_entry(corpus_dir, golden_id);
        if (entry.n != n) {
            std::cerr << "golden " << golden_id << " is for n=" << entry.n << ", not " << n << '\n';
            return kExitUsage;
        }
        if (t.flips.size() != entry.flips.size()) {
            std::cerr << "golden mismatch: " << t.flips.size() << " flips vs " << entry.flips.size()
                      << " in " << golden_id << '\n';
            return kExitVerifyFailed;
        }
        for (size_t i = 0; i < t.states.size(); ++i) {
            if (i < t.flips.size() && t.flips[i] != entry.flips[i]) {
                std::cerr << "golden mismatch at flip " << i << ": " << t.flips[i] << " vs "
                          << entry.flips[i] << '\n';
                return kExitVerifyFailed;
            }
            if (t.states[i] != entry.states[i]) {
                std::cerr << "golden mismatch at state " << i << ":\n got      "
                          << format_stack(t.states[i], 0) << "\n expected "
                          << format_stack(entry.states[i], 0) << '\n';
                return kExitVerifyFailed;
            }
        }
        std::cerr << "matches golden trace " << golden_id << " at all " << t.states.size()
                  << " states\n";
    }
    return 0;
}

int cmd_search(int n, const std::string& mode, std::uint64_t seed, std::uint64_t samples,
               int workers, std::uint64_t stop_after, const std::string& checkpoint_dir,
               const std::string& out_path, bool expect_some) {
    if (n % 2 == 0 || n < 5) {
        std::cerr << "search needs odd n >= 5\n";
        return kExitUsage;
    }
    SearchConfig cfg;
    cfg.worker_count = workers;
    cfg.checkpoint_dir = checkpoint_dir;
    if (stop_after > 0) cfg.stop_after = stop_after;

    const auto start = std::chrono::steady_clock::now();
    std::vector<Candidate> found;
    if (mode == "exhaustive") {
        cfg.mode = SearchMode::Exhaustive;
        found = exhaustive_search(n, cfg);
    } else if (mode == "randomized") {
        cfg.mode = SearchMode::Randomized;
        cfg.seed = seed;
        cfg.sample_count = samples;
        found = randomized_search(n, cfg);
    } else {
        std::cerr << "unknown mode " << mode << '\n';
        return kExitUsage;
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        for (const auto& c : found) out << to_json(c, n).dump() << '\n';
    }
    std::cout << "n=" << n << " mode=" << mode << ": " << found.size() << " successes in "
              << elapsed.count() << " s";
    if (mode == "randomized") std::cout << " (seed " << seed << ", " << samples << " samples)";
    std::cout << '\n';
    if (expect_some && found.empty()) return kExitVerifyFailed;
    return 0;
}

int cmd_solve(int n, const std::string& method, int limit_flag, const std::string& cache_dir,
              bool as_json) {
    SolverLimits lim = limits_from_env();
    if (limit_flag > 0) {
        lim.bfs_max = limit_flag;
        lim.bidir_max = limit_flag;
        lim.ida_max = limit_flag;
        lim.reverse_bfs_max = limit_flag;
    }
    SolveMethod m;
    if (method == "bfs")
        m = SolveMethod::BFS;
    else if (method == "bidir")
        m = SolveMethod::Bidirectional;
    else if (method == "ida")
        m = SolveMethod::IDAStar;
    else {
        std::cerr << "unknown method " << method << '\n';
        return kExitUsage;
    }

    SolveResult res;
    bool cached = false;
    if (!cache_dir.empty()) {
        if (auto hit = load_cached_solve(cache_dir, n, m)) {
            res = *hit;
            cached = true;
        }
    }
    if (!cached) {
        switch (m) {
            case SolveMethod::BFS: res = bfs_T(n, lim); break;
            case SolveMethod::Bidirectional: res = bidirectional_T(n, lim); break;
            case SolveMethod::IDAStar: res = ida_T(n, lim); break;
        }
        if (!cache_dir.empty()) store_cached_solve(cache_dir, res);
    }

    if (as_json) {
        std::cout << to_json(res).dump(1) << '\n';
    } else {
        std::cout << "T(" << n << ") = " << res.t_value << " [" << solve_method_name(res.method)
                  << (cached ? ", cached" : "") << "]\nwitness";
        for (int k : res.witness) std::cout << ' ' << k;
        std::cout << '\n';
    }
    return 0;
}

int cmd_bounds(int n) {
    const TBounds b = t_bounds(n);
    switch (b.kind) {
        case TBounds::Kind::Exact: std::cout << "Exact " << b.lo << '\n'; break;
        case TBounds::Kind::Range: std::cout << "Range " << b.lo << ".." << b.hi << '\n'; break;
        case TBounds::Kind::NeedsSolver: std::cout << "NeedsSolver\n"; break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"burnt pancake flipping sequences: generate, verify, search, solve"};
    app.require_subcommand(1);

    int n = 0;
    std::string format = "text", out_path, file, golden_id, corpus_dir = "data/corpus";
    std::string mode = "exhaustive", checkpoint_dir, method = "bfs", cache_dir;
    std::uint64_t seed = 0, samples = 1000000, stop_after = 0;
    int workers = default_workers(), limit_flag = 0, n_flag = 0;
    bool use_stdin = false, as_json = false, expect_some = false;

    auto* gen = app.add_subcommand("generate", "emit the flipping sequence for n");
    gen->add_option("n", n, "stack size")->required();
    gen->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "replay a sequence document and classify its flips");
    ver->add_option("file", file, "sequence document (json or text)");
    ver->add_option("--n", n_flag, "stack size (with --stdin)");
    ver->add_flag("--stdin", use_stdin, "read whitespace-separated flips from stdin");
    ver->add_flag("--json", as_json, "structured report on stdout");

    auto* tra = app.add_subcommand("trace", "emit every intermediate stack");
    tra->add_option("n", n, "stack size")->required();
    tra->add_option("file", file, "sequence document (default: the generated sequence)");
    tra->add_option("--golden", golden_id, "compare states against this corpus entry");
    tra->add_option("--corpus-dir", corpus_dir, "corpus directory");
    tra->add_option("--out", out_path, "trace output file (default stdout)");

    auto* sea = app.add_subcommand("search", "waste-permutation search for optimal sequences");
    sea->add_option("n", n, "stack size (odd)")->required();
    sea->add_option("--mode", mode, "exhaustive or randomized")
        ->check(CLI::IsMember({"exhaustive", "randomized"}));
    sea->add_option("--seed", seed, "randomized: generator seed");
    sea->add_option("--samples", samples, "randomized: number of samples");
    sea->add_option("--workers", workers, "parallel workers");
    sea->add_option("--stop-after", stop_after, "halt after this many successes");
    sea->add_option("--checkpoint", checkpoint_dir, "checkpoint directory for resuming");
    sea->add_option("--out", out_path, "write successes as JSON lines");
    sea->add_flag("--expect-some", expect_some, "exit 1 if nothing is found");

    auto* sol = app.add_subcommand("solve", "exact T(n) for small n");
    sol->add_option("n", n, "stack size")->required();
    sol->add_option("--method", method, "bfs, bidir or ida")
        ->check(CLI::IsMember({"bfs", "bidir", "ida"}));
    sol->add_option("--limit", limit_flag, "override the solver size limit");
    sol->add_option("--cache", cache_dir, "cache directory for solve results");
    sol->add_flag("--json", as_json, "structured result on stdout");

    auto* bou = app.add_subcommand("bounds", "what is known about T(n)");
    bou->add_option("n", n, "stack size")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(n, format, out_path);
        if (ver->parsed()) return cmd_verify(file, n_flag, use_stdin, as_json);
        if (tra->parsed()) return cmd_trace(n, file, golden_id, corpus_dir, out_path);
        if (sea->parsed())
            return cmd_search(n, mode, seed, samples, workers, stop_after, checkpoint_dir,
                              out_path, expect_some);
        if (sol->parsed()) return cmd_solve(n, method, limit_flag, cache_dir, as_json);
        if (bou->parsed()) return cmd_bounds(n);
    } catch (const LimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
