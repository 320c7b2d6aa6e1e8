// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Criteria 1, 2 and 4 share a single sweep replay.
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pancake/exact.hpp"
#include "pancake/io.hpp"
#include "pancake/search.hpp"
#include "pancake/sequences.hpp"
#include "pancake/stack.hpp"
#include "pancake/verify.hpp"
#include "test_util.hpp"

using namespace pancake;

namespace {

std::string g_corpus_dir = "data/corpus";
int g_workers = std::max(1u, std::thread::hardware_concurrency());

struct Outcome {
    bool ok = true;
    std::string detail;
};

template <typename T>
void display(std::ostream& os, const T& v) {
    os << v;
}
void display(std::ostream& os, const std::vector<int>& v) {
    os << '[';
    for (size_t i = 0; i < v.size() && i < 8; ++i) os << (i ? " " : "") << v[i];
    os << (v.size() > 8 ? " ...]" : "]");
}

struct Check {
    Outcome* out;
    template <typename A, typename B>
    void eq(const A& a, const B& b, const std::string& what) {
        if (!(a == b)) {
            out->ok = false;
            std::ostringstream os;
            os << what << " (got ";
            display(os, a);
            os << ", want ";
            display(os, b);
            os << "); ";
            out->detail += os.str();
        }
    }
    void that(bool cond, const std::string& what) {
        if (!cond) {
            out->ok = false;
            out->detail += what + "; ";
        }
    }
};

// ---- shared sweep over every family n in [29, 1201] ------------------------

struct SweepData {
    std::vector<int> ns;
    bool all_sorted = true;
    bool all_lengths = true;
    bool all_phases = true;
    bool completion_identity = true;
    std::string first_failure;

    static const SweepData& get() {
        static SweepData data = compute();
        return data;
    }

    static SweepData compute() {
        SweepData d;
        for (int n = 29; n <= 1201; n += 4) {
            d.ns.push_back(n);
            const auto seq = generate(n);
            if (static_cast<int>(seq.items.size()) != (3 * n + 3) / 2) {
                d.all_lengths = false;
                d.note(n, "length");
            }

            Stack s = neg_identity(n);
            Stack post_w;
            FlipSeq ab;
            int w = 0, a = 0, b = 0;
            bool phases_ok = true;
            for (const auto& it : seq.items) {
                const bool improves = classify_flip(s, it.length) == FlipClass::Improve;
                if (is_waste_phase(it.phase)) {
                    ++w;
                    if (improves) phases_ok = false;
                } else {
                    if (it.phase <= Phase::A5)
                        ++a;
                    else
                        ++b;
                    if (!improves) phases_ok = false;
                    ab.push_back(it.length);
                }
                flip_in_place(s, it.length);
                if (it.phase == Phase::W6) post_w = s;
            }
            if (!is_sorted(s)) {
                d.all_sorted = false;
                d.note(n, "not sorted");
            }
            if (!phases_ok || w != (n + 3) / 2 || a != (n + 1) / 2 || b != (n - 1) / 2) {
                d.all_phases = false;
                d.note(n, "phase structure");
            }
            const auto comp = greedy_improve_completion(post_w, n);
            if (!comp.sorted() || comp.flips != ab) {
                d.completion_identity = false;
                d.note(n, "completion identity");
            }
        }
        return d;
    }

    void note(int n, const char* what) {
        if (first_failure.empty())
            first_failure = std::string(what) + " at n=" + std::to_string(n);
    }
};

// ---- criteria ---------------------------------------------------------------

void c1_generator_sweep(Check& c) {
    const auto& d = SweepData::get();
    c.eq(d.ns.size(), size_t(294), "sweep covers every family n in [29, 1201]");
    c.that(d.all_sorted && d.all_lengths, "sweep sorts at length (3n+3)/2: " + d.first_failure);
}

void c2_phase_structure(Check& c) {
    const auto& d = SweepData::get();
    c.that(d.all_phases, "W all wastes (n+3)/2, A improves (n+1)/2, B improves (n-1)/2: " +
                             d.first_failure);
}

void c3_golden_traces(Check& c) {
    for (const auto& id : corpus_ids()) {
        const auto entry = load_corpus_entry(g_corpus_dir, id);
        const auto t = trace(entry.n, generate(entry.n).flips());
        c.eq(t.flips.size(), entry.flips.size(), id + " flip count");
        size_t mismatches = 0;
        for (size_t i = 0; i < t.states.size() && i < entry.states.size(); ++i)
            if (t.states[i] != entry.states[i]) ++mismatches;
        c.eq(mismatches, size_t(0), id + " state rows diverging");
    }
}

void c4_completion_identity(Check& c) {
    const auto& d = SweepData::get();
    c.that(d.completion_identity,
           "greedy completion of the post-W state equals A++B: " + d.first_failure);
}

void c5_search_empty_17(Check& c) {
    SearchConfig cfg;
    cfg.worker_count = g_workers;
    c.eq(exhaustive_search(17, cfg).size(), size_t(0), "successes over 8! cut orders at n=17");
}

void c6_search_empty_21(Check& c) {
    SearchConfig cfg;
    cfg.worker_count = g_workers;
    c.eq(exhaustive_search(21, cfg).size(), size_t(0), "successes over 10! cut orders at n=21");
}

void c7_n29_substitute(Check& c) {
    // (a) the cut order replayed from generate(29)'s W phase is a successful
    // candidate whose completion is exactly A++B
    const auto seq = generate(29);
    FlipSeq w, ab;
    for (const auto& it : seq.items)
        (is_waste_phase(it.phase) ? w : ab).push_back(it.length);
    const auto sigma = recover_cuts(29, w);
    const auto res = waste_prefix_from_cuts(29, sigma);
    c.that(std::holds_alternative<WastePrefix>(res), "replayed cut order builds a waste prefix");
    if (std::holds_alternative<WastePrefix>(res)) {
        const auto& wp = std::get<WastePrefix>(res);
        c.eq(wp.flips, w, "regenerated waste prefix");
        const auto comp = greedy_improve_completion(wp.stack, 29);
        c.that(comp.sorted(), "completion sorts");
        c.eq(comp.flips, ab, "completion equals A++B");
    }

    // (b) randomized soundness: every reported success verifies at length 45
    SearchConfig cfg;
    cfg.mode = SearchMode::Randomized;
    cfg.seed = 20260810;
    cfg.sample_count = 100000;
    cfg.worker_count = g_workers;
    const auto found = randomized_search(29, cfg);
    for (const auto& cand : found) {
        const auto rep = verify_sorts(29, cand.full_sequence());
        c.that(rep.sorted, "randomized success sorts");
        c.eq(rep.total_flips, 45, "randomized success length");
    }
    const auto again = randomized_search(29, cfg);
    c.eq(found.size(), again.size(), "randomized search is reproducible");
}

void c8_oracle_suite(Check& c) {
    c.eq(bfs_T(1).t_value, 1, "T(1)");
    c.eq(bfs_T(2).t_value, 4, "T(2)");
    for (int n = 1; n <= 8; ++n)
        c.eq(ida_T(n).t_value, bfs_T(n).t_value, "bfs/ida agree at n=" + std::to_string(n));
    // The growth bound T(n+1) <= T(n) + 2 cannot hold at n = 1: this very
    // criterion pins T(1) = 1 and T(2) = 4, a gap of 3. Pin the exception and
    // enforce the bound on every later pair.
    c.eq(bfs_T(2).t_value, bfs_T(1).t_value + 3, "T(2) = T(1) + 3, the one exception");
    for (int n = 2; n <= 7; ++n)
        c.that(bfs_T(n + 1).t_value <= bfs_T(n).t_value + 2,
               "T(n+1) <= T(n)+2 at n=" + std::to_string(n));
    for (int n = 1; n <= 8; ++n)
        c.that(optimal_first_flip_full(n),
               "an optimal sequence starts with the full flip, n=" + std::to_string(n));
    for (int n = 1; n <= 7; ++n) {
        c.that(bfs_T(n).t_value <= g_of_n(n), "T <= g at n=" + std::to_string(n));
        c.eq(bfs_T(n).t_value, g_of_n(n), "T = g at n=" + std::to_string(n));
    }
}

void c9_property_suites(Check& c) {
    std::mt19937_64 rng(20250810);
    // flip involution + adjacency locality
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Stack s = testutil::random_stack(rng, n);
        const int k = 1 + static_cast<int>(rng() % n);
        if (flipped(flipped(s, k), k) != s) {
            c.that(false, "flip involution");
            break;
        }
        const int delta = adjacency_count(flipped(s, k)) - adjacency_count(s);
        if (std::abs(delta) > 1 || delta != flip_adjacency_delta(s, k)) {
            c.that(false, "adjacency locality");
            break;
        }
    }
    // unique improve, brute force over all k
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Stack s = testutil::random_stack(rng, n);
        int improves = 0, which = -1;
        for (int k = 1; k <= n; ++k)
            if (adjacency_count(flipped(s, k)) == adjacency_count(s) + 1) {
                ++improves;
                which = k;
            }
        const auto cand = improve_candidate(s);
        if (improves > 1 || (improves == 0 && cand) || (improves == 1 && cand != which)) {
            c.that(false, "unique improve at trial " + std::to_string(trial));
            break;
        }
    }
    // clan-3 barrier
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 9);
        const Stack s = testutil::random_stack_with_clan3(rng, n);
        if (greedy_improve_completion(s, n).sorted()) {
            c.that(false, "clan-3 stack completed at trial " + std::to_string(trial));
            break;
        }
    }
}

void c10_bounds(Check& c) {
    c.eq(t_bounds(17).lo, 28, "T(17)");
    for (int n = 1; n <= 400; ++n) {
        const auto b = t_bounds(n);
        if (n == 17) {
            c.that(b == TBounds{TBounds::Kind::Exact, 28, 28}, "bounds at 17");
        } else if (n % 2 == 1 && n >= 19) {
            if (!(b == TBounds{TBounds::Kind::Exact, (3 * n + 3) / 2, (3 * n + 3) / 2})) {
                c.that(false, "odd bounds at n=" + std::to_string(n));
                break;
            }
        } else if (n % 2 == 0 && n >= 14) {
            if (!(b == TBounds{TBounds::Kind::Range, 3 * n / 2 + 1, 3 * n / 2 + 2})) {
                c.that(false, "even bounds at n=" + std::to_string(n));
                break;
            }
        } else if (b.kind != TBounds::Kind::NeedsSolver) {
            c.that(false, "expected NeedsSolver at n=" + std::to_string(n));
            break;
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--corpus-dir") && i + 1 < argc) g_corpus_dir = argv[++i];
        if (!std::strcmp(argv[i], "--workers") && i + 1 < argc) g_workers = std::atoi(argv[++i]);
    }

    struct Criterion {
        int id;
        const char* what;
        std::function<void(Check&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "generator sweep 29..1201 sorts at length (3n+3)/2", c1_generator_sweep},
        {2, "phase structure: wastes (n+3)/2, improves (n+1)/2 + (n-1)/2", c2_phase_structure},
        {3, "golden traces a61/b53/c57 match at every state", c3_golden_traces},
        {4, "greedy completion of the post-W state reproduces A++B", c4_completion_identity},
        {5, "exhaustive search at n=17 is empty", c5_search_empty_17},
        {6, "exhaustive search at n=21 is empty", c6_search_empty_21},
        {7, "n=29: replayed cut order succeeds; randomized successes verify", c7_n29_substitute},
        {8, "oracle suite: T(1), T(2), bfs=ida, T(n+1)<=T(n)+2 for n>=2, full first flip, T=g",
         c8_oracle_suite},
        {9, "property suites: involution, locality, unique improve, clan-3 barrier", c9_property_suites},
        {10, "t_bounds matches the known formulas", c10_bounds},
    };

    int failures = 0;
    for (const auto& crit : criteria) {
        Outcome out;
        Check check{&out};
        const auto start = std::chrono::steady_clock::now();
        try {
            crit.run(check);
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail += std::string("exception: ") + e.what();
        }
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        std::cout << (out.ok ? "PASS" : "FAIL") << "  [" << crit.id << "] " << crit.what << " ("
                  << dt.count() << " s)";
        if (!out.ok) {
            std::cout << "  -- " << out.detail;
            ++failures;
        }
        std::cout << '\n' << std::flush;
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
