#include "pancake/exact.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace pancake {

namespace {

constexpr std::uint8_t kUnvisited = 0xFF;

std::uint64_t spread(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xFF51AFD7ED558CCDULL;
    x ^= x >> 33;
    x *= 0xC4CEB9FE1A85EC53ULL;
    return x ^ (x >> 33);
}

// Perfect rank of a stack: Lehmer code of the magnitudes times 2^n, plus the
// sign bits. Dense in [0, 2^n * n!).
struct Ranker {
    int n;
    std::uint64_t space;  // 2^n * n!

    explicit Ranker(int n_) : n(n_) {
        space = 1;
        for (int i = 2; i <= n; ++i) space *= i;
        space <<= n;
    }

    std::uint64_t rank(const Stack& s) const {
        std::uint64_t lehmer = 0;
        std::uint64_t signs = 0;
        for (int i = 0; i < n; ++i) {
            const int a = std::abs(s[i]);
            int smaller = 0;
            for (int j = 0; j < i; ++j)
                if (std::abs(s[j]) < a) ++smaller;
            lehmer = lehmer * (n - i) + (a - 1 - smaller);
            if (s[i] < 0) signs |= std::uint64_t(1) << i;
        }
        return (lehmer << n) | signs;
    }

    Stack unrank(std::uint64_t r) const {
        const std::uint64_t signs = r & ((std::uint64_t(1) << n) - 1);
        std::uint64_t lehmer = r >> n;
        std::vector<int> digits(n);
        for (int i = n - 1; i >= 0; --i) {
            digits[i] = static_cast<int>(lehmer % (n - i));
            lehmer /= (n - i);
        }
        std::vector<int> avail(n);
        for (int i = 0; i < n; ++i) avail[i] = i + 1;
        Stack s(n);
        for (int i = 0; i < n; ++i) {
            const int d = digits[i];
            int v = avail[d];
            avail.erase(avail.begin() + d);
            s[i] = (signs >> i & 1) ? -v : v;
        }
        return s;
    }
};

// Distances from the sorted stack to every state. Flips are involutions, so
// the graph is undirected and this table answers dist(S, I_n) for any S.
struct DistanceTable {
    int n;
    Ranker ranker;
    std::vector<std::uint8_t> dist;
    int eccentricity = 0;

    explicit DistanceTable(int n_) : n(n_), ranker(n_) {
        dist.assign(ranker.space, kUnvisited);
        std::vector<std::uint64_t> frontier{ranker.rank(identity(n))};
        dist[frontier[0]] = 0;
        std::uint8_t depth = 0;
        std::vector<std::uint64_t> next;
        while (!frontier.empty()) {
            ++depth;
            next.clear();
            for (std::uint64_t r : frontier) {
                Stack s = ranker.unrank(r);
                for (int k = 1; k <= n; ++k) {
                    flip_in_place(s, k);
                    const std::uint64_t nr = ranker.rank(s);
                    if (dist[nr] == kUnvisited) {
                        dist[nr] = depth;
                        next.push_back(nr);
                    }
                    flip_in_place(s, k);  // undo
                }
            }
            if (!next.empty()) eccentricity = depth;
            frontier.swap(next);
        }
    }

    int at(const Stack& s) const { return dist[ranker.rank(s)]; }
};

// Tables are expensive to build and shared by several oracles, so they are
// memoized per n for the lifetime of the process.
std::shared_ptr<const DistanceTable> table_for(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const DistanceTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<DistanceTable>(n);
    return slot;
}

void check_n(int n, int max_n, const char* what) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > max_n)
        throw LimitExceeded(std::string(what) + " limit is n <= " + std::to_string(max_n) +
                            ", got n = " + std::to_string(n));
}

// Lexicographically smallest shortest path to I_n, walked greedily downhill
// on the distance table.
FlipSeq witness_from_table(const DistanceTable& table, Stack s) {
    FlipSeq seq;
    int d = table.at(s);
    seq.reserve(d);
    while (d > 0) {
        for (int k = 1; k <= table.n; ++k) {
            flip_in_place(s, k);
            if (table.at(s) == d - 1) {
                seq.push_back(k);
                --d;
                break;
            }
            flip_in_place(s, k);
        }
    }
    return seq;
}

}  // namespace

EncodedState encode_state(const Stack& s) {
    const int n = static_cast<int>(s.size());
    if (n > kEncodedStateMaxN) throw std::invalid_argument("stack too large to encode");
    EncodedState e;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t code =
            static_cast<std::uint64_t>(std::abs(s[i]) - 1) | (s[i] < 0 ? 0x20u : 0u);
        if (i < 10)
            e.lo |= code << (6 * i);
        else
            e.hi |= code << (6 * (i - 10));
    }
    return e;
}

Stack decode_state(const EncodedState& e, int n) {
    if (n < 1 || n > kEncodedStateMaxN) throw std::invalid_argument("bad n for decode");
    Stack s(n);
    for (int i = 0; i < n; ++i) {
        const std::uint64_t code = (i < 10 ? e.lo >> (6 * i) : e.hi >> (6 * (i - 10))) & 0x3F;
        const int mag = static_cast<int>(code & 0x1F) + 1;
        s[i] = (code & 0x20) ? -mag : mag;
    }
    return s;
}

std::size_t EncodedStateHash::operator()(const EncodedState& e) const noexcept {
    return static_cast<std::size_t>(spread(e.lo ^ spread(e.hi)));
}

const char* solve_method_name(SolveMethod m) {
    switch (m) {
        case SolveMethod::BFS: return "bfs";
        case SolveMethod::Bidirectional: return "bidir";
        case SolveMethod::IDAStar: return "ida";
    }
    return "?";
}

SolveResult bfs_T(int n, const SolverLimits& limits) {
    check_n(n, limits.bfs_max, "BFS");
    const auto table = table_for(n);
    SolveResult res;
    res.n = n;
    res.method = SolveMethod::BFS;
    res.t_value = table->at(neg_identity(n));
    res.witness = witness_from_table(*table, neg_identity(n));
    res.explored = table->ranker.space;
    return res;
}

SolveResult bidirectional_T(int n, const SolverLimits& limits) {
    check_n(n, limits.bidir_max, "bidirectional BFS");
    const Ranker ranker(n);
    const Stack src = neg_identity(n);
    const Stack dst = identity(n);

    SolveResult res;
    res.n = n;
    res.method = SolveMethod::Bidirectional;
    if (src == dst) {
        res.t_value = 0;
        return res;
    }

    std::vector<std::uint8_t> df(ranker.space, kUnvisited), db(ranker.space, kUnvisited);
    std::vector<std::uint64_t> frontier_f{ranker.rank(src)}, frontier_b{ranker.rank(dst)};
    df[frontier_f[0]] = 0;
    db[frontier_b[0]] = 0;
    int depth_f = 0, depth_b = 0;
    int best = std::numeric_limits<int>::max();
    std::uint64_t explored = 2;

    auto expand = [&](std::vector<std::uint8_t>& mine, const std::vector<std::uint8_t>& other,
                      std::vector<std::uint64_t>& frontier, int& depth) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t r : frontier) {
            Stack s = ranker.unrank(r);
            for (int k = 1; k <= n; ++k) {
                flip_in_place(s, k);
                const std::uint64_t nr = ranker.rank(s);
                if (mine[nr] == kUnvisited) {
                    mine[nr] = static_cast<std::uint8_t>(depth + 1);
                    next.push_back(nr);
                    ++explored;
                    if (other[nr] != kUnvisited)
                        best = std::min(best, depth + 1 + other[nr]);
                }
                flip_in_place(s, k);
            }
        }
        frontier.swap(next);
        ++depth;
    };

    while (!frontier_f.empty() || !frontier_b.empty()) {
        if (best <= depth_f + depth_b + 1) break;
        if (frontier_b.empty() || (!frontier_f.empty() && frontier_f.size() <= frontier_b.size()))
            expand(df, db, frontier_f, depth_f);
        else
            expand(db, df, frontier_b, depth_b);
    }
    res.t_value = best;
    res.explored = explored;

    // Witness by depth-first search bounded to the exact distance; ascending
    // flip order yields the lexicographically smallest optimal sequence.
    {
        Stack s = src;
        int adj = adjacency_count(s);
        FlipSeq path;
        std::uint64_t nodes = 0;
        auto dfs = [&](auto&& self, int g, int prev) -> bool {
            if (adj == n) return true;
            ++nodes;
            if (g + (n - adj) > best) return false;
            for (int k = 1; k <= n; ++k) {
                if (k == prev) continue;
                const int delta = flip_adjacency_delta(s, k);
                if (g + 1 + (n - adj - delta) > best) continue;
                flip_in_place(s, k);
                adj += delta;
                path.push_back(k);
                if (self(self, g + 1, k)) return true;
                path.pop_back();
                adj -= delta;
                flip_in_place(s, k);
            }
            return false;
        };
        dfs(dfs, 0, 0);
        res.witness = std::move(path);
        res.explored += nodes;
    }
    return res;
}

SolveResult ida_T(int n, const SolverLimits& limits) {
    check_n(n, limits.ida_max, "IDA*");
    const auto t_start = std::chrono::steady_clock::now();
    Stack s = neg_identity(n);
    int adj = adjacency_count(s);
    const int h0 = n - adj;

    SolveResult res;
    res.n = n;
    res.method = SolveMethod::IDAStar;
    if (h0 == 0) {
        res.t_value = 0;
        return res;
    }

    FlipSeq path;
    std::uint64_t nodes = 0;
    int bound = h0;
    constexpr int kInf = std::numeric_limits<int>::max();

    auto check_time = [&] {
        if (limits.time_budget_seconds <= 0 || (nodes & 0xFFFF) != 0) return;
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t_start;
        if (elapsed.count() > limits.time_budget_seconds)
            throw TimeBudgetExceeded("IDA* time budget exhausted");
    };

    // returns the smallest f-value that exceeded the bound, or -1 when solved
    auto dfs = [&](auto&& self, int g, int prev) -> int {
        if (adj == n) return -1;
        ++nodes;
        check_time();
        int next_bound = kInf;
        for (int k = 1; k <= n; ++k) {
            if (k == prev) continue;  // an optimal path never repeats a flip
            const int delta = flip_adjacency_delta(s, k);
            const int f = g + 1 + (n - adj - delta);
            if (f > bound) {
                next_bound = std::min(next_bound, f);
                continue;
            }
            flip_in_place(s, k);
            adj += delta;
            path.push_back(k);
            const int sub = self(self, g + 1, k);
            if (sub == -1) return -1;
            next_bound = std::min(next_bound, sub);
            path.pop_back();
            adj -= delta;
            flip_in_place(s, k);
        }
        return next_bound;
    };

    while (true) {
        const int r = dfs(dfs, 0, 0);
        if (r == -1) break;
        if (r == kInf) throw std::logic_error("IDA* exhausted the space without a solution");
        bound = r;
    }
    res.t_value = static_cast<int>(path.size());
    res.witness = std::move(path);
    res.explored = nodes;
    return res;
}

int g_of_n(int n, const SolverLimits& limits) {
    check_n(n, limits.reverse_bfs_max, "reverse BFS");
    return table_for(n)->eccentricity;
}

bool optimal_first_flip_full(int n, const SolverLimits& limits) {
    check_n(n, limits.bfs_max, "BFS");
    const auto table = table_for(n);
    const Stack start = neg_identity(n);
    return 1 + table->at(flipped(start, n)) == table->at(start);
}

TBounds t_bounds(int n) {
    if (n == 17) return {TBounds::Kind::Exact, 28, 28};
    if (n % 2 == 1 && n >= 19) {
        const int t = (3 * n + 3) / 2;
        return {TBounds::Kind::Exact, t, t};
    }
    if (n % 2 == 0 && n >= 14) return {TBounds::Kind::Range, 3 * n / 2 + 1, 3 * n / 2 + 2};
    return {TBounds::Kind::NeedsSolver, 0, 0};
}

}  // namespace pancake
