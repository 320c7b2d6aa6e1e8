#pragma once

#include <cstdint>
#include <stdexcept>

#include "pancake/stack.hpp"

// Brute-force oracle over the burnt pancake graph (2^n * n! vertices, one
// undirected edge per flip): exact T(n) = dist(-I_n, I_n) with witnesses,
// the worst-case distance g(n), and the bound formulas for larger n.
namespace pancake {

class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TimeBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Fixed-width packing of a stack, 6 bits per position (sign + magnitude).
// A bijection for n <= 21.
struct EncodedState {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    bool operator==(const EncodedState&) const = default;
};

constexpr int kEncodedStateMaxN = 21;

EncodedState encode_state(const Stack& s);
Stack decode_state(const EncodedState& e, int n);

struct EncodedStateHash {
    std::size_t operator()(const EncodedState& e) const noexcept;
};

enum class SolveMethod { BFS, Bidirectional, IDAStar };

const char* solve_method_name(SolveMethod m);

struct SolveResult {
    int n = 0;
    int t_value = 0;
    FlipSeq witness;
    std::uint64_t explored = 0;
    SolveMethod method = SolveMethod::BFS;
};

struct SolverLimits {
    int bfs_max = 8;           // full table over 2^n * n! states (10.3M at n=8)
    int bidir_max = 9;
    int ida_max = 12;
    int reverse_bfs_max = 7;   // for g(n)
    double time_budget_seconds = 0;  // 0 = unlimited; IDA* only
};

// Exact T(n) by breadth-first search over the whole graph. The witness is
// the lexicographically smallest optimal flip sequence. Throws LimitExceeded
// above limits.bfs_max.
SolveResult bfs_T(int n, const SolverLimits& limits = {});

// Exact T(n) by bidirectional breadth-first search, meeting in the middle.
SolveResult bidirectional_T(int n, const SolverLimits& limits = {});

// Exact T(n) by iterative deepening with the admissible heuristic
// h(S) = n - adjacency_count(S) (each flip changes the count by at most 1).
SolveResult ida_T(int n, const SolverLimits& limits = {});

// Worst-case distance to the sorted stack over all 2^n * n! stacks
// (eccentricity of I_n), by reverse BFS.
int g_of_n(int n, const SolverLimits& limits = {});

// Whether some shortest sorting sequence for -I_n starts with the full flip,
// checked as 1 + dist(flip(-I_n, n), I_n) == T(n).
bool optimal_first_flip_full(int n, const SolverLimits& limits = {});

// What is known about T(n) without running a solver.
struct TBounds {
    enum class Kind { Exact, Range, NeedsSolver };
    Kind kind = Kind::NeedsSolver;
    int lo = 0;
    int hi = 0;  // == lo for Exact

    bool operator==(const TBounds&) const = default;
};

// Odd n >= 19: exactly (3n+3)/2. Even n >= 14: one of {3n/2+1, 3n/2+2}.
// n = 17: exactly 28. Anything else needs a solver run.
TBounds t_bounds(int n);

}  // namespace pancake
