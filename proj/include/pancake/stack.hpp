#pragma once

#include <optional>
#include <string>
#include <vector>

// Burnt pancake stacks as signed permutations. entries[0] is the top of the
// stack; a virtual pancake n+1 sits below entries[n-1] and only participates
// in adjacency counting.
namespace pancake {

using Stack = std::vector<int>;
using FlipSeq = std::vector<int>;

enum class FlipClass { Improve, Waste };

enum class RunKind { Block, Clan, Free };

struct RunSegment {
    int start;   // 0-based index of the first entry
    int length;  // Block/Clan >= 2, Free == 1
    RunKind kind;

    bool operator==(const RunSegment&) const = default;
};

// [-1, -2, ..., -n]. Throws std::invalid_argument for n < 1.
Stack neg_identity(int n);

// [1, 2, ..., n].
Stack identity(int n);

bool is_signed_permutation(const Stack& s);
bool is_sorted(const Stack& s);

// Reverse the top k entries and negate each. Throws std::out_of_range unless
// 1 <= k <= n.
void flip_in_place(Stack& s, int k);
Stack flipped(const Stack& s, int k);

// Number of vertically consecutive pairs (a, b) with b = a + 1, counting the
// pair formed by the bottom entry and the virtual pancake n+1. Equals n
// exactly on the sorted stack.
int adjacency_count(const Stack& s);

// Change in adjacency_count caused by flip k, in {-1, 0, +1}. Only the
// boundary pair at position k can change, so this is O(1).
int flip_adjacency_delta(const Stack& s, int k);

// Improve iff the flip raises the adjacency count by exactly one.
FlipClass classify_flip(const Stack& s, int k);

// Maximal tiling of the stack into blocks (ascending runs), clans
// (descending runs) and free pancakes.
std::vector<RunSegment> decompose_runs(const Stack& s);

// Size of the largest clan segment, 0 if none.
int max_clan_size(const Stack& s);

// The unique flip length that classifies as Improve, if one exists. With t
// the top entry, the only flip that can create an adjacency brings -t on top
// of the value -t + 1 (or onto the virtual pancake when t = -n).
std::optional<int> improve_candidate(const Stack& s);

// "[a b c ...]" wrapped at per_line values per row.
std::string format_stack(const Stack& s, int per_line = 15);

}  // namespace pancake
