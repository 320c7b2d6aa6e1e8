#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pancake/stack.hpp"
#include "pancake/verify.hpp"

// Waste-permutation searches for optimal sequences: every candidate spends
// its waste budget up front — a full flip, one split per clan boundary in the
// order given by a cut permutation, and a final full flip — and must then be
// finishable with improves alone.
namespace pancake {

// An ordering of the (n-1)/2 clan-boundary cuts. Cut m is the boundary
// between the pancakes of absolute values 2m+2 and 2m+1, so m ranges over
// {0, ..., (n-3)/2}; cut 0 separates the free pancake 1 from the clan [3, 2].
struct CutPermutation {
    std::vector<int> order;

    bool operator==(const CutPermutation&) const = default;
};

struct WastePrefix {
    Stack stack;    // state after the prefix: clans of size 2 plus a free +-1
    FlipSeq flips;  // (n+3)/2 flips: full, splits in sigma order, full
};

enum class PrefixError { SplitWasImprove };

// Builds the waste prefix for sigma. Rejects candidates whose split
// accidentally classifies as an improve (that would break the waste
// accounting). n must be odd and >= 5. An uncut pair that is no longer
// adjacent is impossible and raises std::logic_error.
std::variant<WastePrefix, PrefixError> waste_prefix_from_cuts(int n, const CutPermutation& sigma);

// Reads the cut order back out of a waste prefix (full flip, splits, full
// flip) by replaying it. Throws std::invalid_argument if some middle flip
// does not cut between a pair {2m+2, 2m+1}.
CutPermutation recover_cuts(int n, const FlipSeq& waste_prefix);
std::optional<CutPermutation> try_recover_cuts(int n, const FlipSeq& waste_prefix);

enum class SearchMode { Exhaustive, Randomized };

struct SearchConfig {
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t seed = 0;          // Randomized
    std::uint64_t sample_count = 0;  // Randomized
    int worker_count = 1;
    std::optional<std::uint64_t> stop_after;  // halt after this many successes
    std::string checkpoint_dir;               // Exhaustive resume state, empty = off
};

struct Candidate {
    std::uint64_t rank = 0;  // lexicographic rank (exhaustive/extension) or sample index
    CutPermutation sigma;    // empty if it could not be recovered
    FlipSeq waste_prefix;
    CompletionResult completion;

    FlipSeq full_sequence() const;
};

// Tries all ((n-1)/2)! cut permutations in lexicographic order and returns
// the candidates whose greedy completion sorts the stack. Without
// stop_after, the result is identical for any worker_count; with it,
// cancellation is cooperative and may overshoot.
std::vector<Candidate> exhaustive_search(int n, const SearchConfig& cfg);

// Same pipeline over sample_count permutations drawn from a per-sample
// seeded generator, so results do not depend on worker_count.
std::vector<Candidate> randomized_search(int n, const SearchConfig& cfg);

// Grows a verified waste skeleton for base_n into candidates for
// base_n + 12: one insert goes somewhere before the flip base_n - 1, the
// other somewhere after it, and every eligible base flip independently
// either keeps its value or gains +12. Default templates are [10, 4, 6]
// before and [6, 4, 10] after; by default all flips are eligible except the
// full flips and the base_n - 1 flip, which always gain +12.
struct ExtensionSpec {
    int base_n = 0;
    FlipSeq base_waste_skeleton;
    FlipSeq insert_before = {10, 4, 6};
    FlipSeq insert_after = {6, 4, 10};
    int offset = 12;
    std::vector<int> offset_eligible;  // indices into the skeleton; empty = default rule
};

std::vector<Candidate> extension_search(const ExtensionSpec& spec, const SearchConfig& cfg);

// Lexicographic permutation (un)ranking over {0, ..., count-1}.
std::uint64_t permutation_count(int count);
std::vector<int> nth_permutation(int count, std::uint64_t rank);
std::uint64_t permutation_rank(const std::vector<int>& perm);

}  // namespace pancake
