#pragma once

#include <string>
#include <vector>

#include "pancake/sequences.hpp"
#include "pancake/stack.hpp"

// Replay and certify flipping sequences, emit step-by-step traces, and run
// the deterministic improves-only completion used by the searches.
namespace pancake {

struct PhaseViolation {
    int index;  // 0-based position in the sequence
    FlipClass expected;
    FlipClass actual;

    bool operator==(const PhaseViolation&) const = default;
};

struct VerifyReport {
    bool sorted = false;
    int total_flips = 0;
    int waste_count = 0;
    int improve_count = 0;
    std::vector<PhaseViolation> phase_violations;
    Stack final_stack;
};

// Replays seq from [-1..-n] and classifies every flip. Throws
// std::out_of_range naming the offending index if a flip is invalid.
VerifyReport verify_sorts(int n, const FlipSeq& seq);

// Same, and additionally flags every waste in an A/B phase and every improve
// in a W phase as a violation.
VerifyReport verify_sorts(const AnnotatedSeq& seq);

struct Trace {
    FlipSeq flips;
    std::vector<Stack> states;  // states.size() == flips.size() + 1
};

Trace trace(int n, const FlipSeq& seq);

// Bracketed states interleaved with the flips that connect them.
std::string render_trace(const Trace& t, int per_line = 15);

struct CompletionResult {
    enum class Outcome { Sorted, Stuck, BudgetExceeded };
    Outcome outcome = Outcome::Stuck;
    FlipSeq flips;      // improves applied (complete for Sorted, partial otherwise)
    Stack final_stack;
    std::string reason;  // set when stuck

    bool sorted() const { return outcome == Outcome::Sorted; }
};

// Repeatedly applies the unique improving flip until the stack is sorted, no
// improve exists, or budget flips have been spent. Each step is O(n), and at
// most n improves are ever possible, so the whole check is O(n^2).
CompletionResult greedy_improve_completion(const Stack& start, int budget);

}  // namespace pancake
