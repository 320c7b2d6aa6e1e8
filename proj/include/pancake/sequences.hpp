#pragma once

#include <variant>
#include <vector>

#include "pancake/stack.hpp"

// Closed-form generators for the optimal flipping sequences that sort
// [-1, -2, ..., -n]. Three families cover n = 1 mod 4:
//
//   S1: n = 1 mod 12, n >= 37      S5: n = 5 mod 12, n >= 29
//   S9: n = 9 mod 12, n >= 33
//
// Each sequence has length (3n+3)/2 and splits into a waste part W that cuts
// the stack into clans of size 2, then improve parts A and B that rebuild
// blocks and merge them into the sorted stack.
namespace pancake {

enum class FamilyTag { S1, S5, S9 };

struct Family {
    FamilyTag tag;
    int residue_mod12;
    int min_n;
};

enum class FamilyError { EvenN, ResidueThreeMod4NotCovered, BelowMinimum };

using FamilyResult = std::variant<Family, FamilyError>;

// Total classification of n. Errors: even n (only bounds are known),
// n = 3 mod 4 (covered elsewhere in the literature, not generated here),
// or n below the family minimum.
FamilyResult family_of(int n);

Family family_info(FamilyTag tag);
const char* family_name(FamilyTag tag);
const char* family_error_message(FamilyError err);

// s = (n - min_n)/12 for the family of n; the repetition count of the
// indexed steps. Requires family_of(n) to succeed.
int family_param_s(int n);

enum class Phase {
    W1, W2, W3, W4, W5, W6,
    A1, A2, A3, A4, A5,
    B1, B2, B3,
};

const char* phase_name(Phase p);
bool is_waste_phase(Phase p);

struct AnnotatedFlip {
    int length;
    Phase phase;

    bool operator==(const AnnotatedFlip&) const = default;
};

struct AnnotatedSeq {
    int n = 0;
    FamilyTag family = FamilyTag::S1;
    std::vector<AnnotatedFlip> items;

    FlipSeq flips() const;
};

// The full flipping sequence for n. Indexed steps expand in increasing i,
// emitting every listed flip of a group before moving to the next i; they
// are empty when s = 0. Throws std::invalid_argument when family_of fails.
AnnotatedSeq generate(int n);

struct PhaseLengths {
    int w, a, b;

    bool operator==(const PhaseLengths&) const = default;
    int total() const { return w + a + b; }
};

// (|W|, |A|, |B|): S1 gives (6s+20, 6s+19, 6s+18), S5 (6s+16, 6s+15, 6s+14),
// S9 (6s+18, 6s+17, 6s+16); the sum is always (3n+3)/2.
PhaseLengths expected_lengths(int n);

}  // namespace pancake
