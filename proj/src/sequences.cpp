#include "pancake/sequences.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace pancake {

FamilyResult family_of(int n) {
    if (n % 2 == 0) return FamilyError::EvenN;
    if (((n % 4) + 4) % 4 == 3) return FamilyError::ResidueThreeMod4NotCovered;
    Family fam{};
    switch (((n % 12) + 12) % 12) {
        case 1: fam = {FamilyTag::S1, 1, 37}; break;
        case 5: fam = {FamilyTag::S5, 5, 29}; break;
        case 9: fam = {FamilyTag::S9, 9, 33}; break;
        default: return FamilyError::ResidueThreeMod4NotCovered;  // unreachable
    }
    if (n < fam.min_n) return FamilyError::BelowMinimum;
    return fam;
}

Family family_info(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::S1: return {FamilyTag::S1, 1, 37};
        case FamilyTag::S5: return {FamilyTag::S5, 5, 29};
        case FamilyTag::S9: return {FamilyTag::S9, 9, 33};
    }
    throw std::logic_error("bad family tag");
}

const char* family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::S1: return "S1";
        case FamilyTag::S5: return "S5";
        case FamilyTag::S9: return "S9";
    }
    return "?";
}

const char* family_error_message(FamilyError err) {
    switch (err) {
        case FamilyError::EvenN:
            return "even n: T(n) in {3n/2+1, 3n/2+2}, no sequence family";
        case FamilyError::ResidueThreeMod4NotCovered:
            return "n = 3 mod 4 is not covered by these families";
        case FamilyError::BelowMinimum:
            return "n is below the family minimum (S5: 29, S9: 33, S1: 37)";
    }
    return "?";
}

int family_param_s(int n) {
    const auto res = family_of(n);
    if (const auto* err = std::get_if<FamilyError>(&res))
        throw std::invalid_argument(family_error_message(*err));
    return (n - std::get<Family>(res).min_n) / 12;
}

const char* phase_name(Phase p) {
    static const char* names[] = {"W1", "W2", "W3", "W4", "W5", "W6",
                                  "A1", "A2", "A3", "A4", "A5",
                                  "B1", "B2", "B3"};
    return names[static_cast<int>(p)];
}

bool is_waste_phase(Phase p) {
    return static_cast<int>(p) <= static_cast<int>(Phase::W6);
}

FlipSeq AnnotatedSeq::flips() const {
    FlipSeq out;
    out.reserve(items.size());
    for (const auto& it : items) out.push_back(it.length);
    return out;
}

namespace {

// exact division; any remainder is a construction bug
int div3(int x) {
    if (x % 3 != 0) throw std::logic_error("B-phase arithmetic not divisible by 3");
    return x / 3;
}

struct Builder {
    AnnotatedSeq seq;

    void add(Phase p, std::initializer_list<int> flips) {
        for (int k : flips) seq.items.push_back({k, p});
    }
    // one group of flips per i, 0 <= i < s, group emitted in listed order
    template <typename F>
    void indexed(Phase p, int s, F&& group_of) {
        for (int i = 0; i < s; ++i)
            for (int k : group_of(i)) seq.items.push_back({k, p});
    }
};

AnnotatedSeq gen_s1(int n) {
    const int s = (n - 37) / 12;
    const int h = (n - 1) / 2;
    const int q = div3(2 * n + 1);
    Builder b;
    b.add(Phase::W1, {n, n - 9, n - 21, n - 13, n - 15});
    b.indexed(Phase::W2, 2 * s, [&](int i) { return std::vector<int>{n - 39 - 6 * i}; });
    b.indexed(Phase::W3, s, [&](int i) { return std::vector<int>{6 + 12 * i}; });
    b.add(Phase::W4, {n - 19, 10, n - 1, n - 13, n - 15, 14, n - 9, n - 19, n - 15, 12,
                      n - 3, 2, 14, n - 17});
    b.indexed(Phase::W5, s, [&](int i) { return std::vector<int>{6, 4, n - 39 - 12 * i}; });
    b.add(Phase::W6, {n});
    b.add(Phase::A1, {6, 32, 14, 20, 10, 2, 28, 4, 30, 8});
    b.indexed(Phase::A2, s, [&](int i) { return std::vector<int>{44 + 12 * i, 4, 6}; });
    b.add(Phase::A3, {n - 1});
    b.indexed(Phase::A4, s,
              [&](int i) { return std::vector<int>{n - 9 - 6 * i, n - 11 - 12 * i, n - 5 - 6 * i}; });
    b.add(Phase::A5, {h, h + 4, h - 2, 10, h - 4, h + 2, h + 8, n});
    b.add(Phase::B1, {q + 3});
    b.indexed(Phase::B2, s, [&](int i) {
        return std::vector<int>{q - 3 - 8 * i, q - 1 - 8 * i, q + 7 + 4 * i,
                                6 + 12 * i,    4 + 12 * i,   q + 3 + 4 * i};
    });
    b.add(Phase::B3, {10, 24, 2, n - 3, n - 15, n - 19, n - 17, n - 11, n - 27, n - 9,
                      n - 1, n - 21, n - 9, 4, 6, 18, 14});
    return b.seq;
}

AnnotatedSeq gen_s5(int n) {
    const int s = (n - 29) / 12;
    const int h = (n - 1) / 2;
    const int q = div3(2 * n - 1);
    Builder b;
    b.add(Phase::W1, {n, n - 9, 4, 10, n - 3, n - 15, n - 25});
    b.indexed(Phase::W2, 2 * s, [&](int i) { return std::vector<int>{n - 31 - 6 * i}; });
    b.indexed(Phase::W3, s, [&](int i) { return std::vector<int>{6 + 12 * i}; });
    b.add(Phase::W4, {n - 7, n - 1, n - 11, 6, 4, n - 5, 10, n - 15});
    b.indexed(Phase::W5, s, [&](int i) { return std::vector<int>{6, 4, n - 31 - 12 * i}; });
    b.add(Phase::W6, {n});
    b.add(Phase::A1, {18, 20, 12, 4, 6, 24, 16, 26, 16, 4, 18});
    b.indexed(Phase::A2, s, [&](int i) { return std::vector<int>{36 + 12 * i, 4, 6}; });
    b.add(Phase::A3, {n - 1});
    b.indexed(Phase::A4, s,
              [&](int i) { return std::vector<int>{n - 9 - 6 * i, n - 11 - 12 * i, n - 5 - 6 * i}; });
    b.add(Phase::A5, {h - 6, h + 6, n});
    b.add(Phase::B1, {q - 3});
    b.indexed(Phase::B2, s, [&](int i) {
        return std::vector<int>{q - 9 - 8 * i, q - 7 - 8 * i, q + 1 + 4 * i,
                                6 + 12 * i,    4 + 12 * i,   q - 3 + 4 * i};
    });
    b.add(Phase::B3, {12, n - 5, 4, n - 13, n - 15, n - 21, n - 25, n - 11, n - 9, n - 1,
                      6, 4, 14});
    return b.seq;
}

AnnotatedSeq gen_s9(int n) {
    const int s = (n - 33) / 12;
    const int h = (n - 1) / 2;
    const int q = div3(2 * n);
    Builder b;
    b.add(Phase::W1, {n, 14, 4, 10, n - 7, n - 29});
    b.indexed(Phase::W2, 2 * s, [&](int i) { return std::vector<int>{n - 35 - 6 * i}; });
    b.indexed(Phase::W3, s, [&](int i) { return std::vector<int>{6 + 12 * i}; });
    b.add(Phase::W4, {n - 11, n - 1, n - 9, 4, n - 13, n - 11, 8, 10, n - 5, 10, n - 19});
    b.indexed(Phase::W5, s, [&](int i) { return std::vector<int>{6, 4, n - 35 - 12 * i}; });
    b.add(Phase::W6, {n});
    b.add(Phase::A1, {24, 16, 14, 4});
    b.indexed(Phase::A2, s, [&](int i) { return std::vector<int>{40 + 12 * i, 4, 6}; });
    b.add(Phase::A3, {n - 1});
    b.indexed(Phase::A4, s,
              [&](int i) { return std::vector<int>{n - 9 - 6 * i, n - 11 - 12 * i, n - 5 - 6 * i}; });
    b.add(Phase::A5, {h + 10, 12, 10, 4, 14, 22, 6, 24, h + 14, h - 6, h, n});
    b.add(Phase::B1, {q});
    b.indexed(Phase::B2, s, [&](int i) {
        return std::vector<int>{q - 6 - 8 * i, q - 4 - 8 * i, q + 4 + 4 * i,
                                6 + 12 * i,    4 + 12 * i,   q + 4 * i};
    });
    b.add(Phase::B3, {18, n - 5, n - 19, n - 13, 8, n - 19, n - 29, n - 9, 14, n - 1,
                      n - 17, n - 13, 10, 4, n - 9});
    return b.seq;
}

}  // namespace

AnnotatedSeq generate(int n) {
    const auto res = family_of(n);
    if (const auto* err = std::get_if<FamilyError>(&res))
        throw std::invalid_argument(std::string("generate(") + std::to_string(n) +
                                    "): " + family_error_message(*err));
    AnnotatedSeq seq;
    switch (std::get<Family>(res).tag) {
        case FamilyTag::S1: seq = gen_s1(n); break;
        case FamilyTag::S5: seq = gen_s5(n); break;
        case FamilyTag::S9: seq = gen_s9(n); break;
    }
    seq.n = n;
    seq.family = std::get<Family>(res).tag;
    assert(static_cast<int>(seq.items.size()) == (3 * n + 3) / 2);
    return seq;
}

PhaseLengths expected_lengths(int n) {
    const auto res = family_of(n);
    if (const auto* err = std::get_if<FamilyError>(&res))
        throw std::invalid_argument(family_error_message(*err));
    const int s = (n - std::get<Family>(res).min_n) / 12;
    switch (std::get<Family>(res).tag) {
        case FamilyTag::S1: return {6 * s + 20, 6 * s + 19, 6 * s + 18};
        case FamilyTag::S5: return {6 * s + 16, 6 * s + 15, 6 * s + 14};
        case FamilyTag::S9: return {6 * s + 18, 6 * s + 17, 6 * s + 16};
    }
    throw std::logic_error("bad family tag");
}

}  // namespace pancake
