#include "pancake/verify.hpp"

#include <sstream>
#include <stdexcept>

namespace pancake {

namespace {

void check_flip_range(int k, int n, int index) {
    if (k < 1 || k > n) {
        std::ostringstream os;
        os << "flip " << k << " at index " << index << " is out of range for n=" << n;
        throw std::out_of_range(os.str());
    }
}

VerifyReport replay(int n, const FlipSeq& flips, const std::vector<Phase>* phases) {
    VerifyReport rep;
    rep.total_flips = static_cast<int>(flips.size());
    Stack s = neg_identity(n);
    for (int i = 0; i < static_cast<int>(flips.size()); ++i) {
        const int k = flips[i];
        check_flip_range(k, n, i);
        const FlipClass cls = classify_flip(s, k);
        if (cls == FlipClass::Improve)
            ++rep.improve_count;
        else
            ++rep.waste_count;
        if (phases) {
            const FlipClass expected =
                is_waste_phase((*phases)[i]) ? FlipClass::Waste : FlipClass::Improve;
            if (cls != expected) rep.phase_violations.push_back({i, expected, cls});
        }
        flip_in_place(s, k);
    }
    rep.sorted = is_sorted(s);
    rep.final_stack = std::move(s);
    return rep;
}

}  // namespace

VerifyReport verify_sorts(int n, const FlipSeq& seq) {
    return replay(n, seq, nullptr);
}

VerifyReport verify_sorts(const AnnotatedSeq& seq) {
    std::vector<Phase> phases;
    phases.reserve(seq.items.size());
    for (const auto& it : seq.items) phases.push_back(it.phase);
    return replay(seq.n, seq.flips(), &phases);
}

Trace trace(int n, const FlipSeq& seq) {
    Trace t;
    t.flips = seq;
    t.states.reserve(seq.size() + 1);
    Stack s = neg_identity(n);
    t.states.push_back(s);
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
        check_flip_range(seq[i], n, i);
        flip_in_place(s, seq[i]);
        t.states.push_back(s);
    }
    return t;
}

std::string render_trace(const Trace& t, int per_line) {
    std::ostringstream os;
    os << format_stack(t.states[0], per_line) << '\n';
    for (size_t i = 0; i < t.flips.size(); ++i) {
        os << "flip " << t.flips[i] << '\n';
        os << format_stack(t.states[i + 1], per_line) << '\n';
    }
    return os.str();
}

CompletionResult greedy_improve_completion(const Stack& start, int budget) {
    CompletionResult res;
    Stack s = start;
    while (!is_sorted(s)) {
        if (static_cast<int>(res.flips.size()) >= budget) {
            res.outcome = CompletionResult::Outcome::BudgetExceeded;
            res.final_stack = std::move(s);
            return res;
        }
        const auto k = improve_candidate(s);
        if (!k) {
            res.outcome = CompletionResult::Outcome::Stuck;
            res.reason = "no improving flip exists";
            res.final_stack = std::move(s);
            return res;
        }
        res.flips.push_back(*k);
        flip_in_place(s, *k);
    }
    res.outcome = CompletionResult::Outcome::Sorted;
    res.final_stack = std::move(s);
    return res;
}

}  // namespace pancake
