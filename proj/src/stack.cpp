#include "pancake/stack.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pancake {

Stack neg_identity(int n) {
    if (n < 1) throw std::invalid_argument("stack size must be positive");
    Stack s(n);
    for (int i = 0; i < n; ++i) s[i] = -(i + 1);
    return s;
}

Stack identity(int n) {
    if (n < 1) throw std::invalid_argument("stack size must be positive");
    Stack s(n);
    for (int i = 0; i < n; ++i) s[i] = i + 1;
    return s;
}

bool is_signed_permutation(const Stack& s) {
    const int n = static_cast<int>(s.size());
    if (n == 0) return false;
    std::vector<bool> seen(n + 1, false);
    for (int v : s) {
        int a = std::abs(v);
        if (a < 1 || a > n || seen[a]) return false;
        seen[a] = true;
    }
    return true;
}

bool is_sorted(const Stack& s) {
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        if (s[i] != i + 1) return false;
    return true;
}

void flip_in_place(Stack& s, int k) {
    const int n = static_cast<int>(s.size());
    if (k < 1 || k > n) throw std::out_of_range("flip length out of range");
    std::reverse(s.begin(), s.begin() + k);
    for (int i = 0; i < k; ++i) s[i] = -s[i];
}

Stack flipped(const Stack& s, int k) {
    Stack t = s;
    flip_in_place(t, k);
    return t;
}

int adjacency_count(const Stack& s) {
    const int n = static_cast<int>(s.size());
    int c = 0;
    for (int i = 0; i + 1 < n; ++i)
        if (s[i + 1] == s[i] + 1) ++c;
    if (s[n - 1] == n) ++c;
    return c;
}

int flip_adjacency_delta(const Stack& s, int k) {
    const int n = static_cast<int>(s.size());
    if (k < 1 || k > n) throw std::out_of_range("flip length out of range");
    bool before, after;
    if (k == n) {
        before = s[n - 1] == n;
        after = -s[0] == n;
    } else {
        before = s[k] == s[k - 1] + 1;
        after = s[k] == -s[0] + 1;
    }
    return static_cast<int>(after) - static_cast<int>(before);
}

FlipClass classify_flip(const Stack& s, int k) {
    return flip_adjacency_delta(s, k) == 1 ? FlipClass::Improve : FlipClass::Waste;
}

std::vector<RunSegment> decompose_runs(const Stack& s) {
    const int n = static_cast<int>(s.size());
    std::vector<RunSegment> segs;
    int i = 0;
    while (i < n) {
        if (i + 1 < n && std::abs(s[i + 1] - s[i]) == 1) {
            const int d = s[i + 1] - s[i];
            int j = i + 1;
            while (j + 1 < n && s[j + 1] - s[j] == d) ++j;
            segs.push_back({i, j - i + 1, d == 1 ? RunKind::Block : RunKind::Clan});
            i = j + 1;
        } else {
            segs.push_back({i, 1, RunKind::Free});
            ++i;
        }
    }
    return segs;
}

int max_clan_size(const Stack& s) {
    int best = 0;
    for (const auto& seg : decompose_runs(s))
        if (seg.kind == RunKind::Clan) best = std::max(best, seg.length);
    return best;
}

std::optional<int> improve_candidate(const Stack& s) {
    const int n = static_cast<int>(s.size());
    const int target = -s[0] + 1;
    if (target == n + 1) return n;  // always an improve: top carries the n pancake
    if (target == 0) return std::nullopt;
    for (int j = 1; j < n; ++j) {
        if (s[j] == target)
            return flip_adjacency_delta(s, j) == 1 ? std::optional<int>(j) : std::nullopt;
    }
    return std::nullopt;
}

std::string format_stack(const Stack& s, int per_line) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        if (i > 0) os << (per_line > 0 && i % per_line == 0 ? "\n " : " ");
        os << s[i];
    }
    os << ']';
    return os.str();
}

}  // namespace pancake
