#include "pancake/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace pancake {

namespace {

using nlohmann::json;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

int cut_count(int n) { return (n - 1) / 2; }

}  // namespace

std::uint64_t permutation_count(int count) {
    if (count < 0 || count > 20) throw std::invalid_argument("permutation space too large");
    std::uint64_t f = 1;
    for (int i = 2; i <= count; ++i) f *= i;
    return f;
}

std::vector<int> nth_permutation(int count, std::uint64_t rank) {
    std::vector<std::uint64_t> fact(count, 1);
    for (int i = 1; i < count; ++i) fact[i] = fact[i - 1] * i;
    std::vector<int> avail(count);
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<int> out;
    out.reserve(count);
    for (int i = count - 1; i >= 0; --i) {
        const std::uint64_t f = fact[i];
        const int d = static_cast<int>(rank / f);
        rank %= f;
        out.push_back(avail[d]);
        avail.erase(avail.begin() + d);
    }
    return out;
}

std::uint64_t permutation_rank(const std::vector<int>& perm) {
    const int count = static_cast<int>(perm.size());
    std::vector<std::uint64_t> fact(count, 1);
    for (int i = 1; i < count; ++i) fact[i] = fact[i - 1] * i;
    std::vector<int> avail(count);
    std::iota(avail.begin(), avail.end(), 0);
    std::uint64_t rank = 0;
    for (int i = 0; i < count; ++i) {
        const auto it = std::find(avail.begin(), avail.end(), perm[i]);
        rank += static_cast<std::uint64_t>(it - avail.begin()) * fact[count - 1 - i];
        avail.erase(it);
    }
    return rank;
}

std::variant<WastePrefix, PrefixError> waste_prefix_from_cuts(int n, const CutPermutation& sigma) {
    if (n < 5 || n % 2 == 0) throw std::invalid_argument("cut search needs odd n >= 5");
    const int cuts = cut_count(n);
    {
        std::vector<bool> seen(cuts, false);
        if (static_cast<int>(sigma.order.size()) != cuts)
            throw std::invalid_argument("cut permutation has wrong size");
        for (int m : sigma.order) {
            if (m < 0 || m >= cuts || seen[m])
                throw std::invalid_argument("cut permutation is not a permutation");
            seen[m] = true;
        }
    }

    WastePrefix out;
    out.flips.reserve(cuts + 2);
    Stack s = flipped(neg_identity(n), n);  // [n, n-1, ..., 1]
    out.flips.push_back(n);
    std::vector<int> pos(n + 1);  // abs value -> 0-based index
    for (int i = 0; i < n; ++i) pos[std::abs(s[i])] = i;

    for (int m : sigma.order) {
        const int a = pos[2 * m + 1];
        const int b = pos[2 * m + 2];
        if (std::abs(a - b) != 1)
            throw std::logic_error("uncut pair no longer adjacent");
        const int k = std::min(a, b) + 1;  // prefix ends at the upper element
        if (classify_flip(s, k) == FlipClass::Improve) return PrefixError::SplitWasImprove;
        flip_in_place(s, k);
        for (int i = 0; i < k; ++i) pos[std::abs(s[i])] = i;
        out.flips.push_back(k);
    }

    if (classify_flip(s, n) == FlipClass::Improve)
        throw std::logic_error("final full flip classified as improve");
    flip_in_place(s, n);
    out.flips.push_back(n);
    out.stack = std::move(s);
    return out;
}

std::optional<CutPermutation> try_recover_cuts(int n, const FlipSeq& waste_prefix) {
    const int cuts = cut_count(n);
    if (static_cast<int>(waste_prefix.size()) != cuts + 2) return std::nullopt;
    if (waste_prefix.front() != n || waste_prefix.back() != n) return std::nullopt;
    Stack s = flipped(neg_identity(n), n);
    CutPermutation sigma;
    sigma.order.reserve(cuts);
    for (int i = 1; i <= cuts; ++i) {
        const int k = waste_prefix[i];
        if (k < 1 || k >= n) return std::nullopt;
        const int lo = std::min(std::abs(s[k - 1]), std::abs(s[k]));
        const int hi = std::max(std::abs(s[k - 1]), std::abs(s[k]));
        if (hi != lo + 1 || lo % 2 != 1) return std::nullopt;
        sigma.order.push_back((lo - 1) / 2);
        flip_in_place(s, k);
    }
    return sigma;
}

CutPermutation recover_cuts(int n, const FlipSeq& waste_prefix) {
    auto sigma = try_recover_cuts(n, waste_prefix);
    if (!sigma) throw std::invalid_argument("flip sequence is not a pair-splitting waste prefix");
    return *sigma;
}

FlipSeq Candidate::full_sequence() const {
    FlipSeq all = waste_prefix;
    all.insert(all.end(), completion.flips.begin(), completion.flips.end());
    return all;
}

namespace {

// ---- checkpointing -------------------------------------------------------

json candidate_to_checkpoint_json(const Candidate& c) {
    return json{{"rank", c.rank},
                {"sigma", c.sigma.order},
                {"prefix", c.waste_prefix},
                {"completion", c.completion.flips}};
}

Candidate candidate_from_checkpoint_json(const json& j) {
    Candidate c;
    c.rank = j.at("rank").get<std::uint64_t>();
    c.sigma.order = j.at("sigma").get<std::vector<int>>();
    c.waste_prefix = j.at("prefix").get<FlipSeq>();
    c.completion.outcome = CompletionResult::Outcome::Sorted;
    c.completion.flips = j.at("completion").get<FlipSeq>();
    return c;
}

struct Checkpoint {
    std::filesystem::path path;
    std::string key;
    std::uint64_t total = 0;
    std::uint64_t chunk_size = 0;
    std::uint64_t completed_prefix = 0;  // all indices below this are done
    std::vector<Candidate> successes;    // successes found below the prefix

    bool load() {
        std::ifstream in(path);
        if (!in) return false;
        json j;
        in >> j;
        if (j.value("key", "") != key || j.value("total", std::uint64_t(0)) != total) return false;
        completed_prefix = j.at("completed_prefix").get<std::uint64_t>();
        successes.clear();
        for (const auto& cj : j.at("successes")) successes.push_back(candidate_from_checkpoint_json(cj));
        return true;
    }

    void save(const std::vector<Candidate>& all_successes, std::uint64_t prefix) const {
        json arr = json::array();
        for (const auto& c : all_successes)
            if (c.rank < prefix) arr.push_back(candidate_to_checkpoint_json(c));
        json j{{"key", key},
               {"total", total},
               {"chunk_size", chunk_size},
               {"completed_prefix", prefix},
               {"successes", std::move(arr)}};
        std::filesystem::create_directories(path.parent_path());
        std::ofstream out(path);
        out << j.dump(1) << '\n';
    }
};

// ---- parallel index-space driver ------------------------------------------

// Evaluates eval(i) for i in [start, total) across workers. Chunks are
// claimed atomically; successes are merged in rank order at the end, which
// makes full runs independent of the worker count.
template <typename Eval>
std::vector<Candidate> run_indexed(std::uint64_t start, std::uint64_t total,
                                   const SearchConfig& cfg, Checkpoint* ckpt, Eval&& eval) {
    std::vector<Candidate> results;
    if (ckpt) results = ckpt->successes;

    const std::uint64_t remaining = total > start ? total - start : 0;
    const std::uint64_t chunk = std::clamp<std::uint64_t>(remaining / 256, 64, 4096);
    const std::uint64_t n_chunks = remaining == 0 ? 0 : (remaining + chunk - 1) / chunk;
    if (ckpt) ckpt->chunk_size = chunk;

    int workers = std::max(1, cfg.worker_count);
    workers = static_cast<int>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(n_chunks, 1)));

    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> found{results.size()};
    std::atomic<bool> stop{false};
    std::vector<std::vector<Candidate>> per_worker(workers);
    std::vector<std::uint8_t> chunk_done(n_chunks, 0);
    std::mutex ckpt_mutex;
    std::uint64_t committed_chunks = 0;

    auto maybe_stop = [&] {
        return cfg.stop_after && found.load(std::memory_order_relaxed) >= *cfg.stop_after;
    };

    auto commit = [&](bool final_save) {
        if (!ckpt) return;
        std::lock_guard<std::mutex> lock(ckpt_mutex);
        std::uint64_t before = committed_chunks;
        while (committed_chunks < n_chunks && chunk_done[committed_chunks]) ++committed_chunks;
        if (committed_chunks == before && !final_save) return;
        if (final_save || committed_chunks - before >= 64 || committed_chunks == n_chunks) {
            std::vector<Candidate> snapshot;
            for (const auto& w : per_worker)
                snapshot.insert(snapshot.end(), w.begin(), w.end());
            snapshot.insert(snapshot.end(), results.begin(), results.end());
            ckpt->save(snapshot, start + committed_chunks * chunk);
        }
    };

    auto work = [&](int wid) {
        while (!stop.load(std::memory_order_relaxed) && !maybe_stop()) {
            const std::uint64_t ci = next_chunk.fetch_add(1);
            if (ci >= n_chunks) break;
            const std::uint64_t lo = start + ci * chunk;
            const std::uint64_t hi = std::min(total, lo + chunk);
            bool complete = true;
            for (std::uint64_t i = lo; i < hi; ++i) {
                if (maybe_stop()) {
                    complete = false;
                    break;
                }
                if (auto cand = eval(i)) {
                    per_worker[wid].push_back(std::move(*cand));
                    found.fetch_add(1, std::memory_order_relaxed);
                }
            }
            if (complete) {
                chunk_done[ci] = 1;
                commit(false);
            }
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    stop = true;
    commit(true);

    for (auto& w : per_worker) results.insert(results.end(), w.begin(), w.end());
    std::sort(results.begin(), results.end(),
              [](const Candidate& a, const Candidate& b) { return a.rank < b.rank; });
    return results;
}

std::optional<Candidate> try_candidate(int n, CutPermutation sigma, std::uint64_t rank) {
    auto prefix = waste_prefix_from_cuts(n, sigma);
    if (std::holds_alternative<PrefixError>(prefix)) return std::nullopt;
    auto& wp = std::get<WastePrefix>(prefix);
    auto completion = greedy_improve_completion(wp.stack, n);
    if (!completion.sorted()) return std::nullopt;
    Candidate c;
    c.rank = rank;
    c.sigma = std::move(sigma);
    c.waste_prefix = std::move(wp.flips);
    c.completion = std::move(completion);
    return c;
}

}  // namespace

std::vector<Candidate> exhaustive_search(int n, const SearchConfig& cfg) {
    if (cfg.mode != SearchMode::Exhaustive)
        throw std::invalid_argument("config mode is not Exhaustive");
    const int cuts = cut_count(n);
    const std::uint64_t total = permutation_count(cuts);

    Checkpoint ckpt;
    Checkpoint* ckpt_ptr = nullptr;
    std::uint64_t start = 0;
    if (!cfg.checkpoint_dir.empty()) {
        ckpt.key = "exhaustive_n" + std::to_string(n);
        ckpt.path = std::filesystem::path(cfg.checkpoint_dir) / (ckpt.key + ".json");
        ckpt.total = total;
        if (ckpt.load()) start = ckpt.completed_prefix;
        ckpt_ptr = &ckpt;
    }

    return run_indexed(start, total, cfg, ckpt_ptr, [&](std::uint64_t rank) {
        return try_candidate(n, CutPermutation{nth_permutation(cuts, rank)}, rank);
    });
}

std::vector<Candidate> randomized_search(int n, const SearchConfig& cfg) {
    if (cfg.mode != SearchMode::Randomized)
        throw std::invalid_argument("config mode is not Randomized");
    if (cfg.sample_count == 0) throw std::invalid_argument("sample_count must be >= 1");
    const int cuts = cut_count(n);
    permutation_count(cuts);  // range check only

    // Every sample gets its own generator, so the draw for index i does not
    // depend on worker scheduling.
    auto sample_perm = [&](std::uint64_t idx) {
        std::mt19937_64 eng(splitmix64(cfg.seed ^ (0x9E3779B97F4A7C15ULL * (idx + 1))));
        std::vector<int> perm(cuts);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = cuts - 1; i > 0; --i)
            std::swap(perm[i], perm[eng() % static_cast<std::uint64_t>(i + 1)]);
        return perm;
    };

    Checkpoint ckpt;
    Checkpoint* ckpt_ptr = nullptr;
    std::uint64_t start = 0;
    if (!cfg.checkpoint_dir.empty()) {
        ckpt.key = "randomized_n" + std::to_string(n) + "_seed" + std::to_string(cfg.seed) +
                   "_k" + std::to_string(cfg.sample_count);
        ckpt.path = std::filesystem::path(cfg.checkpoint_dir) / (ckpt.key + ".json");
        ckpt.total = cfg.sample_count;
        if (ckpt.load()) start = ckpt.completed_prefix;
        ckpt_ptr = &ckpt;
    }

    return run_indexed(start, cfg.sample_count, cfg, ckpt_ptr, [&](std::uint64_t idx) {
        return try_candidate(n, CutPermutation{sample_perm(idx)}, idx);
    });
}

std::vector<Candidate> extension_search(const ExtensionSpec& spec, const SearchConfig& cfg) {
    const int n0 = spec.base_n;
    const auto& base = spec.base_waste_skeleton;
    const int len = static_cast<int>(base.size());
    if (n0 < 5 || n0 % 2 == 0) throw std::invalid_argument("base_n must be odd and >= 5");
    if (len != (n0 + 3) / 2 || base.front() != n0 || base.back() != n0)
        throw std::invalid_argument("skeleton must be a waste prefix for base_n");
    const auto pivot_it = std::find(base.begin(), base.end(), n0 - 1);
    if (pivot_it == base.end())
        throw std::invalid_argument("skeleton has no flip of length base_n - 1");
    const int pivot = static_cast<int>(pivot_it - base.begin());

    std::vector<int> eligible = spec.offset_eligible;
    if (eligible.empty()) {
        for (int i = 0; i < len; ++i)
            if (base[i] != n0 && i != pivot) eligible.push_back(i);
    }
    const int bits = static_cast<int>(eligible.size());
    if (bits > 30) throw std::invalid_argument("too many eligible offset positions");

    const int n1 = n0 + spec.offset;
    const std::uint64_t p1_count = pivot;            // insert between flips 1..pivot
    const std::uint64_t p2_count = len - 1 - pivot;  // insert after pivot, before last
    const std::uint64_t masks = std::uint64_t(1) << bits;
    const std::uint64_t total = p1_count * p2_count * masks;

    FlipSeq forced = base;
    for (int i = 0; i < len; ++i)
        if (base[i] == n0 || i == pivot) forced[i] += spec.offset;

    auto eval = [&](std::uint64_t index) -> std::optional<Candidate> {
        const std::uint64_t mask = index % masks;
        const std::uint64_t pp = index / masks;
        const int p1 = 1 + static_cast<int>(pp / p2_count);
        const int p2 = pivot + 1 + static_cast<int>(pp % p2_count);

        FlipSeq flips = forced;
        for (int b = 0; b < bits; ++b)
            if (mask >> b & 1) flips[eligible[b]] += spec.offset;
        FlipSeq cand;
        cand.reserve(flips.size() + spec.insert_before.size() + spec.insert_after.size());
        cand.insert(cand.end(), flips.begin(), flips.begin() + p1);
        cand.insert(cand.end(), spec.insert_before.begin(), spec.insert_before.end());
        cand.insert(cand.end(), flips.begin() + p1, flips.begin() + p2);
        cand.insert(cand.end(), spec.insert_after.begin(), spec.insert_after.end());
        cand.insert(cand.end(), flips.begin() + p2, flips.end());

        Stack s = neg_identity(n1);
        for (int k : cand) {
            if (k < 1 || k > n1) return std::nullopt;
            if (classify_flip(s, k) == FlipClass::Improve) return std::nullopt;
            flip_in_place(s, k);
        }
        auto completion = greedy_improve_completion(s, n1);
        if (!completion.sorted()) return std::nullopt;
        Candidate c;
        c.rank = index;
        if (auto sigma = try_recover_cuts(n1, cand)) c.sigma = std::move(*sigma);
        c.waste_prefix = std::move(cand);
        c.completion = std::move(completion);
        return c;
    };

    return run_indexed(0, total, cfg, nullptr, eval);
}

}  // namespace pancake
