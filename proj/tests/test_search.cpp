#include "pancake/search.hpp"

#include <filesystem>

#include "doctest.h"
#include "pancake/exact.hpp"
#include "pancake/sequences.hpp"

using namespace pancake;

namespace {

FlipSeq waste_phase(int n) {
    FlipSeq w;
    for (const auto& it : generate(n).items)
        if (is_waste_phase(it.phase)) w.push_back(it.length);
    return w;
}

FlipSeq improve_phases(int n) {
    FlipSeq ab;
    for (const auto& it : generate(n).items)
        if (!is_waste_phase(it.phase)) ab.push_back(it.length);
    return ab;
}

}  // namespace

TEST_SUITE_BEGIN("search");

TEST_CASE("permutation ranking round-trips") {
    CHECK(permutation_count(0) == 1);
    CHECK(permutation_count(5) == 120);
    CHECK(nth_permutation(3, 0) == std::vector<int>{0, 1, 2});
    CHECK(nth_permutation(3, 5) == std::vector<int>{2, 1, 0});
    for (std::uint64_t r = 0; r < 120; ++r)
        CHECK(permutation_rank(nth_permutation(5, r)) == r);
}

TEST_CASE("waste prefix shape for n=5") {
    const auto res = waste_prefix_from_cuts(5, CutPermutation{{0, 1}});
    REQUIRE(std::holds_alternative<WastePrefix>(res));
    const auto& wp = std::get<WastePrefix>(res);
    CHECK(wp.flips == FlipSeq{5, 4, 2, 5});
    CHECK(wp.stack == Stack{-1, 5, 4, -2, -3});
}

TEST_CASE("waste prefix properties") {
    for (int n : {5, 9, 13, 17}) {
        CAPTURE(n);
        const int cuts = (n - 1) / 2;
        for (std::uint64_t r = 0; r < std::min<std::uint64_t>(permutation_count(cuts), 50); ++r) {
            const CutPermutation sigma{nth_permutation(cuts, r)};
            const auto res = waste_prefix_from_cuts(n, sigma);
            if (!std::holds_alternative<WastePrefix>(res)) continue;
            const auto& wp = std::get<WastePrefix>(res);
            CHECK(static_cast<int>(wp.flips.size()) == (n + 3) / 2);
            // every middle flip is a waste split of one pair boundary
            Stack s = neg_identity(n);
            for (size_t i = 0; i < wp.flips.size(); ++i) {
                if (i > 0 && i + 1 < wp.flips.size())
                    CHECK(classify_flip(s, wp.flips[i]) == FlipClass::Waste);
                flip_in_place(s, wp.flips[i]);
            }
            CHECK(s == wp.stack);
            // the prefix leaves clans of size 2 plus one free +-1
            int clans2 = 0, frees = 0;
            int free_value = 0;
            for (const auto& seg : decompose_runs(wp.stack)) {
                if (seg.kind == RunKind::Clan && seg.length == 2) {
                    ++clans2;
                } else {
                    REQUIRE(seg.kind == RunKind::Free);
                    ++frees;
                    free_value = wp.stack[seg.start];
                }
            }
            CHECK(clans2 == (n - 1) / 2);
            CHECK(frees == 1);
            CHECK(std::abs(free_value) == 1);
            // cut order reads back
            CHECK(recover_cuts(n, wp.flips) == sigma);
        }
    }
}

TEST_CASE("cut permutation validation") {
    CHECK_THROWS_AS(waste_prefix_from_cuts(6, CutPermutation{{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(waste_prefix_from_cuts(5, CutPermutation{{0}}), std::invalid_argument);
    CHECK_THROWS_AS(waste_prefix_from_cuts(5, CutPermutation{{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(recover_cuts(5, {5, 1, 1, 5}), std::invalid_argument);
}

TEST_CASE("the W phase of generate(29) is a cut permutation candidate") {
    const FlipSeq w = waste_phase(29);
    const CutPermutation sigma = recover_cuts(29, w);
    CHECK(sigma.order.size() == 14);
    CHECK(FlipSeq(sigma.order.begin(), sigma.order.begin() + 3) == FlipSeq{4, 6, 9});

    const auto res = waste_prefix_from_cuts(29, sigma);
    REQUIRE(std::holds_alternative<WastePrefix>(res));
    const auto& wp = std::get<WastePrefix>(res);
    CHECK(wp.flips == w);

    const auto comp = greedy_improve_completion(wp.stack, 29);
    REQUIRE(comp.sorted());
    CHECK(comp.flips == improve_phases(29));
}

TEST_CASE("exhaustive search finds nothing below the true distance") {
    // ida_T gives the exact distances; (3n+3)/2 is shorter for these n, so
    // the restricted search must come back empty.
    SearchConfig cfg;
    for (int n : {5, 7, 9}) {
        CAPTURE(n);
        CHECK(ida_T(n).t_value > (3 * n + 3) / 2);
        CHECK(exhaustive_search(n, cfg).empty());
    }
}

TEST_CASE("exhaustive results do not depend on the worker count") {
    SearchConfig one, four;
    one.worker_count = 1;
    four.worker_count = 4;
    for (int n : {9, 11, 13}) {
        CAPTURE(n);
        const auto a = exhaustive_search(n, one);
        const auto b = exhaustive_search(n, four);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].rank == b[i].rank);
            CHECK(a[i].waste_prefix == b[i].waste_prefix);
        }
    }
}

TEST_CASE("randomized search is reproducible") {
    SearchConfig cfg;
    cfg.mode = SearchMode::Randomized;
    cfg.seed = 7;
    cfg.sample_count = 20000;
    cfg.worker_count = 1;
    const auto a = randomized_search(17, cfg);
    cfg.worker_count = 4;
    const auto b = randomized_search(17, cfg);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].rank == b[i].rank);
    CHECK(a.empty());  // no length-27 sequence exists
}

TEST_CASE("randomized search rejects a missing sample count") {
    SearchConfig cfg;
    cfg.mode = SearchMode::Randomized;
    CHECK_THROWS_AS(randomized_search(9, cfg), std::invalid_argument);
}

TEST_CASE("checkpointed search resumes to the same result") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "pancake_ckpt_test";
    fs::remove_all(dir);

    SearchConfig cfg;
    cfg.checkpoint_dir = dir.string();
    cfg.worker_count = 2;
    const auto first = exhaustive_search(11, cfg);
    CHECK(fs::exists(dir / "exhaustive_n11.json"));
    // a second run starts from the completed prefix and returns the same set
    const auto second = exhaustive_search(11, cfg);
    CHECK(first.size() == second.size());
    fs::remove_all(dir);
}

TEST_CASE("extension search grows 29 into 41") {
    ExtensionSpec spec;
    spec.base_n = 29;
    spec.base_waste_skeleton = waste_phase(29);

    SearchConfig cfg;
    cfg.worker_count = 4;
    cfg.stop_after = 1;
    const auto found = extension_search(spec, cfg);
    REQUIRE(!found.empty());
    for (const auto& c : found) {
        const auto rep = verify_sorts(41, c.full_sequence());
        CHECK(rep.sorted);
        CHECK(rep.total_flips == (3 * 41 + 3) / 2);
        CHECK(rep.waste_count == (41 + 3) / 2);
        CHECK(!c.sigma.order.empty());  // successes split pair boundaries
    }
}

TEST_CASE("extension search validates its skeleton") {
    ExtensionSpec spec;
    spec.base_n = 29;
    spec.base_waste_skeleton = {29, 5, 29};
    SearchConfig cfg;
    CHECK_THROWS_AS(extension_search(spec, cfg), std::invalid_argument);
}

TEST_SUITE_END();
