#include "pancake/io.hpp"

#include <filesystem>

#include "doctest.h"

using namespace pancake;
using nlohmann::json;

TEST_SUITE_BEGIN("io");

TEST_CASE("sequence document json round-trip") {
    const auto doc = document_from(generate(29), "test");
    const auto back = document_from_json(to_json(doc));
    CHECK(back.n == 29);
    CHECK(back.family == FamilyTag::S5);
    CHECK(back.flips == doc.flips);
    CHECK(back.phases == doc.phases);
    CHECK(back.provenance == "test");
}

TEST_CASE("sequence document text round-trip") {
    const auto doc = document_from(generate(33), "text test");
    const auto back = document_from_text(to_text(doc));
    CHECK(back.n == 33);
    CHECK(back.family == FamilyTag::S9);
    CHECK(back.flips == doc.flips);
    CHECK(back.phases == doc.phases);
}

TEST_CASE("bad documents are rejected") {
    CHECK_THROWS_AS(document_from_json(json{{"flips", {1, 2}}}), std::runtime_error);
    CHECK_THROWS_AS(document_from_json(json{{"n", 3}, {"flips", {4}}}), std::runtime_error);
    CHECK_THROWS_AS(document_from_json(json{{"n", 3}, {"flips", {1}}, {"phases", {"W1", "W2"}}}),
                    std::runtime_error);
    CHECK_THROWS_AS(document_from_text("flips 1 2 3\n"), std::runtime_error);
    CHECK_THROWS_AS(document_from_text("n 3\nnonsense\n"), std::runtime_error);
}

TEST_CASE("corpus entries load and certify") {
    for (const auto& id : corpus_ids()) {
        CAPTURE(id);
        const auto entry = load_corpus_entry("data/corpus", id);
        CHECK(entry.id == id);
        CHECK(static_cast<int>(entry.flips.size()) == (3 * entry.n + 3) / 2);
        CHECK(entry.states.front() == neg_identity(entry.n));
        CHECK(entry.states.back() == identity(entry.n));
        for (size_t i = 0; i < entry.flips.size(); ++i)
            REQUIRE(entry.states[i + 1] == flipped(entry.states[i], entry.flips[i]));

        AnnotatedSeq seq;
        seq.n = entry.n;
        seq.family = entry.family;
        for (size_t i = 0; i < entry.flips.size(); ++i)
            seq.items.push_back({entry.flips[i], entry.phases[i]});
        const auto rep = verify_sorts(seq);
        CHECK(rep.sorted);
        CHECK(rep.phase_violations.empty());
        CHECK(rep.waste_count == (entry.n + 3) / 2);
    }
}

TEST_CASE("the generators reproduce the corpus flip for flip") {
    for (const auto& id : corpus_ids()) {
        CAPTURE(id);
        const auto entry = load_corpus_entry("data/corpus", id);
        CHECK(generate(entry.n).flips() == entry.flips);
    }
}

TEST_CASE("verify report serialization") {
    const auto j = to_json(verify_sorts(3, {3}));
    CHECK(j["sorted"] == false);
    CHECK(j["total_flips"] == 1);
    CHECK(j["final_stack"] == json::array({3, 2, 1}));
}

TEST_CASE("solve cache round-trip") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "pancake_cache_test";
    fs::remove_all(dir);
    CHECK(!load_cached_solve(dir.string(), 2, SolveMethod::BFS).has_value());

    SolveResult r;
    r.n = 2;
    r.method = SolveMethod::BFS;
    r.t_value = 4;
    r.witness = {1, 2, 1, 2};
    r.explored = 8;
    store_cached_solve(dir.string(), r);

    const auto hit = load_cached_solve(dir.string(), 2, SolveMethod::BFS);
    REQUIRE(hit.has_value());
    CHECK(hit->t_value == 4);
    CHECK(hit->witness == r.witness);
    CHECK(!load_cached_solve(dir.string(), 2, SolveMethod::IDAStar).has_value());
    fs::remove_all(dir);
}

TEST_SUITE_END();
