#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pancake/exact.hpp"
#include "pancake/search.hpp"
#include "pancake/sequences.hpp"
#include "pancake/verify.hpp"

// File formats: sequence documents (JSON or a plain flip list), the bundled
// corpus of reference sequences with their full state traces, search result
// records, and the solve result cache.
namespace pancake {

struct SequenceDocument {
    int n = 0;
    std::optional<FamilyTag> family;
    FlipSeq flips;
    std::vector<Phase> phases;  // empty or one tag per flip
    std::string provenance;
};

SequenceDocument document_from(const AnnotatedSeq& seq, std::string provenance);

// Throws std::runtime_error on schema violations (missing fields, flips out
// of [1, n], phase list of the wrong length).
SequenceDocument document_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SequenceDocument& doc);

// Plain text: header lines "n <N>" / optional "family <tag>", then the flips
// as whitespace-separated integers.
SequenceDocument document_from_text(const std::string& text);
std::string to_text(const SequenceDocument& doc);

// Reads a document from a file, sniffing JSON by a leading '{'.
SequenceDocument load_document(const std::string& path);

// A reference sequence together with every intermediate stack.
struct CorpusEntry {
    std::string id;  // a61, b53, c57
    int n = 0;
    FamilyTag family = FamilyTag::S1;
    FlipSeq flips;
    std::vector<Phase> phases;
    std::vector<Stack> states;  // flips.size() + 1 rows
    std::string provenance;
};

CorpusEntry corpus_entry_from_json(const nlohmann::json& j);
CorpusEntry load_corpus_entry(const std::string& dir, const std::string& id);
std::vector<std::string> corpus_ids();

nlohmann::json to_json(const VerifyReport& rep);
nlohmann::json to_json(const Candidate& c, int n);
nlohmann::json to_json(const SolveResult& r);
SolveResult solve_result_from_json(const nlohmann::json& j);

// On-disk cache of solve results keyed by (n, method).
std::optional<SolveResult> load_cached_solve(const std::string& dir, int n, SolveMethod m);
void store_cached_solve(const std::string& dir, const SolveResult& r);

const char* phase_tag_name(Phase p);
Phase phase_from_name(const std::string& name);

}  // namespace pancake
