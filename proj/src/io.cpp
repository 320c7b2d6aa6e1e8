#include "pancake/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pancake {

using nlohmann::json;

namespace {

FamilyTag family_from_name(const std::string& name) {
    if (name == "S1") return FamilyTag::S1;
    if (name == "S5") return FamilyTag::S5;
    if (name == "S9") return FamilyTag::S9;
    throw std::runtime_error("unknown family tag: " + name);
}

void validate_flips(const SequenceDocument& doc) {
    for (int k : doc.flips)
        if (k < 1 || k > doc.n)
            throw std::runtime_error("flip " + std::to_string(k) + " out of range for n=" +
                                     std::to_string(doc.n));
    if (!doc.phases.empty() && doc.phases.size() != doc.flips.size())
        throw std::runtime_error("phase list length does not match flip list");
}

}  // namespace

const char* phase_tag_name(Phase p) { return phase_name(p); }

Phase phase_from_name(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(Phase::B3); ++i) {
        const auto p = static_cast<Phase>(i);
        if (name == phase_name(p)) return p;
    }
    throw std::runtime_error("unknown phase tag: " + name);
}

SequenceDocument document_from(const AnnotatedSeq& seq, std::string provenance) {
    SequenceDocument doc;
    doc.n = seq.n;
    doc.family = seq.family;
    doc.provenance = std::move(provenance);
    doc.flips.reserve(seq.items.size());
    doc.phases.reserve(seq.items.size());
    for (const auto& it : seq.items) {
        doc.flips.push_back(it.length);
        doc.phases.push_back(it.phase);
    }
    return doc;
}

SequenceDocument document_from_json(const json& j) {
    SequenceDocument doc;
    try {
        doc.n = j.at("n").get<int>();
        doc.flips = j.at("flips").get<FlipSeq>();
        if (j.contains("family") && !j["family"].is_null())
            doc.family = family_from_name(j["family"].get<std::string>());
        if (j.contains("phases"))
            for (const auto& p : j["phases"]) doc.phases.push_back(phase_from_name(p.get<std::string>()));
        doc.provenance = j.value("provenance", "");
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("bad sequence document: ") + e.what());
    }
    if (doc.n < 1) throw std::runtime_error("bad sequence document: n must be positive");
    validate_flips(doc);
    return doc;
}

json to_json(const SequenceDocument& doc) {
    json j{{"n", doc.n}, {"flips", doc.flips}};
    if (doc.family) j["family"] = family_name(*doc.family);
    if (!doc.phases.empty()) {
        json ph = json::array();
        for (Phase p : doc.phases) ph.push_back(phase_name(p));
        j["phases"] = std::move(ph);
    }
    if (!doc.provenance.empty()) j["provenance"] = doc.provenance;
    return j;
}

SequenceDocument document_from_text(const std::string& text) {
    SequenceDocument doc;
    std::istringstream in(text);
    std::string line;
    bool have_n = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head == "n") {
            if (!(ls >> doc.n)) throw std::runtime_error("bad n line");
            have_n = true;
        } else if (head == "family") {
            std::string f;
            ls >> f;
            doc.family = family_from_name(f);
        } else if (head == "flips") {
            int k;
            while (ls >> k) doc.flips.push_back(k);
        } else if (head == "phases") {
            std::string p;
            while (ls >> p) doc.phases.push_back(phase_from_name(p));
        } else {
            throw std::runtime_error("unrecognized line: " + line);
        }
    }
    if (!have_n) throw std::runtime_error("text document is missing the n line");
    validate_flips(doc);
    return doc;
}

std::string to_text(const SequenceDocument& doc) {
    std::ostringstream os;
    os << "n " << doc.n << '\n';
    if (doc.family) os << "family " << family_name(*doc.family) << '\n';
    if (!doc.provenance.empty()) os << "# " << doc.provenance << '\n';
    os << "flips";
    for (int k : doc.flips) os << ' ' << k;
    os << '\n';
    if (!doc.phases.empty()) {
        os << "phases";
        for (Phase p : doc.phases) os << ' ' << phase_name(p);
        os << '\n';
    }
    return os.str();
}

SequenceDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return document_from_json(json::parse(text));
    return document_from_text(text);
}

std::vector<std::string> corpus_ids() { return {"a61", "b53", "c57"}; }

CorpusEntry corpus_entry_from_json(const json& j) {
    CorpusEntry e;
    try {
        e.id = j.at("id").get<std::string>();
        e.n = j.at("n").get<int>();
        e.family = family_from_name(j.at("family").get<std::string>());
        e.flips = j.at("flips").get<FlipSeq>();
        for (const auto& p : j.at("phases")) e.phases.push_back(phase_from_name(p.get<std::string>()));
        e.states = j.at("states").get<std::vector<Stack>>();
        e.provenance = j.value("provenance", "");
    } catch (const json::exception& ex) {
        throw std::runtime_error(std::string("bad corpus entry: ") + ex.what());
    }
    if (e.flips.size() + 1 != e.states.size())
        throw std::runtime_error("corpus entry " + e.id + ": state count mismatch");
    if (static_cast<int>(e.flips.size()) != (3 * e.n + 3) / 2)
        throw std::runtime_error("corpus entry " + e.id + ": wrong sequence length");
    return e;
}

CorpusEntry load_corpus_entry(const std::string& dir, const std::string& id) {
    const auto path = std::filesystem::path(dir) / (id + ".json");
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus entry " + path.string());
    json j;
    in >> j;
    return corpus_entry_from_json(j);
}

json to_json(const VerifyReport& rep) {
    json violations = json::array();
    for (const auto& v : rep.phase_violations)
        violations.push_back({{"index", v.index},
                              {"expected", v.expected == FlipClass::Waste ? "waste" : "improve"},
                              {"actual", v.actual == FlipClass::Waste ? "waste" : "improve"}});
    return json{{"sorted", rep.sorted},
                {"total_flips", rep.total_flips},
                {"waste_count", rep.waste_count},
                {"improve_count", rep.improve_count},
                {"phase_violations", std::move(violations)},
                {"final_stack", rep.final_stack}};
}

json to_json(const Candidate& c, int n) {
    return json{{"n", n},
                {"rank", c.rank},
                {"sigma", c.sigma.order},
                {"waste_prefix", c.waste_prefix},
                {"completion", c.completion.flips},
                {"length", c.waste_prefix.size() + c.completion.flips.size()}};
}

json to_json(const SolveResult& r) {
    return json{{"n", r.n},
                {"method", solve_method_name(r.method)},
                {"t", r.t_value},
                {"witness", r.witness},
                {"explored", r.explored}};
}

SolveResult solve_result_from_json(const json& j) {
    SolveResult r;
    r.n = j.at("n").get<int>();
    const std::string m = j.at("method").get<std::string>();
    if (m == "bfs")
        r.method = SolveMethod::BFS;
    else if (m == "bidir")
        r.method = SolveMethod::Bidirectional;
    else if (m == "ida")
        r.method = SolveMethod::IDAStar;
    else
        throw std::runtime_error("unknown solve method: " + m);
    r.t_value = j.at("t").get<int>();
    r.witness = j.at("witness").get<FlipSeq>();
    r.explored = j.value("explored", std::uint64_t(0));
    return r;
}

std::optional<SolveResult> load_cached_solve(const std::string& dir, int n, SolveMethod m) {
    const auto path = std::filesystem::path(dir) /
                      ("solve_" + std::string(solve_method_name(m)) + "_n" + std::to_string(n) + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        json j;
        in >> j;
        auto r = solve_result_from_json(j);
        if (r.n != n || r.method != m) return std::nullopt;
        return r;
    } catch (const std::exception&) {
        return std::nullopt;  // a stale or corrupt cache entry is recomputed
    }
}

void store_cached_solve(const std::string& dir, const SolveResult& r) {
    std::filesystem::create_directories(dir);
    const auto path = std::filesystem::path(dir) /
                      ("solve_" + std::string(solve_method_name(r.method)) + "_n" +
                       std::to_string(r.n) + ".json");
    std::ofstream out(path);
    out << to_json(r).dump(1) << '\n';
}

}  // namespace pancake
