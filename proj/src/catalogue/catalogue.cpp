#include "gemc/catalogue.hpp"

#include <limits>
#include <map>
#include <set>

#include <json.hpp>

#include "gemc/canonical.hpp"
#include "gemc/error.hpp"
#include "gemc/gem_format.hpp"
#include "gemc/gm.hpp"
#include "gemc/heegaard.hpp"

namespace gemc {

using nlohmann::json;

namespace {

SemanticError::Cause cause_of(const ValidationError& e) {
    if (dynamic_cast<const FixedPointError*>(&e)) return SemanticError::Cause::FixedPoint;
    if (dynamic_cast<const DisconnectedError*>(&e)) return SemanticError::Cause::Disconnected;
    if (dynamic_cast<const OddOrderError*>(&e)) return SemanticError::Cause::OddOrder;
    return SemanticError::Cause::NotInvolution;
}

}  // namespace

CatalogueEntry parse_jsonl_line(std::string_view line, std::size_t line_number) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw SyntaxError(e.what(), line_number, e.byte == 0 ? 1 : e.byte);
    }
    auto bad = [&](const std::string& message) { return SyntaxError(message, line_number, 1); };
    if (!j.is_object()) throw bad("catalogue line is not a JSON object");
    if (!j.contains("id") || !j["id"].is_string()) throw bad("missing string key 'id'");
    if (!j.contains("order") || !j["order"].is_number_unsigned()) throw bad("missing non-negative integer key 'order'");
    if (!j.contains("matchings") || !j["matchings"].is_array() || j["matchings"].size() != kColourCount)
        throw bad("'matchings' must be an array of four arrays");

    CatalogueEntry entry;
    entry.id = j["id"].get<std::string>();
    const auto order = j["order"].get<std::size_t>();
    std::array<ColouredGraph::Matching, kColourCount> m;
    for (std::size_t c = 0; c < kColourCount; ++c) {
        const json& arr = j["matchings"][c];
        if (!arr.is_array()) throw bad("matchings[" + std::to_string(c) + "] is not an array");
        for (const json& v : arr) {
            if (!v.is_number_integer()) throw bad("matchings[" + std::to_string(c) + "] holds a non-integer");
            if (v.get<long long>() < -1 || v.get<long long>() > std::numeric_limits<Vertex>::max())
                throw SemanticError(SemanticError::Cause::NotInvolution,
                                    "matchings[" + std::to_string(c) + "] holds an out-of-range vertex", line_number, 1);
            m[c].push_back(v.get<Vertex>());
        }
    }
    try {
        entry.graph = build_graph(order, std::move(m));
    } catch (const ValidationError& e) {
        throw SemanticError(cause_of(e), e.what(), line_number, 1);
    }
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw bad("'name' must be a string");
        entry.name = j["name"].get<std::string>();
    }
    if (j.contains("known_complexity")) {
        if (!j["known_complexity"].is_number_unsigned()) throw bad("'known_complexity' must be a non-negative integer");
        entry.known_complexity = j["known_complexity"].get<int>();
    }
    if (j.contains("tags")) {
        if (!j["tags"].is_array()) throw bad("'tags' must be an array of strings");
        for (const json& t : j["tags"]) {
            if (!t.is_string()) throw bad("'tags' must be an array of strings");
            entry.tags.push_back(t.get<std::string>());
        }
    }
    return entry;
}

std::vector<ParsedEntry> read_jsonl(std::string_view text) {
    std::vector<ParsedEntry> out;
    std::set<std::string> ids;
    std::size_t number = 1;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(start, end - start);
        if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
            ParsedEntry p;
            p.line = number;
            try {
                p.entry = parse_jsonl_line(line, number);
                p.id = p.entry->id;
                if (!ids.insert(p.id).second) {
                    p.entry.reset();
                    p.error = "line " + std::to_string(number) + ", column 1: duplicate id '" + p.id + "'";
                }
            } catch (const GemError& e) {
                p.error = e.what();
                // keep the id when the object itself was readable
                try {
                    const json j = json::parse(line);
                    if (j.is_object() && j.contains("id") && j["id"].is_string()) p.id = j["id"].get<std::string>();
                } catch (const json::exception&) {
                }
                if (p.id.empty()) p.id = "line" + std::to_string(number);
            }
            out.push_back(std::move(p));
        }
        start = end + 1;
        ++number;
    }
    return out;
}

std::string to_jsonl(const CatalogueEntry& entry) {
    json j;
    j["id"] = entry.id;
    j["order"] = entry.graph.order();
    json m = json::array();
    for (Colour c = 0; c < kColourCount; ++c) m.push_back(entry.graph.matching(c));
    j["matchings"] = std::move(m);
    if (entry.name) j["name"] = *entry.name;
    if (entry.known_complexity) j["known_complexity"] = *entry.known_complexity;
    if (!entry.tags.empty()) j["tags"] = entry.tags;
    return j.dump();
}

std::vector<ParsedEntry> read_gem_catalogue(std::string_view text) {
    std::vector<ParsedEntry> out;
    std::size_t k = 0;
    for (const GemChunk& chunk : split_gem_stream(text)) {
        ParsedEntry p;
        p.line = chunk.first_line;
        p.id = "gem" + std::to_string(++k);
        try {
            CatalogueEntry e;
            e.id = p.id;
            e.graph = parse_gem_chunk(chunk);
            p.entry = std::move(e);
        } catch (const GemError& e) {
            p.error = e.what();
        }
        out.push_back(std::move(p));
    }
    return out;
}

void apply_seed_annotations(std::vector<CatalogueEntry>& entries, const std::vector<CatalogueEntry>& seeds) {
    std::map<CanonicalCode, const CatalogueEntry*> by_code;
    for (const CatalogueEntry& s : seeds) by_code.emplace(canonical_code(s.graph, CodeMode::ColourPermutable), &s);
    for (CatalogueEntry& e : entries) {
        const auto it = by_code.find(canonical_code(e.graph, CodeMode::ColourPermutable));
        if (it == by_code.end()) continue;
        const CatalogueEntry& s = *it->second;
        if (!e.name) e.name = s.name;
        if (!e.known_complexity) e.known_complexity = s.known_complexity;
        if (e.tags.empty()) e.tags = s.tags;
    }
}

ComputedInvariants compute_invariants(const ColouredGraph& g, unsigned jobs) {
    ComputedInvariants ci;
    ci.bipartite = is_bipartite(g);
    ci.contracted = is_contracted(g);
    ci.manifold = is_manifold_gem(g);
    ci.rigid = is_rigid(g);
    ci.residue_counts = residue_counts(g);
    if (ci.manifold) ci.h1 = homology_h1(g);
    if (ci.contracted) ci.k_bound = gem_complexity_bound(g);
    if (ci.bipartite && ci.contracted && ci.manifold) {
        ci.genus = genus_per_partition(g);
        ci.genus_min = *std::min_element(ci.genus->begin(), ci.genus->end());
        ci.gm = gm_complexity(g, GmOptions{jobs, false}).value;
    }
    return ci;
}

}  // namespace gemc
