#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gemc/catalogue_entry.hpp"

namespace gemc {

/// One line (or GEM record) of a catalogue: either an entry or the reason it
/// could not be read.
struct ParsedEntry {
    std::size_t line = 0;
    std::string id;
    std::optional<CatalogueEntry> entry;
    std::string error;
};

/// JSONL catalogue: one object per line with keys id, order, matchings
/// (four arrays, entry i is the partner of vertex i) and optional name,
/// known_complexity, tags. Blank lines are skipped. Never throws on bad
/// lines; each yields a ParsedEntry with an error.
std::vector<ParsedEntry> read_jsonl(std::string_view text);

/// Strict single-line reader. Throws SyntaxError or SemanticError.
CatalogueEntry parse_jsonl_line(std::string_view line, std::size_t line_number = 1);

/// Serialises one entry as a single JSON line (no trailing newline).
std::string to_jsonl(const CatalogueEntry& entry);

/// GEM stream read record by record; ids are "gem<k>" (1-based record index).
std::vector<ParsedEntry> read_gem_catalogue(std::string_view text);

/// Fills missing name / known_complexity / tags of `entries` from `seeds`
/// whose graphs are isomorphic up to colour permutation.
void apply_seed_annotations(std::vector<CatalogueEntry>& entries, const std::vector<CatalogueEntry>& seeds);

/// Computes every cached invariant that applies to the entry's graph.
ComputedInvariants compute_invariants(const ColouredGraph& g, unsigned jobs = 1);

}  // namespace gemc
