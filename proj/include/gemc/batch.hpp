#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gemc/catalogue.hpp"
#include "gemc/gm.hpp"

namespace gemc {

struct BatchOptions {
    GroupBy group_by = GroupBy::Signature;
    unsigned jobs = 1;  // 0 = hardware concurrency
};

/// One CSV report row; empty optionals print as empty cells.
struct ReportRow {
    std::string id;
    std::optional<std::size_t> order;
    std::optional<bool> bipartite;
    std::optional<bool> rigid;
    std::optional<std::array<std::size_t, 6>> residue_counts;
    std::optional<int> genus_min;
    std::optional<std::string> h1;
    std::optional<int> gm;
    std::optional<int> k_bound;
    std::optional<bool> prop1_ok;
    std::optional<bool> conjecture_ok;
    std::string error;
};

struct BatchReport {
    std::vector<ReportRow> rows;           // input order
    std::vector<CatalogueBound> groups;    // sorted by key
    std::vector<CatalogueEntry> entries;   // readable entries with computed invariants
};

/// Classifies every entry; a failing entry yields a row with its error and
/// never stops the batch.
BatchReport classify_batch(const std::vector<ParsedEntry>& input, const BatchOptions& options);

inline constexpr const char* kReportHeader =
    "id,order,bipartite,rigid,g01,g02,g03,g12,g13,g23,genus_min,h1,gm,k_bound,prop1_ok,conjecture_ok,error";

std::string report_csv(const BatchReport& report);

/// manifold_key,best_value,best_id,best_order,minimal_order,members,best_code
std::string groups_csv(const BatchReport& report);

}  // namespace gemc
