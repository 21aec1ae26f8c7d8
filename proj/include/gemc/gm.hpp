#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gemc/canonical.hpp"
#include "gemc/catalogue_entry.hpp"
#include "gemc/coloured_graph.hpp"
#include "gemc/heegaard.hpp"

namespace gemc {

/// One (partition, D, D', region) choice and its value
/// order - |V(D) u V(D') u V(region)|.
struct GmChoice {
    int partition = 0;
    std::size_t d_index = 0;
    std::size_t d_prime_index = 0;
    FaceKey region_key{};
    int value = 0;

    auto tie_key() const { return std::tie(partition, d_index, d_prime_index, region_key); }
    friend bool operator==(const GmChoice&, const GmChoice&) = default;
};

/// Strict order used for the witness: smaller value first, then the
/// lexicographically smallest (partition, D, D', region key).
bool better_choice(const GmChoice& a, const GmChoice& b);

struct GMReport {
    int value = 0;
    GmChoice witness;
    Region witness_region;
    std::optional<std::vector<GmChoice>> table;  // every choice, in tie-break order
};

struct GmOptions {
    unsigned jobs = 1;  // 0 = hardware concurrency
    bool keep_table = false;
};

/// Value of one choice. Throws ChoiceMismatchError when `region` was built
/// for a different (partition, D, D').
int gm_bar(const ColouredGraph& g, PartitionChoice partition, std::size_t d_index, std::size_t d_prime_index,
           const Region& region);

/// Gem-Matveev complexity of a bipartite crystallization, by exhausting all
/// partitions, residue pairs (D, D') and regions. Throws NonBipartiteError or
/// NotContractedError.
GMReport gm_complexity(const ColouredGraph& g, const GmOptions& options = {});

enum class GroupBy { Signature, Name };

/// "H1=<group>;genus=<regular genus>;bipartite=<0|1>", the computable
/// stand-in for the homeomorphism type.
std::string signature_key(const ColouredGraph& g);

/// Upper bound for the non-minimal GM-complexity of one manifold group.
struct CatalogueBound {
    std::string manifold_key;
    int best_value = 0;
    CanonicalCode best_graph;  // colour-permutable code of the minimizer
    std::string best_id;
    std::size_t best_order = 0;
    bool minimal_order_flag = false;  // minimizer has the smallest order in the group
    std::size_t members = 0;
};

struct EntryFailure {
    std::string id;
    std::string message;
};

/// Groups entries (by signature, or by name with signature fallback) and
/// minimises gm within each group. Failing entries are reported in
/// `failures` and skipped. Bounds are sorted by key.
std::vector<CatalogueBound> gm_min_over(std::span<const CatalogueEntry> entries, GroupBy grouping,
                                        std::vector<EntryFailure>* failures = nullptr, unsigned jobs = 1);

std::string group_key(const CatalogueEntry& entry, GroupBy grouping);

/// known_complexity <= gm. Throws MissingAnnotationError.
bool check_prop1(const CatalogueEntry& entry);
bool check_prop1(std::optional<int> known_complexity, int gm);

struct SubadditivitySample {
    Vertex v1 = 0;
    Vertex v2 = 0;
    int gm_sum = 0;
    bool holds = false;
};

struct SubadditivityReport {
    int gm_first = 0;
    int gm_second = 0;
    std::vector<SubadditivitySample> samples;
    std::size_t violations = 0;
};

/// Every (v1, v2) accepted by connected_sum for these two graphs.
std::vector<std::pair<Vertex, Vertex>> admissible_sum_pairs(const ColouredGraph& g1, const ColouredGraph& g2);

/// Records, per sampled vertex pair, whether gm(g1 # g2) <= gm(g1) + gm(g2).
/// Violations are counted, never thrown.
SubadditivityReport check_subadditivity(const ColouredGraph& g1, const ColouredGraph& g2,
                                        std::span<const std::pair<Vertex, Vertex>> samples, unsigned jobs = 1);

}  // namespace gemc
