#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gemc/coloured_graph.hpp"

namespace gemc {

inline constexpr std::size_t kDefaultEnumerationCeiling = 10;

struct EnumerationFilters {
    bool bipartite_only = false;
    bool rigid_only = false;
    bool manifold_only = false;
};

struct EnumerationOptions {
    std::size_t max_order = 2;
    EnumerationFilters filters;
    unsigned jobs = 1;  // 0 = hardware concurrency
    std::size_t ceiling = kDefaultEnumerationCeiling;
};

/// One representative per colour-permutable isomorphism class of connected
/// contracted 4-coloured graphs of order <= max_order passing the filters.
/// Each representative is its own canonical form; output is ordered by
/// order, then canonical code, independently of the job count.
///
/// Throws ParameterError for an odd max_order and CeilingExceededError above
/// the ceiling.
std::vector<ColouredGraph> enumerate_crystallizations(const EnumerationOptions& options);

/// Streaming variant: `sink` is called in output order, one order at a time.
void enumerate_crystallizations(const EnumerationOptions& options,
                                const std::function<void(const ColouredGraph&)>& sink);

}  // namespace gemc
