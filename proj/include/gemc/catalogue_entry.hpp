#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gemc/coloured_graph.hpp"
#include "gemc/invariants.hpp"

namespace gemc {

/// Invariants cached on a catalogue entry.
struct ComputedInvariants {
    bool bipartite = false;
    bool contracted = false;
    bool manifold = false;
    bool rigid = false;
    std::array<std::size_t, 6> residue_counts{};  // g01 g02 g03 g12 g13 g23
    std::optional<std::array<int, 3>> genus;      // per partition, bipartite only
    std::optional<int> genus_min;
    std::optional<AbelianGroup> h1;
    std::optional<int> gm;
    std::optional<int> k_bound;
};

struct CatalogueEntry {
    std::string id;
    ColouredGraph graph = sphere_gem();
    std::optional<std::string> name;
    std::optional<int> known_complexity;
    std::vector<std::string> tags;
    std::optional<ComputedInvariants> computed;
};

}  // namespace gemc
