#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gemc/coloured_graph.hpp"
#include "gemc/smith.hpp"

namespace gemc {

struct CatalogueEntry;

/// Cell counts and signed boundary maps of the pseudocomplex K(G).
///
/// 3-cells are graph vertices, 2-cells graph edges, 1-cells bicoloured
/// residues and 0-cells the components of the 3-coloured subgraphs. Every
/// simplex has its vertices ordered by colour, which fixes all signs.
struct CellStructure {
    std::array<std::size_t, 4> counts{};  // N0, N1, N2, N3
    IntMatrix boundary1;                  // N0 x N1
    IntMatrix boundary2;                  // N1 x N2

    // cell numbering, for diagnostics
    std::vector<std::pair<Colour, std::size_t>> vertex_cells;  // (colour c, component of G minus c)
    std::vector<std::pair<int, std::size_t>> edge_cells;       // (pair index, residue index)
    std::vector<Edge> triangle_cells;
};

/// Throws NotAManifoldGemError unless is_manifold_gem(g).
CellStructure pseudocomplex(const ColouredGraph& g);

long euler_characteristic(const ColouredGraph& g);

/// Finitely generated abelian group Z^free_rank + Z_{d1} + ... with
/// d1 | d2 | ... and every d >= 2.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }

    /// "0", "Z", "Z^2+Z_3", "Z_2+Z_4", ...
    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Canonical group from a free rank and arbitrary (positive) torsion orders.
AbelianGroup make_abelian_group(std::size_t free_rank, const std::vector<BigInt>& orders);

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// H_1 = ker(boundary1) / im(boundary2). Throws NotAManifoldGemError.
AbelianGroup homology_h1(const ColouredGraph& g);

/// order/2 - 1, an upper bound for the gem-complexity of the represented
/// manifold. Throws NotContractedError.
int gem_complexity_bound(const ColouredGraph& g);

/// group_k <= 5 + 2c. Throws MissingAnnotationError without a known complexity.
bool check_conjecture(const CatalogueEntry& entry, int group_k);
bool check_conjecture(std::optional<int> known_complexity, int group_k);

}  // namespace gemc
