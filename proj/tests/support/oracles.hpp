#pragma once

// Slow, independent re-implementations used to cross-check the library.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "gemc/coloured_graph.hpp"

namespace oracle {

using gemc::Colour;
using gemc::ColouredGraph;
using gemc::Vertex;

/// Components of the subgraph on `colours`, by union-find.
std::size_t component_count(const ColouredGraph& g, const std::vector<Colour>& colours);

/// Parity union-find: true iff some cycle has odd length.
bool has_odd_cycle(const ColouredGraph& g);

/// Vertices of every {a,b}-cycle, each ascending, cycles sorted by smallest vertex.
std::vector<std::vector<Vertex>> bicoloured_cycles(const ColouredGraph& g, Colour a, Colour b);

/// Exhaustive search over all vertex bijections (and colour permutations).
bool isomorphic(const ColouredGraph& a, const ColouredGraph& b, bool colour_permutable);

/// Relabels vertices by `vertex_perm` (old -> new) and renames colour c to colour_perm[c].
ColouredGraph relabel(const ColouredGraph& g, const std::vector<Vertex>& vertex_perm,
                      const std::array<Colour, 4>& colour_perm);

ColouredGraph random_relabel(const ColouredGraph& g, std::mt19937& rng, bool permute_colours);

/// Minimum over every partition, D, D' and starting face of the value
/// order - |V(D) u V(D') u closure|, with the closure from closure_literal
/// and set unions done by std::set.
int reference_gm(const ColouredGraph& g);

struct Homology {
    std::size_t rank = 0;
    std::vector<long long> torsion;  // factors >= 2, divisibility chain
    friend bool operator==(const Homology&, const Homology&) = default;
};

/// H1 from the cell complex dual to the pseudocomplex: graph vertices,
/// graph edges and bicoloured cycles as 0-, 1- and 2-cells.
Homology dual_h1(const ColouredGraph& g);

/// Invariant factors by a plain int64 elimination (small inputs only).
std::vector<long long> smith_factors(std::vector<std::vector<long long>> m);

struct Rho {
    Colour colour;
    gemc::Edge first;
    gemc::Edge second;
    int shared;
    friend auto operator<=>(const Rho&, const Rho&) = default;
};

/// Every pair of same-coloured edges tested against every bicoloured cycle.
std::vector<Rho> rho_pairs(const ColouredGraph& g);

/// Orbit count of connected contracted 4-tuples of perfect matchings on
/// `order` vertices under vertex relabelling and colour permutation, with
/// `keep` applied to one representative per orbit.
std::size_t class_count(std::size_t order, const std::function<bool(const ColouredGraph&)>& keep);

}  // namespace oracle
