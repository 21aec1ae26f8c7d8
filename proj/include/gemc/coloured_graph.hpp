#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gemc/colour.hpp"

namespace gemc {

/// A 4-regular properly edge-coloured multigraph, stored as four
/// fixed-point-free involutions on the vertex indices 0..order-1.
///
/// Instances are always valid: the constructor rejects anything that is not
/// a connected proper 4-coloured graph of even order >= 2. Parallel edges
/// are implicit (two colours may pair the same two vertices).
class ColouredGraph {
public:
    using Matching = std::vector<Vertex>;

    explicit ColouredGraph(std::array<Matching, kColourCount> matchings);

    std::size_t order() const noexcept { return matchings_[0].size(); }
    std::size_t edge_count() const noexcept { return 2 * order(); }

    Vertex neighbour(Colour c, Vertex v) const { return matchings_[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)]; }
    const Matching& matching(Colour c) const { return matchings_[static_cast<std::size_t>(c)]; }
    const std::array<Matching, kColourCount>& matchings() const noexcept { return matchings_; }

    friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;

private:
    std::array<Matching, kColourCount> matchings_;
};

/// Validating constructor. Throws OddOrderError, InvolutionError,
/// FixedPointError or DisconnectedError.
ColouredGraph build_graph(std::size_t order, std::array<ColouredGraph::Matching, kColourCount> matchings);

/// The order-2 graph in which every colour joins vertices 0 and 1.
ColouredGraph sphere_gem();

/// A c-coloured edge, stored with u < v.
struct Edge {
    Colour colour;
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge edge_at(const ColouredGraph& g, Colour c, Vertex v);

struct Residue {
    std::vector<Vertex> vertices;  // ascending
    std::size_t edge_count = 0;
};

/// Connected components of the graph restricted to a colour subset.
/// Components are ordered by their smallest vertex.
struct ResiduePartition {
    ColourSet colours;
    std::vector<Residue> components;
    std::vector<std::size_t> component_of;  // vertex -> index into components

    std::size_t count() const noexcept { return components.size(); }
};

/// Throws EmptyColourSetError when `colours` is empty.
ResiduePartition residues(const ColouredGraph& g, ColourSet colours);

/// g_{a,b}: number of {a,b}-residues.
std::size_t residue_count(const ColouredGraph& g, Colour a, Colour b);

/// The six g_{i,j} in the order of kColourPairs.
std::array<std::size_t, 6> residue_counts(const ColouredGraph& g);

struct Bipartition {
    std::vector<int> side;  // 0 or 1 per vertex; vertex 0 is on side 0

    std::array<std::vector<Vertex>, 2> classes() const;
};

/// Breadth-first 2-colouring of the vertices; nullopt when an odd cycle exists.
std::optional<Bipartition> bipartition(const ColouredGraph& g);
bool is_bipartite(const ColouredGraph& g);

/// True iff every 3-coloured subgraph (one colour deleted) is connected.
bool is_contracted(const ColouredGraph& g);

/// Sphere criterion: each component of each 3-coloured subgraph satisfies
/// V - E + F = 2 with F its number of bicoloured cycles.
bool is_manifold_gem(const ColouredGraph& g);

/// Two distinct equally coloured edges lying on a common bicoloured cycle
/// for exactly `shared` (2 or 3) of the three colour pairs containing their
/// colour.
struct RhoPair {
    Colour colour;
    Edge first;
    Edge second;
    int shared;

    friend bool operator==(const RhoPair&, const RhoPair&) = default;
};

std::vector<RhoPair> rho_pairs(const ColouredGraph& g);
bool is_rigid(const ColouredGraph& g);

/// Graph connected sum: deletes v1 from g1 and v2 from g2 and welds, colour
/// by colour, the two hanging edges. Vertices of g1 keep their relative
/// order and come first. Throws BipartitionClashError when both graphs are
/// bipartite and v1, v2 lie on the same side of their canonical bipartitions.
ColouredGraph connected_sum(const ColouredGraph& g1, Vertex v1, const ColouredGraph& g2, Vertex v2);

}  // namespace gemc
