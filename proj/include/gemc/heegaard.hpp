#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "gemc/coloured_graph.hpp"

namespace gemc {

/// One of the three splittings of {0,1,2,3} into two colour pairs:
/// index 0 = {{0,1},{2,3}}, 1 = {{0,2},{1,3}}, 2 = {{0,3},{1,2}}.
class PartitionChoice {
public:
    constexpr explicit PartitionChoice(int index) : index_(index) {}

    static constexpr std::array<PartitionChoice, 3> all() {
        return {PartitionChoice(0), PartitionChoice(1), PartitionChoice(2)};
    }

    constexpr int index() const { return index_; }

    /// {alpha, beta}: always contains colour 0.
    constexpr std::pair<Colour, Colour> pair_one() const { return {0, index_ + 1}; }

    /// {alpha-hat, beta-hat}: the complementary pair.
    constexpr std::pair<Colour, Colour> pair_two() const {
        constexpr std::array<std::pair<Colour, Colour>, 3> rest{{{2, 3}, {1, 3}, {1, 2}}};
        return rest[static_cast<std::size_t>(index_)];
    }

    /// (eps_0, eps_1, eps_2, eps_3) with {eps_0, eps_1} = pair_one and
    /// {eps_2, eps_3} = pair_two, each pair ascending.
    constexpr std::array<Colour, 4> epsilon() const {
        return {pair_one().first, pair_one().second, pair_two().first, pair_two().second};
    }

    friend constexpr bool operator==(PartitionChoice, PartitionChoice) = default;

private:
    int index_;
};

/// Faces are ordered by (colour pair index, smallest vertex).
using FaceKey = std::pair<int, Vertex>;

/// A bicoloured cycle used as a face of a regular embedding.
struct Face {
    Colour first;   // first < second
    Colour second;
    std::vector<Vertex> vertices;  // ascending

    FaceKey key() const { return {pair_index(first, second), vertices.front()}; }
    friend bool operator==(const Face&, const Face&) = default;
};

struct EmbeddingFaces {
    PartitionChoice partition{0};
    std::vector<Face> faces;  // sorted by key
    int genus = 0;
};

/// Faces (bicoloured cycles over the four mixed colour pairs) of the regular
/// embedding for `partition`, with the surface genus g_{alpha,beta} - 1.
/// Throws NonBipartiteError, or GenusMismatchError when the two residue
/// counts disagree or the Euler identity fails.
EmbeddingFaces embedding_faces(const ColouredGraph& g, PartitionChoice partition);

struct HeegaardDiagram {
    PartitionChoice partition{0};
    int genus = 0;
    std::size_t d_index = 0;
    std::size_t d_prime_index = 0;
    Residue d;
    Residue d_prime;
    std::vector<Residue> x_curves;  // pair_one residues except D
    std::vector<Residue> y_curves;  // pair_two residues except D'
    std::vector<Face> faces;
};

/// Throws IndexOutOfRangeError on bad residue indices; residues are indexed
/// in the order of residues() (by smallest vertex).
HeegaardDiagram heegaard_diagram(const ColouredGraph& g, PartitionChoice partition, std::size_t d_index,
                                 std::size_t d_prime_index);

struct RegionOrigin {
    int partition = 0;
    std::size_t d_index = 0;
    std::size_t d_prime_index = 0;

    friend bool operator==(const RegionOrigin&, const RegionOrigin&) = default;
};

/// A region of the Heegaard surface minus the curve systems, as a set of
/// embedding faces glued across edges of D and D'.
struct Region {
    RegionOrigin origin;
    std::vector<Vertex> vertex_set;           // ascending union of face vertices
    std::vector<Face> faces;                  // sorted by key
    std::vector<std::vector<Face>> closure_trace;  // Xi_0..Xi_m, only from closure_literal

    FaceKey key() const { return faces.front().key(); }
};

/// Partition of the embedding faces into regions by merging faces that share
/// an edge of D or D'. Regions are sorted by key.
std::vector<Region> regions(const ColouredGraph& g, PartitionChoice partition, std::size_t d_index,
                            std::size_t d_prime_index);

/// Region tracing by the inductive Xi_k sequence. `i`, `j` in {0,1} select
/// Xi_0 as an {eps_i, eps_{j+2}}-residue. Each step crosses, from every face
/// of the previous term, its eps_a-coloured edges on D into the neighbouring
/// {eps_a, eps_*}-face and its eps_{b+2}-coloured edges on D' into the
/// neighbouring {eps_*, eps_{b+2}}-face, where (a, b) is that face's own
/// type; the first step is exactly the (i, j) rule. Faces already reached
/// are not revisited, so the trace stops at the fixpoint. The returned
/// region's vertex set accumulates V(Xi_0) through V(Xi_m).
///
/// Throws NotAFaceError when xi0 is not an {eps_i, eps_{j+2}}-residue of g.
Region closure_literal(const ColouredGraph& g, PartitionChoice partition, std::size_t d_index,
                       std::size_t d_prime_index, int i, int j, const Face& xi0);

}  // namespace gemc

namespace gemc {

/// Genus of the regular embedding for each of the three partitions.
std::array<int, 3> genus_per_partition(const ColouredGraph& g);

/// Smallest of genus_per_partition: the regular genus.
int minimal_genus(const ColouredGraph& g);

}  // namespace gemc
