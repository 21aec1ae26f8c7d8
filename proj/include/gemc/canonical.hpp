#pragma once

#include <array>
#include <string>
#include <vector>

#include "gemc/coloured_graph.hpp"

namespace gemc {

enum class CodeMode {
    ColourFixed,       // colour-preserving isomorphism
    ColourPermutable,  // isomorphism up to any permutation of the four colours
};

/// Byte string; two graphs share a code iff they are isomorphic in the
/// given mode. Ordering of codes is plain lexicographic byte order.
using CanonicalCode = std::string;

using ColourPermutation = std::array<Colour, kColourCount>;

/// All 24 permutations in lexicographic order, identity first.
const std::vector<ColourPermutation>& colour_permutations();

/// Breadth-first relabelling code: the new graph reads colour c from the old
/// colour perm[c]; vertices are numbered in discovery order starting at
/// `root`, scanning new colours 0..3. Entry 4*k+c is the partner of vertex k.
std::vector<Vertex> bfs_code(const ColouredGraph& g, Vertex root, const ColourPermutation& perm);

/// Minimum bfs_code over all roots (and all colour permutations in
/// ColourPermutable mode), serialised as order followed by the entries,
/// each as a 16-bit big-endian integer.
CanonicalCode canonical_code(const ColouredGraph& g, CodeMode mode);

/// The relabelled graph whose matching table is the canonical code.
ColouredGraph canonical_form(const ColouredGraph& g, CodeMode mode);

/// True iff g is already its own canonical form.
bool is_canonical_form(const ColouredGraph& g, CodeMode mode);

std::string to_hex(const CanonicalCode& code);

}  // namespace gemc
