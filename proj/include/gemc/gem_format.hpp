#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gemc/coloured_graph.hpp"

namespace gemc {

/// GEM text format:
///
///     gem <order>
///     c0: u v u v ...
///     c1: ...
///     c2: ...
///     c3: ...
///
/// Each colour line lists order/2 pairs "u v" meaning matching[k](u) = v.
/// '#' starts a comment; blank lines are ignored. Throws SyntaxError or
/// SemanticError, both carrying a 1-based line and column.
ColouredGraph parse_gem(std::string_view text);

/// Several consecutive GEM records.
std::vector<ColouredGraph> parse_gem_stream(std::string_view text);

/// One record of a GEM stream, kept as text so that a broken record does
/// not prevent reading the others.
struct GemChunk {
    std::size_t first_line = 1;  // line of the header within the stream
    std::string text;
};

/// Splits a stream at its "gem" header lines.
std::vector<GemChunk> split_gem_stream(std::string_view text);

/// Parses one chunk, reporting positions relative to the whole stream.
ColouredGraph parse_gem_chunk(const GemChunk& chunk);

/// Pairs are written with u < v, sorted by u; ends with a newline.
std::string serialize_gem(const ColouredGraph& g);

}  // namespace gemc
