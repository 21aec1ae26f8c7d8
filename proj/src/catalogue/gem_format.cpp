#include "gemc/gem_format.hpp"

#include <charconv>
#include <optional>

#include "gemc/error.hpp"

namespace gemc {

namespace {

struct Token {
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

/// Tokens of one logical line, comments stripped.
struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text, std::size_t first_line) {
    std::vector<Line> lines;
    std::size_t number = first_line;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            const std::size_t begin = i;
            while (i < raw.size() && !(raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            if (i > begin) line.tokens.push_back(Token{raw.substr(begin, i - begin), number, begin + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        start = end + 1;
        ++number;
    }
    return lines;
}

std::optional<long long> to_integer(std::string_view s) {
    if (s.empty() || s.size() > 9) return std::nullopt;
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0) return std::nullopt;
    return value;
}

[[noreturn]] void syntax(const std::string& message, const Token& at) { throw SyntaxError(message, at.line, at.column); }

[[noreturn]] void semantic(SemanticError::Cause cause, const std::string& message, const Token& at) {
    throw SemanticError(cause, message, at.line, at.column);
}

/// Parses one record starting at lines[pos]; advances pos past it.
ColouredGraph parse_record(const std::vector<Line>& lines, std::size_t& pos, std::size_t eof_line) {
    if (pos >= lines.size()) throw SyntaxError("expected 'gem <order>' header", eof_line, 1);
    const Line& header = lines[pos];
    if (header.tokens[0].text != "gem") syntax("expected 'gem <order>' header", header.tokens[0]);
    if (header.tokens.size() != 2) syntax("header must be exactly 'gem <order>'", header.tokens.back());
    const auto order_value = to_integer(header.tokens[1].text);
    if (!order_value) syntax("order is not a non-negative integer", header.tokens[1]);
    const auto order = static_cast<std::size_t>(*order_value);
    if (order < 2 || order % 2 != 0)
        semantic(SemanticError::Cause::OddOrder, "order must be even and at least 2", header.tokens[1]);
    ++pos;

    std::array<ColouredGraph::Matching, kColourCount> m;
    for (Colour c = 0; c < kColourCount; ++c) {
        const std::string label = "c" + std::to_string(c) + ":";
        if (pos >= lines.size())
            throw SyntaxError("missing line '" + label + "'", lines.empty() ? eof_line : lines.back().number + 1, 1);
        const Line& line = lines[pos];
        if (line.tokens[0].text != label) syntax("expected '" + label + "'", line.tokens[0]);
        if (line.tokens.size() - 1 != order)
            syntax("expected " + std::to_string(order / 2) + " vertex pairs after '" + label + "', got " +
                       std::to_string(line.tokens.size() - 1) + " vertices",
                   line.tokens.back());
        auto& mc = m[static_cast<std::size_t>(c)];
        mc.assign(order, -1);
        for (std::size_t t = 1; t < line.tokens.size(); t += 2) {
            const Token& tu = line.tokens[t];
            const Token& tv = line.tokens[t + 1];
            const auto u = to_integer(tu.text);
            if (!u) syntax("vertex is not a non-negative integer", tu);
            const auto v = to_integer(tv.text);
            if (!v) syntax("vertex is not a non-negative integer", tv);
            if (static_cast<std::size_t>(*u) >= order)
                semantic(SemanticError::Cause::NotInvolution, "vertex " + std::string(tu.text) + " out of range", tu);
            if (static_cast<std::size_t>(*v) >= order)
                semantic(SemanticError::Cause::NotInvolution, "vertex " + std::string(tv.text) + " out of range", tv);
            if (*u == *v)
                semantic(SemanticError::Cause::FixedPoint,
                         "colour " + std::to_string(c) + " pairs vertex " + std::string(tu.text) + " with itself", tu);
            if (mc[static_cast<std::size_t>(*u)] >= 0)
                semantic(SemanticError::Cause::NotInvolution,
                         "vertex " + std::string(tu.text) + " appears twice in colour " + std::to_string(c), tu);
            if (mc[static_cast<std::size_t>(*v)] >= 0)
                semantic(SemanticError::Cause::NotInvolution,
                         "vertex " + std::string(tv.text) + " appears twice in colour " + std::to_string(c), tv);
            mc[static_cast<std::size_t>(*u)] = static_cast<Vertex>(*v);
            mc[static_cast<std::size_t>(*v)] = static_cast<Vertex>(*u);
        }
        ++pos;
    }
    try {
        return build_graph(order, std::move(m));
    } catch (const DisconnectedError& e) {
        semantic(SemanticError::Cause::Disconnected, e.what(), header.tokens[0]);
    }
}

}  // namespace

ColouredGraph parse_gem(std::string_view text) {
    const auto lines = tokenize(text, 1);
    std::size_t pos = 0;
    const std::size_t eof_line = lines.empty() ? 1 : lines.back().number + 1;
    ColouredGraph g = parse_record(lines, pos, eof_line);
    if (pos != lines.size()) syntax("unexpected content after the record", lines[pos].tokens[0]);
    return g;
}

std::vector<ColouredGraph> parse_gem_stream(std::string_view text) {
    const auto lines = tokenize(text, 1);
    const std::size_t eof_line = lines.empty() ? 1 : lines.back().number + 1;
    std::vector<ColouredGraph> out;
    std::size_t pos = 0;
    while (pos < lines.size()) out.push_back(parse_record(lines, pos, eof_line));
    return out;
}

std::vector<GemChunk> split_gem_stream(std::string_view text) {
    std::vector<GemChunk> out;
    std::size_t number = 1;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        const bool last = end == std::string_view::npos;
        if (last) end = text.size();
        const std::string_view line = text.substr(start, end - start);
        const auto first = line.find_first_not_of(" \t\r");
        const bool header = first != std::string_view::npos && line.substr(first).starts_with("gem") &&
                            (line.size() == first + 3 || line[first + 3] == ' ' || line[first + 3] == '\t');
        if (header || out.empty()) out.push_back(GemChunk{number, {}});
        out.back().text.append(line);
        out.back().text.push_back('\n');
        if (last) break;
        start = end + 1;
        ++number;
    }
    // drop a leading chunk holding only comments and blank lines
    if (!out.empty() && tokenize(out.front().text, 1).empty()) out.erase(out.begin());
    return out;
}

ColouredGraph parse_gem_chunk(const GemChunk& chunk) {
    const auto lines = tokenize(chunk.text, chunk.first_line);
    std::size_t pos = 0;
    const std::size_t eof_line = lines.empty() ? chunk.first_line : lines.back().number + 1;
    ColouredGraph g = parse_record(lines, pos, eof_line);
    if (pos != lines.size()) syntax("unexpected content after the record", lines[pos].tokens[0]);
    return g;
}

std::string serialize_gem(const ColouredGraph& g) {
    std::string out = "gem " + std::to_string(g.order()) + "\n";
    for (Colour c = 0; c < kColourCount; ++c) {
        out += "c" + std::to_string(c) + ":";
        for (std::size_t u = 0; u < g.order(); ++u) {
            const Vertex v = g.neighbour(c, static_cast<Vertex>(u));
            if (static_cast<Vertex>(u) < v) out += " " + std::to_string(u) + " " + std::to_string(v);
        }
        out += "\n";
    }
    return out;
}

}  // namespace gemc
