#include "gemc/canonical.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>

namespace gemc {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

/// Reusable buffers for repeated code computations on one graph.
struct CodeScratch {
    std::vector<Vertex> label;
    std::vector<Vertex> order;
    std::vector<Vertex> code;

    explicit CodeScratch(std::size_t n) : label(n), order(n), code(4 * n) {}
};

enum class Verdict { Smaller, Equal, Larger };

/// Builds the bfs code for (root, perm) into scratch.code, stopping as soon as
/// it is known to exceed `best`. An empty `best` compares as +infinity.
Verdict code_against(const ColouredGraph& g, Vertex root, const ColourPermutation& perm,
                     const std::vector<Vertex>& best, CodeScratch& s) {
    const std::size_t n = g.order();
    std::fill(s.label.begin(), s.label.end(), -1);
    s.label[idx(root)] = 0;
    s.order[0] = root;
    Vertex next = 1;
    bool smaller = best.empty();
    std::size_t k = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
        const Vertex v = s.order[pos];
        for (Colour c = 0; c < kColourCount; ++c, ++k) {
            const Vertex w = g.neighbour(perm[static_cast<std::size_t>(c)], v);
            if (s.label[idx(w)] < 0) {
                s.label[idx(w)] = next;
                s.order[idx(next)] = w;
                ++next;
            }
            const Vertex entry = s.label[idx(w)];
            s.code[k] = entry;
            if (!smaller) {
                if (entry > best[k]) return Verdict::Larger;
                if (entry < best[k]) smaller = true;
            }
        }
    }
    return smaller ? Verdict::Smaller : Verdict::Equal;
}

std::vector<ColourPermutation> admissible_perms(CodeMode mode) {
    if (mode == CodeMode::ColourFixed) return {colour_permutations().front()};
    return colour_permutations();
}

std::vector<Vertex> minimum_code(const ColouredGraph& g, CodeMode mode) {
    CodeScratch s(g.order());
    std::vector<Vertex> best;
    for (const auto& perm : admissible_perms(mode))
        for (std::size_t r = 0; r < g.order(); ++r)
            if (code_against(g, static_cast<Vertex>(r), perm, best, s) == Verdict::Smaller) best = s.code;
    return best;
}

void put16(std::string& out, std::size_t x) {
    out.push_back(static_cast<char>((x >> 8) & 0xFF));
    out.push_back(static_cast<char>(x & 0xFF));
}

}  // namespace

const std::vector<ColourPermutation>& colour_permutations() {
    static const std::vector<ColourPermutation> perms = [] {
        std::vector<ColourPermutation> out;
        ColourPermutation p{0, 1, 2, 3};
        do out.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return perms;
}

std::vector<Vertex> bfs_code(const ColouredGraph& g, Vertex root, const ColourPermutation& perm) {
    CodeScratch s(g.order());
    code_against(g, root, perm, {}, s);
    return s.code;
}

CanonicalCode canonical_code(const ColouredGraph& g, CodeMode mode) {
    const std::vector<Vertex> best = minimum_code(g, mode);
    CanonicalCode out;
    out.reserve(2 * (best.size() + 1));
    put16(out, g.order());
    for (Vertex v : best) put16(out, static_cast<std::size_t>(v));
    return out;
}

ColouredGraph canonical_form(const ColouredGraph& g, CodeMode mode) {
    const std::vector<Vertex> best = minimum_code(g, mode);
    const std::size_t n = g.order();
    std::array<ColouredGraph::Matching, kColourCount> m;
    for (Colour c = 0; c < kColourCount; ++c) {
        m[static_cast<std::size_t>(c)].resize(n);
        for (std::size_t v = 0; v < n; ++v) m[static_cast<std::size_t>(c)][v] = best[4 * v + static_cast<std::size_t>(c)];
    }
    return ColouredGraph(std::move(m));
}

bool is_canonical_form(const ColouredGraph& g, CodeMode mode) {
    const std::size_t n = g.order();
    std::vector<Vertex> own(4 * n);
    for (std::size_t v = 0; v < n; ++v)
        for (Colour c = 0; c < kColourCount; ++c) own[4 * v + static_cast<std::size_t>(c)] = g.neighbour(c, static_cast<Vertex>(v));

    CodeScratch s(n);
    // the table must itself be a bfs labelling from vertex 0
    if (code_against(g, 0, colour_permutations().front(), own, s) != Verdict::Equal) return false;
    for (const auto& perm : admissible_perms(mode))
        for (std::size_t r = 0; r < n; ++r)
            if (code_against(g, static_cast<Vertex>(r), perm, own, s) == Verdict::Smaller) return false;
    return true;
}

std::string to_hex(const CanonicalCode& code) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * code.size());
    for (unsigned char b : code) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xF]);
    }
    return out;
}

}  // namespace gemc
