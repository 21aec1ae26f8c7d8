#include "gemc/enumerate.hpp"

#include <string>

#include "gemc/canonical.hpp"
#include "gemc/error.hpp"
#include "gemc/parallel.hpp"

namespace gemc {

namespace {

/// Builds graphs directly in breadth-first labelling from vertex 0: slots
/// (vertex, colour) are filled in order, each with an already labelled
/// vertex that still has that colour free or with the next new label. Every
/// connected graph is produced once per root, and keeping only graphs that
/// are their own canonical form leaves one per isomorphism class.
class Generator {
public:
    Generator(std::size_t order, const EnumerationFilters& filters) : n_(order), filters_(filters) {
        for (auto& mc : partner_) mc.assign(n_, -1);
    }

    std::size_t slots() const { return 4 * n_; }

    /// Depth-first search from `slot`; calls `at_depth` instead of descending
    /// once `stop` slots are filled.
    template <typename Fn>
    void search(std::size_t slot, std::size_t stop, Fn&& at_depth) {
        if (slot == stop) {
            at_depth(*this);
            return;
        }
        const std::size_t v = slot / 4;
        const auto c = static_cast<std::size_t>(slot % 4);
        if (v >= used_) return;  // the labelled part is already closed
        if (partner_[c][v] >= 0) {
            search(slot + 1, stop, at_depth);
            return;
        }
        for (std::size_t w = v + 1; w < used_; ++w) {
            if (partner_[c][w] >= 0) continue;
            link(c, v, w);
            search(slot + 1, stop, at_depth);
            unlink(c, v, w);
        }
        if (used_ < n_) {
            const std::size_t w = used_++;
            link(c, v, w);
            search(slot + 1, stop, at_depth);
            unlink(c, v, w);
            --used_;
        }
    }

    /// Full graph reached: apply contractedness, filters and canonicity.
    void accept_leaf(std::vector<ColouredGraph>& out) const {
        ColouredGraph g(partner_);
        if (!is_contracted(g)) return;
        if (filters_.bipartite_only && !is_bipartite(g)) return;
        if (filters_.manifold_only && !is_manifold_gem(g)) return;
        if (!is_canonical_form(g, CodeMode::ColourPermutable)) return;
        if (filters_.rigid_only && !is_rigid(g)) return;
        out.push_back(std::move(g));
    }

private:
    void link(std::size_t c, std::size_t v, std::size_t w) {
        partner_[c][v] = static_cast<Vertex>(w);
        partner_[c][w] = static_cast<Vertex>(v);
    }
    void unlink(std::size_t c, std::size_t v, std::size_t w) {
        partner_[c][v] = -1;
        partner_[c][w] = -1;
    }

    std::size_t n_;
    EnumerationFilters filters_;
    std::array<ColouredGraph::Matching, kColourCount> partner_;
    std::size_t used_ = 1;
};

/// Slots fixed before the search is split into parallel tasks.
constexpr std::size_t kSplitDepth = 8;

std::vector<ColouredGraph> enumerate_order(std::size_t order, const EnumerationFilters& filters, unsigned jobs) {
    Generator root(order, filters);
    const std::size_t split = std::min(kSplitDepth, root.slots());
    std::vector<Generator> prefixes;
    root.search(0, split, [&](const Generator& g) { prefixes.push_back(g); });

    std::vector<std::vector<ColouredGraph>> found(prefixes.size());
    parallel_for(prefixes.size(), jobs, [&](std::size_t t) {
        Generator& g = prefixes[t];
        g.search(split, g.slots(), [&](const Generator& leaf) { leaf.accept_leaf(found[t]); });
    });

    // prefixes are visited in code order, and so are leaves within a prefix
    std::vector<ColouredGraph> out;
    for (auto& part : found)
        for (auto& g : part) out.push_back(std::move(g));
    return out;
}

void check_options(const EnumerationOptions& options) {
    if (options.max_order % 2 != 0)
        throw ParameterError("max order must be even, got " + std::to_string(options.max_order));
    if (options.max_order > options.ceiling)
        throw CeilingExceededError("max order " + std::to_string(options.max_order) + " exceeds the ceiling " +
                                   std::to_string(options.ceiling));
}

}  // namespace

void enumerate_crystallizations(const EnumerationOptions& options,
                                const std::function<void(const ColouredGraph&)>& sink) {
    check_options(options);
    for (std::size_t order = 2; order <= options.max_order; order += 2)
        for (const ColouredGraph& g : enumerate_order(order, options.filters, options.jobs)) sink(g);
}

std::vector<ColouredGraph> enumerate_crystallizations(const EnumerationOptions& options) {
    std::vector<ColouredGraph> out;
    enumerate_crystallizations(options, [&](const ColouredGraph& g) { out.push_back(g); });
    return out;
}

}  // namespace gemc
