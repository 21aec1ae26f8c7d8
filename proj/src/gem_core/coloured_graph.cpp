#include "gemc/coloured_graph.hpp"

#include <algorithm>
#include <string>

#include "gemc/error.hpp"

namespace gemc {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

void validate(const std::array<ColouredGraph::Matching, kColourCount>& m) {
    const std::size_t n = m[0].size();
    if (n < 2 || n % 2 != 0)
        throw OddOrderError("order must be even and at least 2, got " + std::to_string(n));
    for (Colour c = 0; c < kColourCount; ++c) {
        const auto& mc = m[static_cast<std::size_t>(c)];
        if (mc.size() != n)
            throw InvolutionError("matching c" + std::to_string(c) + " has " + std::to_string(mc.size()) +
                                  " entries, expected " + std::to_string(n));
        for (std::size_t v = 0; v < n; ++v) {
            const Vertex w = mc[v];
            if (w < 0 || idx(w) >= n)
                throw InvolutionError("matching c" + std::to_string(c) + " sends vertex " + std::to_string(v) +
                                      " out of range to " + std::to_string(w));
            if (idx(w) == v)
                throw FixedPointError("matching c" + std::to_string(c) + " fixes vertex " + std::to_string(v));
        }
        for (std::size_t v = 0; v < n; ++v)
            if (idx(mc[idx(mc[v])]) != v)
                throw InvolutionError("matching c" + std::to_string(c) + " is not an involution at vertex " +
                                      std::to_string(v));
    }
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Colour c = 0; c < kColourCount; ++c) {
            const Vertex w = m[static_cast<std::size_t>(c)][idx(v)];
            if (!seen[idx(w)]) {
                seen[idx(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != n)
        throw DisconnectedError("graph is disconnected: vertex 0 reaches " + std::to_string(reached) + " of " +
                                std::to_string(n) + " vertices");
}

}  // namespace

ColouredGraph::ColouredGraph(std::array<Matching, kColourCount> matchings) : matchings_(std::move(matchings)) {
    validate(matchings_);
}

ColouredGraph build_graph(std::size_t order, std::array<ColouredGraph::Matching, kColourCount> matchings) {
    if (order < 2 || order % 2 != 0)
        throw OddOrderError("order must be even and at least 2, got " + std::to_string(order));
    for (const auto& m : matchings)
        if (m.size() != order)
            throw InvolutionError("matching size " + std::to_string(m.size()) + " does not match order " +
                                  std::to_string(order));
    return ColouredGraph(std::move(matchings));
}

ColouredGraph sphere_gem() {
    return ColouredGraph({{{1, 0}, {1, 0}, {1, 0}, {1, 0}}});
}

Edge edge_at(const ColouredGraph& g, Colour c, Vertex v) {
    const Vertex w = g.neighbour(c, v);
    return Edge{c, std::min(v, w), std::max(v, w)};
}

ResiduePartition residues(const ColouredGraph& g, ColourSet colours) {
    if (colours.empty()) throw EmptyColourSetError("residues requested for the empty colour set");
    const std::vector<Colour> cs = colours.colours();
    const std::size_t n = g.order();
    constexpr auto unset = static_cast<std::size_t>(-1);

    ResiduePartition out;
    out.colours = colours;
    out.component_of.assign(n, unset);
    std::vector<Vertex> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (out.component_of[s] != unset) continue;
        const std::size_t id = out.components.size();
        Residue r;
        out.component_of[s] = id;
        stack.push_back(static_cast<Vertex>(s));
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            r.vertices.push_back(v);
            for (Colour c : cs) {
                const Vertex w = g.neighbour(c, v);
                if (out.component_of[idx(w)] == unset) {
                    out.component_of[idx(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(r.vertices.begin(), r.vertices.end());
        // each colour in the set is a perfect matching on the component
        r.edge_count = r.vertices.size() * cs.size() / 2;
        out.components.push_back(std::move(r));
    }
    return out;
}

std::size_t residue_count(const ColouredGraph& g, Colour a, Colour b) {
    return residues(g, ColourSet{a, b}).count();
}

std::array<std::size_t, 6> residue_counts(const ColouredGraph& g) {
    std::array<std::size_t, 6> out{};
    for (std::size_t k = 0; k < kColourPairs.size(); ++k)
        out[k] = residue_count(g, kColourPairs[k].first, kColourPairs[k].second);
    return out;
}

std::array<std::vector<Vertex>, 2> Bipartition::classes() const {
    std::array<std::vector<Vertex>, 2> out;
    for (std::size_t v = 0; v < side.size(); ++v) out[static_cast<std::size_t>(side[v])].push_back(static_cast<Vertex>(v));
    return out;
}

std::optional<Bipartition> bipartition(const ColouredGraph& g) {
    const std::size_t n = g.order();
    Bipartition b;
    b.side.assign(n, -1);
    std::vector<Vertex> queue{0};
    b.side[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        for (Colour c = 0; c < kColourCount; ++c) {
            const Vertex w = g.neighbour(c, v);
            if (b.side[idx(w)] < 0) {
                b.side[idx(w)] = 1 - b.side[idx(v)];
                queue.push_back(w);
            } else if (b.side[idx(w)] == b.side[idx(v)]) {
                return std::nullopt;
            }
        }
    }
    return b;
}

bool is_bipartite(const ColouredGraph& g) { return bipartition(g).has_value(); }

bool is_contracted(const ColouredGraph& g) {
    for (Colour c = 0; c < kColourCount; ++c)
        if (residues(g, all_but(c)).count() != 1) return false;
    return true;
}

bool is_manifold_gem(const ColouredGraph& g) {
    for (Colour c = 0; c < kColourCount; ++c) {
        const ColourSet three = all_but(c);
        const ResiduePartition parts = residues(g, three);
        std::vector<long> faces(parts.count(), 0);
        const std::vector<Colour> cs = three.colours();
        for (std::size_t a = 0; a < cs.size(); ++a)
            for (std::size_t b = a + 1; b < cs.size(); ++b) {
                const ResiduePartition cycles = residues(g, ColourSet{cs[a], cs[b]});
                for (const Residue& cyc : cycles.components) ++faces[parts.component_of[idx(cyc.vertices.front())]];
            }
        for (std::size_t k = 0; k < parts.count(); ++k) {
            const long v = static_cast<long>(parts.components[k].vertices.size());
            const long e = static_cast<long>(parts.components[k].edge_count);
            if (v - e + faces[k] != 2) return false;
        }
    }
    return true;
}

std::vector<RhoPair> rho_pairs(const ColouredGraph& g) {
    std::array<ResiduePartition, 6> cycles;
    for (std::size_t k = 0; k < kColourPairs.size(); ++k)
        cycles[k] = residues(g, ColourSet{kColourPairs[k].first, kColourPairs[k].second});

    std::vector<RhoPair> out;
    const std::size_t n = g.order();
    for (Colour c = 0; c < kColourCount; ++c) {
        std::vector<Edge> edges;
        for (std::size_t v = 0; v < n; ++v)
            if (static_cast<Vertex>(v) < g.neighbour(c, static_cast<Vertex>(v)))
                edges.push_back(edge_at(g, c, static_cast<Vertex>(v)));
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                int shared = 0;
                for (Colour d = 0; d < kColourCount; ++d) {
                    if (d == c) continue;
                    const auto& part = cycles[static_cast<std::size_t>(pair_index(c, d))];
                    if (part.component_of[idx(edges[i].u)] == part.component_of[idx(edges[j].u)]) ++shared;
                }
                if (shared >= 2) out.push_back(RhoPair{c, edges[i], edges[j], shared});
            }
    }
    return out;
}

bool is_rigid(const ColouredGraph& g) { return rho_pairs(g).empty(); }

ColouredGraph connected_sum(const ColouredGraph& g1, Vertex v1, const ColouredGraph& g2, Vertex v2) {
    const auto n1 = static_cast<Vertex>(g1.order());
    const auto n2 = static_cast<Vertex>(g2.order());
    if (v1 < 0 || v1 >= n1) throw IndexOutOfRangeError("vertex " + std::to_string(v1) + " not in first graph");
    if (v2 < 0 || v2 >= n2) throw IndexOutOfRangeError("vertex " + std::to_string(v2) + " not in second graph");

    const auto b1 = bipartition(g1);
    const auto b2 = bipartition(g2);
    if (b1 && b2 && b1->side[idx(v1)] == b2->side[idx(v2)])
        throw BipartitionClashError("vertices " + std::to_string(v1) + " and " + std::to_string(v2) +
                                    " lie in the same bipartition class");

    auto map1 = [&](Vertex u) { return u - (u > v1 ? 1 : 0); };
    auto map2 = [&](Vertex w) { return (n1 - 1) + w - (w > v2 ? 1 : 0); };

    const std::size_t order = static_cast<std::size_t>(n1 + n2 - 2);
    std::array<ColouredGraph::Matching, kColourCount> m;
    for (Colour c = 0; c < kColourCount; ++c) {
        auto& mc = m[static_cast<std::size_t>(c)];
        mc.assign(order, -1);
        const Vertex hang1 = g1.neighbour(c, v1);
        const Vertex hang2 = g2.neighbour(c, v2);
        for (Vertex u = 0; u < n1; ++u) {
            if (u == v1) continue;
            const Vertex w = g1.neighbour(c, u);
            mc[idx(map1(u))] = w == v1 ? map2(hang2) : map1(w);
        }
        for (Vertex u = 0; u < n2; ++u) {
            if (u == v2) continue;
            const Vertex w = g2.neighbour(c, u);
            mc[idx(map2(u))] = w == v2 ? map1(hang1) : map2(w);
        }
    }
    return build_graph(order, std::move(m));
}

}  // namespace gemc
