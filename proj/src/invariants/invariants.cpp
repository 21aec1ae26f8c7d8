#include "gemc/invariants.hpp"

#include <algorithm>

#include "gemc/catalogue_entry.hpp"
#include "gemc/error.hpp"

namespace gemc {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

void require_manifold(const ColouredGraph& g) {
    if (!is_manifold_gem(g)) throw NotAManifoldGemError("graph fails the sphere criterion on a 3-residue");
}

}  // namespace

CellStructure pseudocomplex(const ColouredGraph& g) {
    require_manifold(g);
    CellStructure k;

    // 0-cells
    std::array<ResiduePartition, kColourCount> hats;
    std::array<std::size_t, kColourCount> vertex_offset{};
    for (Colour c = 0; c < kColourCount; ++c) {
        hats[static_cast<std::size_t>(c)] = residues(g, all_but(c));
        vertex_offset[static_cast<std::size_t>(c)] = k.vertex_cells.size();
        for (std::size_t r = 0; r < hats[static_cast<std::size_t>(c)].count(); ++r) k.vertex_cells.emplace_back(c, r);
    }
    auto vertex_cell = [&](Colour c, Vertex v) {
        return vertex_offset[static_cast<std::size_t>(c)] + hats[static_cast<std::size_t>(c)].component_of[idx(v)];
    };

    // 1-cells
    std::array<ResiduePartition, 6> cycles;
    std::array<std::size_t, 6> edge_offset{};
    for (std::size_t p = 0; p < kColourPairs.size(); ++p) {
        cycles[p] = residues(g, ColourSet{kColourPairs[p].first, kColourPairs[p].second});
        edge_offset[p] = k.edge_cells.size();
        for (std::size_t r = 0; r < cycles[p].count(); ++r) k.edge_cells.emplace_back(static_cast<int>(p), r);
    }
    auto edge_cell = [&](Colour i, Colour j, Vertex v) {
        const auto p = static_cast<std::size_t>(pair_index(i, j));
        return edge_offset[p] + cycles[p].component_of[idx(v)];
    };

    // 2-cells
    for (Colour c = 0; c < kColourCount; ++c)
        for (std::size_t u = 0; u < g.order(); ++u)
            if (static_cast<Vertex>(u) < g.neighbour(c, static_cast<Vertex>(u)))
                k.triangle_cells.push_back(edge_at(g, c, static_cast<Vertex>(u)));

    k.counts = {k.vertex_cells.size(), k.edge_cells.size(), k.triangle_cells.size(), g.order()};

    // a {i,j}-residue is the 1-simplex joining the colours a < b outside {i,j}
    k.boundary1 = IntMatrix(k.counts[0], k.counts[1]);
    for (std::size_t p = 0; p < kColourPairs.size(); ++p) {
        const std::vector<Colour> ends = ColourSet{kColourPairs[p].first, kColourPairs[p].second}.complement().colours();
        for (std::size_t r = 0; r < cycles[p].count(); ++r) {
            const Vertex v = cycles[p].components[r].vertices.front();
            const std::size_t col = edge_offset[p] + r;
            k.boundary1.at(vertex_cell(ends[1], v), col) += 1;
            k.boundary1.at(vertex_cell(ends[0], v), col) -= 1;
        }
    }

    // a c-edge is the triangle on the colours k0 < k1 < k2 other than c
    k.boundary2 = IntMatrix(k.counts[1], k.counts[2]);
    for (std::size_t t = 0; t < k.triangle_cells.size(); ++t) {
        const Edge& e = k.triangle_cells[t];
        const std::vector<Colour> corners = all_but(e.colour).colours();
        for (std::size_t s = 0; s < corners.size(); ++s)
            k.boundary2.at(edge_cell(e.colour, corners[s], e.u), t) += (s % 2 == 0) ? 1 : -1;
    }
    return k;
}

long euler_characteristic(const ColouredGraph& g) {
    const CellStructure k = pseudocomplex(g);
    return static_cast<long>(k.counts[0]) - static_cast<long>(k.counts[1]) + static_cast<long>(k.counts[2]) -
           static_cast<long>(k.counts[3]);
}

std::string AbelianGroup::to_string() const {
    if (trivial()) return "0";
    std::string out;
    auto add = [&](const std::string& part) {
        if (!out.empty()) out += "+";
        out += part;
    };
    if (free_rank == 1) add("Z");
    if (free_rank > 1) add("Z^" + std::to_string(free_rank));
    for (const BigInt& d : torsion) add("Z_" + d.str());
    return out;
}

AbelianGroup make_abelian_group(std::size_t free_rank, const std::vector<BigInt>& orders) {
    std::vector<std::vector<BigInt>> diag(orders.size(), std::vector<BigInt>(orders.size()));
    for (std::size_t i = 0; i < orders.size(); ++i) diag[i][i] = orders[i];
    AbelianGroup out;
    out.free_rank = free_rank;
    for (BigInt& d : smith_normal_form(std::move(diag)))
        if (d > 1) out.torsion.push_back(std::move(d));
    return out;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<BigInt> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return make_abelian_group(a.free_rank + b.free_rank, orders);
}

AbelianGroup homology_h1(const ColouredGraph& g) {
    const CellStructure k = pseudocomplex(g);
    const std::size_t rank1 = smith_normal_form(k.boundary1).size();
    const std::vector<BigInt> factors = smith_normal_form(k.boundary2);
    AbelianGroup out;
    out.free_rank = k.counts[1] - rank1 - factors.size();
    for (const BigInt& d : factors)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

int gem_complexity_bound(const ColouredGraph& g) {
    if (!is_contracted(g)) throw NotContractedError("gem-complexity bound needs a crystallization");
    return static_cast<int>(g.order() / 2) - 1;
}

bool check_conjecture(std::optional<int> known_complexity, int group_k) {
    if (!known_complexity) throw MissingAnnotationError("conjecture check needs a known complexity");
    return group_k <= 5 + 2 * *known_complexity;
}

bool check_conjecture(const CatalogueEntry& entry, int group_k) {
    return check_conjecture(entry.known_complexity, group_k);
}

}  // namespace gemc
