#include "gemc/heegaard.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "gemc/error.hpp"

namespace gemc {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

/// The four colour pairs taking one colour from each side, in pair-index order.
std::vector<std::pair<Colour, Colour>> mixed_pairs(PartitionChoice partition) {
    const auto [a, b] = partition.pair_one();
    const auto [c, d] = partition.pair_two();
    std::vector<std::pair<Colour, Colour>> out;
    for (Colour x : {a, b})
        for (Colour y : {c, d}) out.emplace_back(std::min(x, y), std::max(x, y));
    std::sort(out.begin(), out.end(),
              [](const auto& l, const auto& r) { return pair_index(l.first, l.second) < pair_index(r.first, r.second); });
    return out;
}

void require_bipartite(const ColouredGraph& g) {
    if (!is_bipartite(g)) throw NonBipartiteError("Heegaard data is only built for bipartite graphs");
}

struct SideResidues {
    ResiduePartition one;
    ResiduePartition two;
};

SideResidues side_residues(const ColouredGraph& g, PartitionChoice partition, std::size_t d_index,
                           std::size_t d_prime_index) {
    const auto [a, b] = partition.pair_one();
    const auto [c, d] = partition.pair_two();
    SideResidues s{residues(g, ColourSet{a, b}), residues(g, ColourSet{c, d})};
    if (d_index >= s.one.count())
        throw IndexOutOfRangeError("D index " + std::to_string(d_index) + " out of range (" +
                                   std::to_string(s.one.count()) + " residues)");
    if (d_prime_index >= s.two.count())
        throw IndexOutOfRangeError("D' index " + std::to_string(d_prime_index) + " out of range (" +
                                   std::to_string(s.two.count()) + " residues)");
    return s;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    // the smaller index becomes the root
    void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return;
        if (y < x) std::swap(x, y);
        parent_[y] = x;
    }

private:
    std::vector<std::size_t> parent_;
};

/// Vertices of the {a,b}-cycle through v, ascending.
std::vector<Vertex> walk_cycle(const ColouredGraph& g, Colour a, Colour b, Vertex v) {
    std::vector<Vertex> out;
    Vertex w = v;
    Colour step = a;
    do {
        out.push_back(w);
        w = g.neighbour(step, w);
        step = step == a ? b : a;
    } while (w != v || step != a);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

EmbeddingFaces embedding_faces(const ColouredGraph& g, PartitionChoice partition) {
    require_bipartite(g);
    const auto [a, b] = partition.pair_one();
    const auto [c, d] = partition.pair_two();
    const std::size_t g_one = residue_count(g, a, b);
    const std::size_t g_two = residue_count(g, c, d);
    if (g_one != g_two)
        throw GenusMismatchError("g_{" + std::to_string(a) + std::to_string(b) + "} = " + std::to_string(g_one) +
                                 " differs from g_{" + std::to_string(c) + std::to_string(d) + "} = " +
                                 std::to_string(g_two));

    EmbeddingFaces out;
    out.partition = partition;
    out.genus = static_cast<int>(g_one) - 1;
    for (const auto& [x, y] : mixed_pairs(partition)) {
        ResiduePartition cycles = residues(g, ColourSet{x, y});
        for (Residue& r : cycles.components) out.faces.push_back(Face{x, y, std::move(r.vertices)});
    }
    const long n = static_cast<long>(g.order());
    const long euler = n - 2 * n + static_cast<long>(out.faces.size());
    if (euler != 2 - 2 * out.genus)
        throw GenusMismatchError("Euler characteristic " + std::to_string(euler) + " does not match genus " +
                                 std::to_string(out.genus));
    return out;
}

HeegaardDiagram heegaard_diagram(const ColouredGraph& g, PartitionChoice partition, std::size_t d_index,
                                 std::size_t d_prime_index) {
    EmbeddingFaces emb = embedding_faces(g, partition);
    SideResidues s = side_residues(g, partition, d_index, d_prime_index);

    HeegaardDiagram h;
    h.partition = partition;
    h.genus = emb.genus;
    h.d_index = d_index;
    h.d_prime_index = d_prime_index;
    h.faces = std::move(emb.faces);
    for (std::size_t k = 0; k < s.one.count(); ++k)
        (k == d_index ? h.d : h.x_curves.emplace_back()) = s.one.components[k];
    for (std::size_t k = 0; k < s.two.count(); ++k)
        (k == d_prime_index ? h.d_prime : h.y_curves.emplace_back()) = s.two.components[k];
    return h;
}

std::vector<Region> regions(const ColouredGraph& g, PartitionChoice partition, std::size_t d_index,
                            std::size_t d_prime_index) {
    EmbeddingFaces emb = embedding_faces(g, partition);
    const SideResidues s = side_residues(g, partition, d_index, d_prime_index);

    // face index of the (x,y)-cycle through v
    const auto pairs = mixed_pairs(partition);
    std::array<ResiduePartition, 4> cycles;
    std::array<std::size_t, 4> offset{};
    std::size_t total = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        cycles[k] = residues(g, ColourSet{pairs[k].first, pairs[k].second});
        offset[k] = total;
        total += cycles[k].count();
    }
    auto face_of = [&](Colour x, Colour y, Vertex v) {
        const int pi = pair_index(x, y);
        for (std::size_t k = 0; k < 4; ++k)
            if (pair_index(pairs[k].first, pairs[k].second) == pi) return offset[k] + cycles[k].component_of[idx(v)];
        throw InternalInvariantError("colour pair is not mixed for this partition");
    };

    UnionFind uf(total);
    const auto [alpha, beta] = partition.pair_one();
    const auto [alpha_hat, beta_hat] = partition.pair_two();
    for (Vertex v : s.one.components[d_index].vertices)
        for (Colour c : {alpha, beta}) uf.unite(face_of(c, alpha_hat, v), face_of(c, beta_hat, v));
    for (Vertex v : s.two.components[d_prime_index].vertices)
        for (Colour c : {alpha_hat, beta_hat}) uf.unite(face_of(alpha, c, v), face_of(beta, c, v));

    std::vector<Region> out;
    std::vector<std::size_t> region_of_root(total, static_cast<std::size_t>(-1));
    for (std::size_t f = 0; f < total; ++f) {
        const std::size_t root = uf.find(f);
        if (region_of_root[root] == static_cast<std::size_t>(-1)) {
            region_of_root[root] = out.size();
            out.emplace_back();
            out.back().origin = RegionOrigin{partition.index(), d_index, d_prime_index};
        }
        out[region_of_root[root]].faces.push_back(emb.faces[f]);
    }
    for (Region& r : out) {
        std::set<Vertex> vs;
        for (const Face& f : r.faces) vs.insert(f.vertices.begin(), f.vertices.end());
        r.vertex_set.assign(vs.begin(), vs.end());
    }
    return out;
}

Region closure_literal(const ColouredGraph& g, PartitionChoice partition, std::size_t d_index,
                       std::size_t d_prime_index, int i, int j, const Face& xi0) {
    require_bipartite(g);
    if (i < 0 || i > 1 || j < 0 || j > 1)
        throw IndexOutOfRangeError("closure indices i, j must lie in {0,1}");
    const SideResidues s = side_residues(g, partition, d_index, d_prime_index);
    const auto eps = partition.epsilon();
    const Colour lo = std::min(eps[static_cast<std::size_t>(i)], eps[static_cast<std::size_t>(j + 2)]);
    const Colour hi = std::max(eps[static_cast<std::size_t>(i)], eps[static_cast<std::size_t>(j + 2)]);
    if (xi0.first != lo || xi0.second != hi || xi0.vertices.empty() ||
        xi0.vertices.front() < 0 || idx(xi0.vertices.front()) >= g.order() ||
        walk_cycle(g, lo, hi, xi0.vertices.front()) != xi0.vertices)
        throw NotAFaceError("Xi_0 is not an {" + std::to_string(lo) + "," + std::to_string(hi) + "}-residue");

    std::vector<char> on_d(g.order(), 0), on_d_prime(g.order(), 0);
    for (Vertex v : s.one.components[d_index].vertices) on_d[idx(v)] = 1;
    for (Vertex v : s.two.components[d_prime_index].vertices) on_d_prime[idx(v)] = 1;

    // side index of a colour within its pair: eps_side[c] = position in eps
    std::array<int, kColourCount> position{};
    for (int k = 0; k < 4; ++k) position[static_cast<std::size_t>(eps[static_cast<std::size_t>(k)])] = k;

    Region region;
    region.origin = RegionOrigin{partition.index(), d_index, d_prime_index};
    std::set<FaceKey> reached{xi0.key()};
    std::vector<Face> current{xi0};
    std::vector<Face> accumulated{xi0};

    auto reach = [&](Colour x, Colour y, Vertex v, std::vector<Face>& next) {
        Face f{std::min(x, y), std::max(x, y), walk_cycle(g, x, y, v)};
        if (reached.insert(f.key()).second) next.push_back(std::move(f));
    };

    while (!current.empty()) {
        region.closure_trace.push_back(current);
        std::vector<Face> next;
        for (const Face& f : current) {
            // split the face type into (eps_a, eps_{b+2})
            const Colour side_one = position[static_cast<std::size_t>(f.first)] < 2 ? f.first : f.second;
            const Colour side_two = side_one == f.first ? f.second : f.first;
            const int a = position[static_cast<std::size_t>(side_one)];
            const int b = position[static_cast<std::size_t>(side_two)] - 2;
            const Colour across_two = eps[static_cast<std::size_t>(2 + (b + 1) % 2)];
            const Colour across_one = eps[static_cast<std::size_t>((a + 1) % 2)];
            for (Vertex v : f.vertices) {
                if (on_d[idx(v)]) reach(side_one, across_two, v, next);
                if (on_d_prime[idx(v)]) reach(across_one, side_two, v, next);
            }
        }
        accumulated.insert(accumulated.end(), next.begin(), next.end());
        current = std::move(next);
    }

    std::sort(accumulated.begin(), accumulated.end(), [](const Face& l, const Face& r) { return l.key() < r.key(); });
    std::set<Vertex> vs;
    for (const Face& f : accumulated) vs.insert(f.vertices.begin(), f.vertices.end());
    region.faces = std::move(accumulated);
    region.vertex_set.assign(vs.begin(), vs.end());
    return region;
}

}  // namespace gemc

namespace gemc {

std::array<int, 3> genus_per_partition(const ColouredGraph& g) {
    std::array<int, 3> out{};
    for (PartitionChoice p : PartitionChoice::all()) out[static_cast<std::size_t>(p.index())] = embedding_faces(g, p).genus;
    return out;
}

int minimal_genus(const ColouredGraph& g) {
    const auto all = genus_per_partition(g);
    return *std::min_element(all.begin(), all.end());
}

}  // namespace gemc
