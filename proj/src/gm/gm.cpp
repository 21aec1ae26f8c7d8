#include "gemc/gm.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gemc/error.hpp"
#include "gemc/invariants.hpp"
#include "gemc/parallel.hpp"
#include "gemc/vertex_set.hpp"

namespace gemc {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

/// Residues and faces of one partition, shared by all (D, D') choices.
struct PartitionData {
    PartitionChoice partition{0};
    std::vector<FaceKey> face_keys;
    std::vector<VertexSet> face_sets;
    ResiduePartition one;
    ResiduePartition two;
    std::vector<VertexSet> one_sets;
    std::vector<VertexSet> two_sets;
    // merge[v] lists the face pairs glued across the edges at v when v lies
    // on D (first two) or on D' (last two)
    std::vector<std::array<std::pair<std::size_t, std::size_t>, 4>> merge;
};

PartitionData prepare(const ColouredGraph& g, PartitionChoice partition) {
    const std::size_t n = g.order();
    PartitionData pd;
    pd.partition = partition;
    EmbeddingFaces emb = embedding_faces(g, partition);

    std::map<FaceKey, std::size_t> index;
    for (const Face& f : emb.faces) {
        index.emplace(f.key(), pd.face_keys.size());
        pd.face_keys.push_back(f.key());
        pd.face_sets.emplace_back(n, f.vertices);
    }

    const auto [alpha, beta] = partition.pair_one();
    const auto [alpha_hat, beta_hat] = partition.pair_two();
    pd.one = residues(g, ColourSet{alpha, beta});
    pd.two = residues(g, ColourSet{alpha_hat, beta_hat});
    for (const Residue& r : pd.one.components) pd.one_sets.emplace_back(n, r.vertices);
    for (const Residue& r : pd.two.components) pd.two_sets.emplace_back(n, r.vertices);

    std::map<int, ResiduePartition> cycles;
    for (Colour x : {alpha, beta})
        for (Colour y : {alpha_hat, beta_hat}) cycles.emplace(pair_index(x, y), residues(g, ColourSet{x, y}));
    auto face_of = [&](Colour x, Colour y, Vertex v) {
        const ResiduePartition& part = cycles.at(pair_index(x, y));
        const Vertex lowest = part.components[part.component_of[idx(v)]].vertices.front();
        return index.at(FaceKey{pair_index(x, y), lowest});
    };

    pd.merge.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        const auto vv = static_cast<Vertex>(v);
        pd.merge[v] = {std::pair{face_of(alpha, alpha_hat, vv), face_of(alpha, beta_hat, vv)},
                       std::pair{face_of(beta, alpha_hat, vv), face_of(beta, beta_hat, vv)},
                       std::pair{face_of(alpha, alpha_hat, vv), face_of(beta, alpha_hat, vv)},
                       std::pair{face_of(alpha, beta_hat, vv), face_of(beta, beta_hat, vv)}};
    }
    return pd;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

void unite(std::vector<std::size_t>& parent, std::size_t x, std::size_t y) {
    x = find_root(parent, x);
    y = find_root(parent, y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    parent[y] = x;
}

struct TaskResult {
    std::optional<GmChoice> best;
    std::vector<GmChoice> rows;
};

/// All D' choices and regions for one (partition, D).
TaskResult evaluate(const ColouredGraph& g, const PartitionData& pd, std::size_t d_index, bool keep_rows) {
    const std::size_t faces = pd.face_keys.size();
    const auto order = static_cast<int>(g.order());
    TaskResult out;
    std::vector<std::size_t> parent(faces);
    for (std::size_t dp = 0; dp < pd.two.count(); ++dp) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        for (Vertex v : pd.one.components[d_index].vertices)
            for (std::size_t k = 0; k < 2; ++k) unite(parent, pd.merge[idx(v)][k].first, pd.merge[idx(v)][k].second);
        for (Vertex v : pd.two.components[dp].vertices)
            for (std::size_t k = 2; k < 4; ++k) unite(parent, pd.merge[idx(v)][k].first, pd.merge[idx(v)][k].second);

        const VertexSet base = pd.one_sets[d_index] | pd.two_sets[dp];
        std::vector<VertexSet> covered(faces);
        std::vector<std::size_t> roots;
        for (std::size_t f = 0; f < faces; ++f) {
            const std::size_t r = find_root(parent, f);
            if (r == f) {
                covered[f] = base;
                roots.push_back(f);
            }
            covered[r] |= pd.face_sets[f];
        }
        // roots are the smallest face index of their region, i.e. its key
        for (std::size_t r : roots) {
            GmChoice choice{pd.partition.index(), d_index, dp, pd.face_keys[r],
                            order - static_cast<int>(covered[r].count())};
            if (!out.best || better_choice(choice, *out.best)) out.best = choice;
            if (keep_rows) out.rows.push_back(choice);
        }
    }
    return out;
}

}  // namespace

bool better_choice(const GmChoice& a, const GmChoice& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.tie_key() < b.tie_key();
}

int gm_bar(const ColouredGraph& g, PartitionChoice partition, std::size_t d_index, std::size_t d_prime_index,
           const Region& region) {
    if (region.origin != RegionOrigin{partition.index(), d_index, d_prime_index})
        throw ChoiceMismatchError("region was built for partition " + std::to_string(region.origin.partition) +
                                  ", D " + std::to_string(region.origin.d_index) + ", D' " +
                                  std::to_string(region.origin.d_prime_index));
    const auto [alpha, beta] = partition.pair_one();
    const auto [alpha_hat, beta_hat] = partition.pair_two();
    const ResiduePartition one = residues(g, ColourSet{alpha, beta});
    const ResiduePartition two = residues(g, ColourSet{alpha_hat, beta_hat});
    if (d_index >= one.count() || d_prime_index >= two.count())
        throw IndexOutOfRangeError("residue index out of range");
    VertexSet covered(g.order(), one.components[d_index].vertices);
    covered |= VertexSet(g.order(), two.components[d_prime_index].vertices);
    for (Vertex v : region.vertex_set) {
        if (v < 0 || idx(v) >= g.order()) throw ChoiceMismatchError("region vertex out of range");
        covered.insert(v);
    }
    return static_cast<int>(g.order() - covered.count());
}

GMReport gm_complexity(const ColouredGraph& g, const GmOptions& options) {
    if (!is_bipartite(g)) throw NonBipartiteError("GM-complexity is computed for bipartite crystallizations only");
    if (!is_contracted(g)) throw NotContractedError("GM-complexity is defined for crystallizations");

    std::vector<PartitionData> data;
    for (PartitionChoice p : PartitionChoice::all()) data.push_back(prepare(g, p));

    std::vector<std::pair<std::size_t, std::size_t>> tasks;
    for (std::size_t p = 0; p < data.size(); ++p)
        for (std::size_t d = 0; d < data[p].one.count(); ++d) tasks.emplace_back(p, d);

    std::vector<TaskResult> results(tasks.size());
    parallel_for(tasks.size(), options.jobs, [&](std::size_t t) {
        results[t] = evaluate(g, data[tasks[t].first], tasks[t].second, options.keep_table);
    });

    GMReport report;
    std::optional<GmChoice> best;
    for (const TaskResult& r : results)
        if (r.best && (!best || better_choice(*r.best, *best))) best = r.best;
    if (!best) throw InternalInvariantError("no GM choice evaluated");
    report.value = best->value;
    report.witness = *best;

    const auto witness_regions =
        regions(g, PartitionChoice(best->partition), best->d_index, best->d_prime_index);
    for (const Region& r : witness_regions)
        if (r.key() == best->region_key) report.witness_region = r;

    if (options.keep_table) {
        std::vector<GmChoice> table;
        for (TaskResult& r : results) table.insert(table.end(), r.rows.begin(), r.rows.end());
        std::sort(table.begin(), table.end(), [](const GmChoice& a, const GmChoice& b) { return a.tie_key() < b.tie_key(); });
        report.table = std::move(table);
    }
    return report;
}

std::string signature_key(const ColouredGraph& g) {
    const bool bip = is_bipartite(g);
    std::string genus = "-";
    if (bip) genus = std::to_string(minimal_genus(g));
    return "H1=" + homology_h1(g).to_string() + ";genus=" + genus + ";bipartite=" + (bip ? "1" : "0");
}

std::string group_key(const CatalogueEntry& entry, GroupBy grouping) {
    if (grouping == GroupBy::Name && entry.name) return *entry.name;
    return signature_key(entry.graph);
}

std::vector<CatalogueBound> gm_min_over(std::span<const CatalogueEntry> entries, GroupBy grouping,
                                        std::vector<EntryFailure>* failures, unsigned jobs) {
    struct Evaluated {
        std::string key;
        int gm = 0;
        std::string error;
    };
    std::vector<Evaluated> evaluated(entries.size());
    parallel_for(entries.size(), jobs, [&](std::size_t i) {
        const CatalogueEntry& e = entries[i];
        try {
            evaluated[i].key = group_key(e, grouping);
            evaluated[i].gm = e.computed && e.computed->gm ? *e.computed->gm : gm_complexity(e.graph).value;
        } catch (const std::exception& ex) {
            evaluated[i].error = ex.what();
        }
    });

    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!evaluated[i].error.empty()) {
            if (failures) failures->push_back({entries[i].id, evaluated[i].error});
            continue;
        }
        groups[evaluated[i].key].push_back(i);
    }

    std::vector<CatalogueBound> out;
    for (const auto& [key, members] : groups) {
        std::size_t best = members.front();
        std::size_t min_order = entries[best].graph.order();
        for (std::size_t i : members) {
            min_order = std::min(min_order, entries[i].graph.order());
            const auto candidate = std::pair{evaluated[i].gm, entries[i].graph.order()};
            if (candidate < std::pair{evaluated[best].gm, entries[best].graph.order()}) best = i;
        }
        CatalogueBound b;
        b.manifold_key = key;
        b.best_value = evaluated[best].gm;
        b.best_graph = canonical_code(entries[best].graph, CodeMode::ColourPermutable);
        b.best_id = entries[best].id;
        b.best_order = entries[best].graph.order();
        b.minimal_order_flag = b.best_order == min_order;
        b.members = members.size();
        out.push_back(std::move(b));
    }
    return out;
}

bool check_prop1(std::optional<int> known_complexity, int gm) {
    if (!known_complexity) throw MissingAnnotationError("Prop-1 check needs a known complexity");
    return *known_complexity <= gm;
}

bool check_prop1(const CatalogueEntry& entry) {
    if (!entry.known_complexity) throw MissingAnnotationError("entry " + entry.id + " has no known complexity");
    const int gm = entry.computed && entry.computed->gm ? *entry.computed->gm : gm_complexity(entry.graph).value;
    return check_prop1(entry.known_complexity, gm);
}

std::vector<std::pair<Vertex, Vertex>> admissible_sum_pairs(const ColouredGraph& g1, const ColouredGraph& g2) {
    const auto b1 = bipartition(g1);
    const auto b2 = bipartition(g2);
    std::vector<std::pair<Vertex, Vertex>> out;
    for (std::size_t v1 = 0; v1 < g1.order(); ++v1)
        for (std::size_t v2 = 0; v2 < g2.order(); ++v2)
            if (!(b1 && b2) || b1->side[v1] != b2->side[v2])
                out.emplace_back(static_cast<Vertex>(v1), static_cast<Vertex>(v2));
    return out;
}

SubadditivityReport check_subadditivity(const ColouredGraph& g1, const ColouredGraph& g2,
                                        std::span<const std::pair<Vertex, Vertex>> samples, unsigned jobs) {
    SubadditivityReport report;
    report.gm_first = gm_complexity(g1).value;
    report.gm_second = gm_complexity(g2).value;
    report.samples.resize(samples.size());
    parallel_for(samples.size(), jobs, [&](std::size_t i) {
        const auto [v1, v2] = samples[i];
        const int sum = gm_complexity(connected_sum(g1, v1, g2, v2)).value;
        report.samples[i] = SubadditivitySample{v1, v2, sum, sum <= report.gm_first + report.gm_second};
    });
    for (const auto& s : report.samples)
        if (!s.holds) ++report.violations;
    return report;
}

}  // namespace gemc
