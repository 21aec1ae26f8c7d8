#include "gemc/batch.hpp"

#include <map>

#include "gemc/parallel.hpp"

namespace gemc {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

template <typename T>
std::string cell(const std::optional<T>& v) {
    if (!v) return "";
    if constexpr (std::is_same_v<T, bool>)
        return *v ? "true" : "false";
    else if constexpr (std::is_same_v<T, std::string>)
        return csv_field(*v);
    else
        return std::to_string(*v);
}

}  // namespace

BatchReport classify_batch(const std::vector<ParsedEntry>& input, const BatchOptions& options) {
    BatchReport report;
    report.rows.resize(input.size());

    struct Work {
        std::optional<CatalogueEntry> entry;
        std::optional<std::string> key;
    };
    std::vector<Work> work(input.size());

    parallel_for(input.size(), options.jobs, [&](std::size_t i) {
        const ParsedEntry& p = input[i];
        ReportRow& row = report.rows[i];
        row.id = p.id;
        if (!p.entry) {
            row.error = p.error;
            return;
        }
        CatalogueEntry e = *p.entry;
        const ColouredGraph& g = e.graph;
        row.order = g.order();
        try {
            e.computed = compute_invariants(g);
            const ComputedInvariants& ci = *e.computed;
            row.bipartite = ci.bipartite;
            row.rigid = ci.rigid;
            row.residue_counts = ci.residue_counts;
            row.genus_min = ci.genus_min;
            if (ci.h1) row.h1 = ci.h1->to_string();
            row.gm = ci.gm;
            row.k_bound = ci.k_bound;
            if (!ci.contracted)
                row.error = "not a crystallization: some 3-coloured subgraph is disconnected";
            else if (!ci.manifold)
                row.error = "not a manifold gem: sphere criterion fails";
            else if (!ci.bipartite)
                row.error = "gm needs a bipartite crystallization";
            if (ci.manifold) work[i].key = group_key(e, options.group_by);
            if (e.known_complexity && ci.gm) row.prop1_ok = check_prop1(e.known_complexity, *ci.gm);
        } catch (const std::exception& ex) {
            row.error = ex.what();
        }
        work[i].entry = std::move(e);
    });

    // group minimum of the gem-complexity bound, for the conjecture column
    std::map<std::string, int> group_k;
    for (const Work& w : work) {
        if (!w.key || !w.entry->computed->k_bound) continue;
        const int k = *w.entry->computed->k_bound;
        const auto [it, inserted] = group_k.emplace(*w.key, k);
        if (!inserted && k < it->second) it->second = k;
    }
    std::vector<CatalogueEntry> groupable;
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (!work[i].entry) continue;
        const CatalogueEntry& e = *work[i].entry;
        if (work[i].key && e.known_complexity && group_k.count(*work[i].key))
            report.rows[i].conjecture_ok = check_conjecture(e, group_k.at(*work[i].key));
        if (work[i].key && e.computed->gm) groupable.push_back(e);
        report.entries.push_back(e);
    }
    report.groups = gm_min_over(groupable, options.group_by, nullptr, options.jobs);
    return report;
}

std::string report_csv(const BatchReport& report) {
    std::string out = std::string(kReportHeader) + "\n";
    for (const ReportRow& r : report.rows) {
        out += csv_field(r.id) + "," + cell(r.order) + "," + cell(r.bipartite) + "," + cell(r.rigid);
        for (std::size_t k = 0; k < 6; ++k)
            out += "," + (r.residue_counts ? std::to_string((*r.residue_counts)[k]) : std::string());
        out += "," + cell(r.genus_min) + "," + cell(r.h1) + "," + cell(r.gm) + "," + cell(r.k_bound) + "," +
               cell(r.prop1_ok) + "," + cell(r.conjecture_ok) + "," + csv_field(r.error) + "\n";
    }
    return out;
}

std::string groups_csv(const BatchReport& report) {
    std::string out = "manifold_key,best_value,best_id,best_order,minimal_order,members,best_code\n";
    for (const CatalogueBound& b : report.groups)
        out += csv_field(b.manifold_key) + "," + std::to_string(b.best_value) + "," + csv_field(b.best_id) + "," +
               std::to_string(b.best_order) + "," + (b.minimal_order_flag ? "true" : "false") + "," +
               std::to_string(b.members) + "," + to_hex(b.best_graph) + "\n";
    return out;
}

}  // namespace gemc
