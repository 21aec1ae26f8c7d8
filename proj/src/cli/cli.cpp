#include "gemc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "gemc/batch.hpp"
#include "gemc/canonical.hpp"
#include "gemc/catalogue.hpp"
#include "gemc/enumerate.hpp"
#include "gemc/error.hpp"
#include "gemc/gem_format.hpp"
#include "gemc/gm.hpp"
#include "gemc/heegaard.hpp"
#include "gemc/invariants.hpp"
#include "gemc/parallel.hpp"

namespace gemc::cli {

namespace {

enum class Format { Gem, Jsonl };

/// Input failure that is not tied to a position (missing file, empty catalogue).
class InputError : public GemError {
public:
    using GemError::GemError;
};

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    buf << in.rdbuf();
    return buf.str();
}

Format format_of(const std::string& path, const std::string& requested) {
    if (requested == "gem") return Format::Gem;
    if (requested == "jsonl") return Format::Jsonl;
    const std::string ext = ".jsonl";
    if (path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0)
        return Format::Jsonl;
    return Format::Gem;
}

std::vector<ParsedEntry> read_catalogue(const std::string& path, Format format) {
    const std::string text = read_input(path);
    return format == Format::Jsonl ? read_jsonl(text) : read_gem_catalogue(text);
}

/// The single graph stored in `path`.
ColouredGraph read_single(const std::string& path, const std::string& requested) {
    const Format format = format_of(path, requested);
    const std::string text = read_input(path);
    if (format == Format::Gem) return parse_gem(text);
    const std::vector<ParsedEntry> entries = read_jsonl(text);
    if (entries.empty()) throw InputError(path + " holds no entry");
    if (!entries.front().entry) throw InputError(entries.front().error);
    return entries.front().entry->graph;
}

/// Either the named file or `fallback`.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw InputError("cannot write " + path);
        stream_ = file_.get();
    }
    std::ostream& stream() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

std::string residue_text(const ColouredGraph& g, std::pair<Colour, Colour> pair, std::size_t index) {
    const ResiduePartition parts = residues(g, {pair.first, pair.second});
    std::string s = "{" + std::to_string(pair.first) + "," + std::to_string(pair.second) + "}#" +
                    std::to_string(index) + " [";
    const Residue& r = parts.components.at(index);
    for (std::size_t k = 0; k < r.vertices.size(); ++k) s += (k ? " " : "") + std::to_string(r.vertices[k]);
    return s + "]";
}

std::string face_text(const Face& f) {
    std::string s = "{" + std::to_string(f.first) + "," + std::to_string(f.second) + "}[";
    for (std::size_t k = 0; k < f.vertices.size(); ++k) s += (k ? " " : "") + std::to_string(f.vertices[k]);
    return s + "]";
}

std::string partition_text(PartitionChoice p) {
    const auto e = p.epsilon();
    return "{" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "}|{" + std::to_string(e[2]) + "," +
           std::to_string(e[3]) + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const std::string& path, const std::string& format, std::ostream& out, std::ostream& err) {
    const std::vector<ParsedEntry> entries = read_catalogue(path, format_of(path, format));
    if (entries.empty()) {
        err << path << ": no gem found\n";
        return kExitInputError;
    }
    int status = kExitOk;
    for (const ParsedEntry& e : entries) {
        if (e.entry) {
            out << e.id << ": ok, order " << e.entry->graph.order() << "\n";
        } else {
            err << path << ": " << (e.id.empty() ? std::string() : e.id + ": ") << e.error << "\n";
            status = kExitInputError;
        }
    }
    return status;
}

int cmd_info(const ColouredGraph& g, std::ostream& out) {
    out << "order: " << g.order() << "\n";
    const bool bip = is_bipartite(g);
    const bool contracted = is_contracted(g);
    const bool manifold = is_manifold_gem(g);
    out << "bipartite: " << yes_no(bip) << "\n";
    out << "contracted: " << yes_no(contracted) << "\n";
    out << "manifold: " << yes_no(manifold) << "\n";
    out << "rigid: " << yes_no(is_rigid(g)) << "\n";
    const auto counts = residue_counts(g);
    out << "residues:";
    for (std::size_t k = 0; k < counts.size(); ++k)
        out << " g" << kColourPairs[k].first << kColourPairs[k].second << "=" << counts[k];
    out << "\n";
    if (bip && contracted && manifold) {
        const auto genus = genus_per_partition(g);
        out << "genus:";
        for (int p = 0; p < 3; ++p) out << " " << partition_text(PartitionChoice(p)) << "=" << genus[p];
        out << "\n";
        out << "genus_min: " << *std::min_element(genus.begin(), genus.end()) << "\n";
    }
    if (manifold) out << "h1: " << homology_h1(g).to_string() << "\n";
    if (contracted) out << "k_bound: " << gem_complexity_bound(g) << "\n";
    out << "code: " << to_hex(canonical_code(g, CodeMode::ColourPermutable)) << "\n";
    return kExitOk;
}

int cmd_gm(const ColouredGraph& g, bool witness, bool table, unsigned jobs, std::ostream& out) {
    GmOptions options;
    options.jobs = jobs;
    options.keep_table = table;
    const GMReport report = gm_complexity(g, options);
    out << report.value << "\n";
    if (witness) {
        const GmChoice& w = report.witness;
        const PartitionChoice p(w.partition);
        out << "partition: " << w.partition << " " << partition_text(p) << "\n";
        out << "D: " << residue_text(g, p.pair_one(), w.d_index) << "\n";
        out << "D': " << residue_text(g, p.pair_two(), w.d_prime_index) << "\n";
        out << "region:";
        for (const Face& f : report.witness_region.faces) out << " " << face_text(f);
        out << "\n";
    }
    if (table && report.table) {
        out << "partition\tD\tD'\tregion\tvalue\n";
        for (const GmChoice& c : *report.table)
            out << c.partition << "\t" << c.d_index << "\t" << c.d_prime_index << "\t" << c.region_key.first << ":"
                << c.region_key.second << "\t" << c.value << "\n";
    }
    return kExitOk;
}

int cmd_enumerate(const EnumerationOptions& options, Format format, const std::string& output, std::ostream& out) {
    Sink sink(output, out);
    std::size_t count = 0;
    enumerate_crystallizations(options, [&](const ColouredGraph& g) {
        ++count;
        if (format == Format::Gem) {
            sink.stream() << serialize_gem(g);
        } else {
            CatalogueEntry e;
            e.id = "c" + std::to_string(count);
            e.graph = g;
            sink.stream() << to_jsonl(e) << "\n";
        }
    });
    sink.stream().flush();
    return kExitOk;
}

/// Smallest v2 that connected_sum accepts together with v1.
Vertex default_v2(const ColouredGraph& g1, Vertex v1, const ColouredGraph& g2) {
    const auto b1 = bipartition(g1);
    const auto b2 = bipartition(g2);
    if (!b1 || !b2) return 0;
    const int side = b1->side.at(static_cast<std::size_t>(v1));
    for (Vertex v = 0; v < static_cast<Vertex>(g2.order()); ++v)
        if (b2->side[static_cast<std::size_t>(v)] != side) return v;
    return 0;
}

int cmd_sum(const ColouredGraph& g1, const ColouredGraph& g2, Vertex v1, std::optional<Vertex> v2, Format format,
            const std::string& output, std::ostream& out) {
    if (v1 < 0 || v1 >= static_cast<Vertex>(g1.order()))
        throw IndexOutOfRangeError("--v1 " + std::to_string(v1) + " is not a vertex of the first gem");
    const ColouredGraph sum = connected_sum(g1, v1, g2, v2 ? *v2 : default_v2(g1, v1, g2));
    Sink sink(output, out);
    if (format == Format::Gem) {
        sink.stream() << serialize_gem(sum);
    } else {
        CatalogueEntry e;
        e.id = "sum";
        e.graph = sum;
        sink.stream() << to_jsonl(e) << "\n";
    }
    return kExitOk;
}

int cmd_batch(const std::string& path, const std::string& format, const std::string& seeds_path,
              GroupBy group_by, unsigned jobs, const std::string& output, const std::string& groups_path,
              std::ostream& out) {
    std::vector<ParsedEntry> input = read_catalogue(path, format_of(path, format));
    if (!seeds_path.empty()) {
        std::vector<CatalogueEntry> seeds;
        for (const ParsedEntry& p : read_jsonl(read_input(seeds_path)))
            if (p.entry) seeds.push_back(*p.entry);
        std::vector<CatalogueEntry> readable;
        for (const ParsedEntry& p : input)
            if (p.entry) readable.push_back(*p.entry);
        apply_seed_annotations(readable, seeds);
        std::size_t k = 0;
        for (ParsedEntry& p : input)
            if (p.entry) p.entry = readable[k++];
    }
    BatchOptions options;
    options.group_by = group_by;
    options.jobs = jobs;
    const BatchReport report = classify_batch(input, options);
    Sink sink(output, out);
    sink.stream() << report_csv(report);
    sink.stream().flush();
    if (!groups_path.empty()) {
        Sink groups(groups_path, out);
        groups.stream() << groups_csv(report);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gem-Matveev complexity and invariants of 4-coloured graphs", "gemc"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"gem", "jsonl"};
    unsigned jobs = default_jobs();
    auto add_jobs = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    std::string input;
    std::string format;
    auto* validate = app.add_subcommand("validate", "check a GEM stream or JSONL catalogue");
    validate->add_option("input", input, "file, or - for stdin")->required();
    validate->add_option("--format", format, "input format")->check(CLI::IsMember(formats));

    auto* info = app.add_subcommand("info", "print the invariants of one gem");
    info->add_option("input", input)->required();
    info->add_option("--format", format)->check(CLI::IsMember(formats));

    bool witness = false;
    bool table = false;
    auto* gm = app.add_subcommand("gm", "compute the GM-complexity of one bipartite crystallization");
    gm->add_option("input", input)->required();
    gm->add_option("--format", format)->check(CLI::IsMember(formats));
    gm->add_flag("--witness", witness, "print the minimizing choice");
    gm->add_flag("--table", table, "print every choice and its value");
    add_jobs(gm);

    EnumerationOptions enumeration;
    std::string output;
    auto* enumerate = app.add_subcommand("enumerate", "list crystallizations up to colour-permutable isomorphism");
    enumerate->add_option("--max-order", enumeration.max_order)->required();
    enumerate->add_flag("--bipartite-only", enumeration.filters.bipartite_only);
    enumerate->add_flag("--rigid-only", enumeration.filters.rigid_only);
    enumerate->add_flag("--manifold-only", enumeration.filters.manifold_only);
    enumerate->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
    enumerate->add_option("--output", output);
    add_jobs(enumerate);

    std::string second;
    Vertex v1 = 0;
    std::optional<Vertex> v2;
    auto* sum = app.add_subcommand("sum", "connected sum of two gems");
    sum->add_option("first", input)->required();
    sum->add_option("second", second)->required();
    sum->add_option("--v1", v1, "vertex removed from the first gem");
    sum->add_option("--v2", v2, "vertex removed from the second gem");
    sum->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
    sum->add_option("--output", output);

    std::string group_by = "signature";
    std::string seeds;
    std::string groups;
    auto* batch = app.add_subcommand("batch", "CSV report over a catalogue");
    batch->add_option("input", input)->required();
    batch->add_option("--format", format, "input format")->check(CLI::IsMember(formats));
    batch->add_option("--output", output);
    batch->add_option("--group-by", group_by)->check(CLI::IsMember({"signature", "name"}));
    batch->add_option("--seed-annotations", seeds, "JSONL catalogue whose annotations are copied to isomorphic entries");
    batch->add_option("--groups", groups, "also write the per-group bounds to this file");
    add_jobs(batch);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*validate) return cmd_validate(input, format, out, err);
        if (*info) return cmd_info(read_single(input, format), out);
        if (*gm) return cmd_gm(read_single(input, format), witness, table, jobs, out);
        if (*enumerate) {
            enumeration.jobs = jobs;
            return cmd_enumerate(enumeration, format == "jsonl" ? Format::Jsonl : Format::Gem, output, out);
        }
        if (*sum)
            return cmd_sum(read_single(input, ""), read_single(second, ""), v1, v2,
                           format == "jsonl" ? Format::Jsonl : Format::Gem, output, out);
        if (*batch)
            return cmd_batch(input, format, seeds, group_by == "name" ? GroupBy::Name : GroupBy::Signature, jobs,
                             output, groups, out);
    } catch (const InternalInvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const GemError& e) {
        err << input << ": " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
    return kExitInputError;
}

}  // namespace gemc::cli
