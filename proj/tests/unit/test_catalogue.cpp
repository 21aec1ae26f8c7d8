#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "census.hpp"
#include "gemc/batch.hpp"
#include "gemc/canonical.hpp"
#include "gemc/catalogue.hpp"
#include "gemc/enumerate.hpp"
#include "gemc/error.hpp"
#include "gemc/gem_format.hpp"
#include "gemc/generators.hpp"
#include "gemc/gm.hpp"
#include "gemc/heegaard.hpp"
#include "gemc/invariants.hpp"
#include "oracles.hpp"

using namespace gemc;

namespace {

const char* const kSphereText = "gem 2\nc0: 0 1\nc1: 0 1\nc2: 0 1\nc3: 0 1\n";

template <typename E>
std::size_t error_line(const std::string& text) {
    try {
        parse_gem(text);
    } catch (const E& e) {
        return e.line();
    }
    FAIL("no error raised for: " << text);
    return 0;
}

SemanticError::Cause semantic_cause(const std::string& text) {
    try {
        parse_gem(text);
    } catch (const SemanticError& e) {
        return e.cause();
    }
    FAIL("no semantic error for: " << text);
    return SemanticError::Cause::OddOrder;
}

std::vector<std::size_t> per_order(const std::vector<ColouredGraph>& gs) {
    std::vector<std::size_t> out(5, 0);
    for (const ColouredGraph& g : gs) ++out[g.order() / 2];
    return {out.begin() + 1, out.end()};
}

EnumerationOptions up_to(std::size_t order) {
    EnumerationOptions o;
    o.max_order = order;
    return o;
}

}  // namespace

TEST_CASE("GEM text of the order-2 gem") {
    CHECK(serialize_gem(sphere_gem()) == kSphereText);
    CHECK(parse_gem(kSphereText) == sphere_gem());
    CHECK(parse_gem("# a comment\n\ngem 2   # header\nc0: 0 1\nc1: 1 0\n\nc2:\t0 1\nc3: 0 1") == sphere_gem());
}

TEST_CASE("GEM parse errors carry positions and causes") {
    CHECK(error_line<SemanticError>("gem 2\nc0: 0 0\nc1: 0 1\nc2: 0 1\nc3: 0 1\n") == 2);
    CHECK(semantic_cause("gem 2\nc0: 0 0\nc1: 0 1\nc2: 0 1\nc3: 0 1\n") == SemanticError::Cause::FixedPoint);
    CHECK(semantic_cause("gem 3\nc0: 0 1\n") == SemanticError::Cause::OddOrder);
    CHECK(semantic_cause("gem 4\nc0: 0 1 2 3\nc1: 0 1 2 3\nc2: 0 1 2 3\nc3: 0 1 2 3\n") ==
          SemanticError::Cause::Disconnected);
    CHECK(semantic_cause("gem 4\nc0: 0 1 1 3\nc1: 0 1 2 3\nc2: 0 2 1 3\nc3: 0 1 2 3\n") ==
          SemanticError::Cause::NotInvolution);
    CHECK(semantic_cause("gem 2\nc0: 0 5\nc1: 0 1\nc2: 0 1\nc3: 0 1\n") == SemanticError::Cause::NotInvolution);

    CHECK(error_line<SyntaxError>("") == 1);
    CHECK(error_line<SyntaxError>("gen 2\n") == 1);
    CHECK(error_line<SyntaxError>("gem two\n") == 1);
    CHECK(error_line<SyntaxError>("gem 2\nc0: 0 1\nc1: 0 x\nc2: 0 1\nc3: 0 1\n") == 3);
    CHECK(error_line<SyntaxError>("gem 2\nc0: 0 1\nc2: 0 1\nc1: 0 1\nc3: 0 1\n") == 3);
    CHECK(error_line<SyntaxError>("gem 2\nc0: 0 1\nc1: 0 1\nc2: 0 1\n") == 5);
    CHECK(error_line<SyntaxError>("gem 2\nc0: 0 1 0\nc1: 0 1\nc2: 0 1\nc3: 0 1\n") == 2);
    CHECK(error_line<SyntaxError>(std::string(kSphereText) + "extra\n") == 6);

    try {
        parse_gem("gem 2\nc0: 0 1\nc1: 0 -1\nc2: 0 1\nc3: 0 1\n");
        FAIL("negative vertex accepted");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 7);
        CHECK(std::string(e.what()).rfind("line 3, column 7: ", 0) == 0);
    }
}

TEST_CASE("GEM round trip over the census") {
    std::string stream;
    for (const ColouredGraph& g : testing_support::census8()) {
        const std::string text = serialize_gem(g);
        const ColouredGraph back = parse_gem(text);
        CHECK(back == g);
        CHECK(canonical_code(back, CodeMode::ColourFixed) == canonical_code(g, CodeMode::ColourFixed));
        stream += text;
    }
    CHECK(parse_gem_stream(stream) == testing_support::census8());
}

TEST_CASE("GEM streams keep going after a broken record") {
    const std::string text = std::string("# census\n") + kSphereText + "gem 2\nc0: 0 0\nc1: 0 1\nc2: 0 1\nc3: 0 1\n" +
                             kSphereText;
    const auto chunks = split_gem_stream(text);
    REQUIRE(chunks.size() == 3);
    CHECK(chunks[1].first_line == 7);
    const auto entries = read_gem_catalogue(text);
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].entry);
    CHECK_FALSE(entries[1].entry);
    CHECK(entries[1].id == "gem2");
    CHECK(entries[1].error.find("line 8") != std::string::npos);
    CHECK(entries[2].entry);
    CHECK(entries[2].id == "gem3");
}

TEST_CASE("JSONL entries") {
    CatalogueEntry e;
    e.id = "l31";
    e.graph = lens_gem(3, 1);
    e.name = "L(3,1)";
    e.known_complexity = 0;
    e.tags = {"lens", "genus-1"};
    const std::string line = to_jsonl(e);
    CHECK(line.find('\n') == std::string::npos);
    const CatalogueEntry back = parse_jsonl_line(line);
    CHECK(back.id == e.id);
    CHECK(back.graph == e.graph);
    CHECK(back.name == e.name);
    CHECK(back.known_complexity == e.known_complexity);
    CHECK(back.tags == e.tags);

    const std::string text = line + "\n\n" + R"({"id":"s3","order":2,"matchings":[[1,0],[1,0],[1,0],[1,0]]})" +
                             "\n" + R"({"id":"fp","order":2,"matchings":[[0,1],[1,0],[1,0],[1,0]]})" + "\n" +
                             "{not json\n" + R"({"id":"s3","order":2,"matchings":[[1,0],[1,0],[1,0],[1,0]]})" + "\n" +
                             R"({"id":"short","order":2,"matchings":[[1,0],[1,0],[1,0]]})" + "\n";
    const auto parsed = read_jsonl(text);
    REQUIRE(parsed.size() == 6);
    CHECK(parsed[0].entry);
    CHECK(parsed[1].entry);
    CHECK(parsed[1].line == 3);
    CHECK_FALSE(parsed[2].entry);
    CHECK(parsed[2].id == "fp");
    CHECK_FALSE(parsed[3].entry);
    CHECK(parsed[3].id == "line5");
    CHECK_FALSE(parsed[4].entry);
    CHECK(parsed[4].error.find("duplicate") != std::string::npos);
    CHECK_FALSE(parsed[5].entry);

    CHECK_THROWS_AS(parse_jsonl_line(R"({"id":"fp","order":2,"matchings":[[0,1],[1,0],[1,0],[1,0]]})"), SemanticError);
    CHECK_THROWS_AS(parse_jsonl_line(R"({"id":"x","order":4,"matchings":[[1,0,3,2],[1,0,3,2],[1,0,3,2],[1,0,3,2]]})"),
                    SemanticError);
    CHECK_THROWS_AS(parse_jsonl_line(R"({"id":"x","order":2,"matchings":[[1,0],[1,0],[1,0],[1,0]],"known_complexity":-1})"),
                    SyntaxError);
    CHECK_THROWS_AS(parse_jsonl_line("[1,2]"), SyntaxError);
}

TEST_CASE("seed annotations match relabelled copies") {
    std::mt19937 rng(1);
    CatalogueEntry seed;
    seed.id = "seed";
    seed.graph = lens_gem(2, 1);
    seed.name = "L(2,1)";
    seed.known_complexity = 0;
    std::vector<CatalogueEntry> entries(2);
    entries[0].id = "a";
    entries[0].graph = oracle::random_relabel(lens_gem(2, 1), rng, true);
    entries[1].id = "b";
    entries[1].graph = lens_gem(3, 1);
    apply_seed_annotations(entries, {seed});
    CHECK(entries[0].name == "L(2,1)");
    CHECK(entries[0].known_complexity == 0);
    CHECK_FALSE(entries[1].name);
}

TEST_CASE("lens spaces") {
    CHECK_THROWS_AS(lens_gem(1, 1), ParameterError);
    CHECK_THROWS_AS(lens_gem(4, 2), ParameterError);
    CHECK_THROWS_AS(lens_gem(5, 0), ParameterError);
    CHECK_THROWS_AS(lens_gem(5, 5), ParameterError);
    CHECK_THROWS_AS(lens_gem(5, -1), ParameterError);
    for (int p = 2; p <= 7; ++p)
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const ColouredGraph g = lens_gem(p, q);
            CHECK(g.order() <= static_cast<std::size_t>(4 * p));
            CHECK(is_bipartite(g));
            CHECK(is_contracted(g));
            CHECK(is_manifold_gem(g));
            CHECK(minimal_genus(g) == 1);
            const AbelianGroup h = homology_h1(g);
            CHECK(h.free_rank == 0);
            REQUIRE(h.torsion.size() == 1);
            CHECK(h.torsion[0] == p);
        }
    CHECK(signature_key(lens_gem(4, 1)) == signature_key(lens_gem(4, 3)));
}

TEST_CASE("standard gems") {
    const auto gems = standard_gems();
    std::set<std::string> names;
    for (const NamedGem& n : gems) {
        names.insert(n.name);
        CHECK(is_manifold_gem(n.graph));
        CHECK(is_contracted(n.graph));
        CHECK(is_bipartite(n.graph));
    }
    CHECK(names == std::set<std::string>{"S3", "S2xS1", "L(2,1)", "L(3,1)"});
    for (const NamedGem& n : gems) {
        if (n.name == "S3") CHECK(n.graph == sphere_gem());
        if (n.name == "S2xS1") {
            CHECK(n.graph.order() == 8);
            CHECK(homology_h1(n.graph).free_rank == 1);
            CHECK_FALSE(is_rigid(n.graph));
        }
        if (n.name == "L(2,1)") CHECK(n.graph == lens_gem(2, 1));
        if (n.name == "L(3,1)") CHECK(n.graph == lens_gem(3, 1));
    }
}

TEST_CASE("enumeration at the smallest orders") {
    EnumerationOptions o = up_to(2);
    o.filters = {true, true, true};
    const auto two = enumerate_crystallizations(o);
    REQUIRE(two.size() == 1);
    CHECK(two[0] == sphere_gem());
    CHECK_THROWS_AS(enumerate_crystallizations(up_to(5)), ParameterError);
    CHECK_THROWS_AS(enumerate_crystallizations(up_to(12)), CeilingExceededError);
    EnumerationOptions lowered = up_to(6);
    lowered.ceiling = 4;
    CHECK_THROWS_AS(enumerate_crystallizations(lowered), CeilingExceededError);
    lowered.max_order = 4;
    CHECK(enumerate_crystallizations(lowered).size() == 3);
}

TEST_CASE("class counts match a brute force over all matching tuples") {
    const auto counts = per_order(enumerate_crystallizations(up_to(6)));
    CHECK(counts[0] == oracle::class_count(2, [](const ColouredGraph&) { return true; }));
    CHECK(counts[1] == oracle::class_count(4, [](const ColouredGraph&) { return true; }));
    CHECK(counts[2] == oracle::class_count(6, [](const ColouredGraph&) { return true; }));

    EnumerationOptions bip = up_to(6);
    bip.filters.bipartite_only = true;
    const auto bip_counts = per_order(enumerate_crystallizations(bip));
    for (std::size_t order : {4, 6})
        CHECK(bip_counts[order / 2 - 1] ==
              oracle::class_count(order, [](const ColouredGraph& g) { return !oracle::has_odd_cycle(g); }));

    EnumerationOptions rigid = up_to(6);
    rigid.filters.rigid_only = true;
    const auto rigid_counts = per_order(enumerate_crystallizations(rigid));
    for (std::size_t order : {4, 6})
        CHECK(rigid_counts[order / 2 - 1] ==
              oracle::class_count(order, [](const ColouredGraph& g) { return oracle::rho_pairs(g).empty(); }));
}

TEST_CASE("order-8 census regression counts") {
    // cross-checked once against the brute-force orbit count (173 classes at order 8)
    CHECK(per_order(testing_support::census8()) == std::vector<std::size_t>{1, 2, 12, 173});
    EnumerationOptions o = up_to(8);
    o.filters.bipartite_only = true;
    CHECK(per_order(enumerate_crystallizations(o)) == std::vector<std::size_t>{1, 1, 4, 21});
    o.filters.manifold_only = true;
    CHECK(per_order(enumerate_crystallizations(o)) == std::vector<std::size_t>{1, 1, 2, 9});
    o.filters.bipartite_only = false;
    CHECK(per_order(enumerate_crystallizations(o)) == std::vector<std::size_t>{1, 1, 2, 10});
    o.filters.rigid_only = true;
    CHECK(per_order(enumerate_crystallizations(o)) == std::vector<std::size_t>{1, 0, 0, 1});
}

TEST_CASE("enumeration output is valid, filtered, unique and deterministic") {
    EnumerationOptions o = up_to(8);
    o.filters.bipartite_only = true;
    o.filters.manifold_only = true;
    const auto serial = enumerate_crystallizations(o);
    std::set<CanonicalCode> codes;
    for (const ColouredGraph& g : serial) {
        CHECK(is_bipartite(g));
        CHECK(is_manifold_gem(g));
        CHECK(is_contracted(g));
        CHECK(codes.insert(canonical_code(g, CodeMode::ColourPermutable)).second);
    }
    o.jobs = 4;
    CHECK(enumerate_crystallizations(o) == serial);
    std::vector<ColouredGraph> streamed;
    enumerate_crystallizations(o, [&](const ColouredGraph& g) { streamed.push_back(g); });
    CHECK(streamed == serial);

    EnumerationOptions all4 = up_to(8);
    all4.jobs = 4;
    CHECK(enumerate_crystallizations(all4) == testing_support::census8());
}

TEST_CASE("rank-one H1 first appears at order 8") {
    std::size_t found = 0;
    for (const ColouredGraph& g : testing_support::bipartite_manifold_census8())
        if (homology_h1(g).free_rank == 1) {
            CHECK(g.order() == 8);
            ++found;
        }
    CHECK(found == 1);
}

TEST_CASE("computed invariants") {
    const ComputedInvariants s3 = compute_invariants(sphere_gem());
    CHECK(s3.bipartite);
    CHECK(s3.contracted);
    CHECK(s3.manifold);
    CHECK(s3.rigid);
    CHECK(s3.gm == 0);
    CHECK(s3.k_bound == 0);
    CHECK(s3.genus_min == 0);
    CHECK(s3.h1->trivial());
    for (const ColouredGraph& g : testing_support::census8()) {
        const ComputedInvariants ci = compute_invariants(g);
        CHECK(ci.residue_counts == residue_counts(g));
        CHECK(ci.rigid == is_rigid(g));
        CHECK(ci.h1.has_value() == ci.manifold);
        if (ci.gm) CHECK(*ci.gm == gm_complexity(g).value);
        CHECK(ci.gm.has_value() == (ci.bipartite && ci.manifold));
    }
}

TEST_CASE("batch classification") {
    std::vector<ParsedEntry> input;
    for (const NamedGem& n : standard_gems()) {
        ParsedEntry p;
        p.id = n.name;
        p.entry = CatalogueEntry{n.name, n.graph, n.name, std::nullopt, {}, std::nullopt};
        input.push_back(p);
    }
    input[0].entry->known_complexity = 0;
    const BatchReport clean = classify_batch(input, {});
    REQUIRE(clean.rows.size() == 4);
    for (const ReportRow& r : clean.rows) {
        CHECK(r.error.empty());
        CHECK(r.gm);
        CHECK(r.h1);
        CHECK(r.k_bound);
    }
    CHECK(clean.rows[0].gm == 0);
    CHECK(clean.rows[0].prop1_ok == true);
    CHECK(clean.rows[0].conjecture_ok == true);
    CHECK_FALSE(clean.rows[1].prop1_ok);
    CHECK(clean.groups.size() == 4);

    const auto bad = read_jsonl(std::string(R"({"id":"s3","order":2,"matchings":[[1,0],[1,0],[1,0],[1,0]]})") + "\n" +
                                R"({"id":"broken","order":2,"matchings":[[0,1],[1,0],[1,0],[1,0]]})" + "\n");
    const BatchReport mixed = classify_batch(bad, {GroupBy::Signature, 2});
    REQUIRE(mixed.rows.size() == 2);
    CHECK(mixed.rows[0].error.empty());
    CHECK(mixed.rows[1].id == "broken");
    CHECK_FALSE(mixed.rows[1].error.empty());
    CHECK_FALSE(mixed.rows[1].gm);

    const std::string csv = report_csv(mixed);
    CHECK(csv.rfind(std::string(kReportHeader) + "\n", 0) == 0);
    CHECK(csv.find("s3,2,true,true,1,1,1,1,1,1,0,0,0,0,,,\n") != std::string::npos);
    CHECK(groups_csv(mixed).find("H1=0;genus=0;bipartite=1,0,s3,2,true,1,") != std::string::npos);
}
