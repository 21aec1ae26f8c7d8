#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "census.hpp"
#include "gemc/canonical.hpp"
#include "gemc/error.hpp"
#include "gemc/generators.hpp"
#include "gemc/gm.hpp"
#include "oracles.hpp"

using namespace gemc;

namespace {

std::vector<ColouredGraph> lens_family(int max_p) {
    std::vector<ColouredGraph> out;
    for (int p = 2; p <= max_p; ++p)
        for (int q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) out.push_back(lens_gem(p, q));
    return out;
}

CatalogueEntry entry(std::string id, ColouredGraph g, std::optional<std::string> name = std::nullopt,
                     std::optional<int> known = std::nullopt) {
    CatalogueEntry e;
    e.id = std::move(id);
    e.graph = std::move(g);
    e.name = std::move(name);
    e.known_complexity = known;
    return e;
}

}  // namespace

TEST_CASE("order-2 gem has GM-complexity 0") {
    const GMReport r = gm_complexity(sphere_gem());
    CHECK(r.value == 0);
    CHECK(r.witness.partition == 0);
    CHECK(r.witness.d_index == 0);
    CHECK(r.witness.d_prime_index == 0);
    CHECK(r.witness_region.vertex_set == std::vector<Vertex>{0, 1});
    const auto rs = regions(sphere_gem(), PartitionChoice(0), 0, 0);
    CHECK(gm_bar(sphere_gem(), PartitionChoice(0), 0, 0, rs.front()) == 0);
    CHECK(gm_complexity(connected_sum(sphere_gem(), 0, sphere_gem(), 1)).value == 0);
}

TEST_CASE("gm agrees with the straight-line reference") {
    for (const ColouredGraph& g : testing_support::bipartite_manifold_census8())
        CHECK(gm_complexity(g).value == oracle::reference_gm(g));
    for (const ColouredGraph& g : lens_family(5)) CHECK(gm_complexity(g).value == oracle::reference_gm(g));
}

TEST_CASE("report invariants") {
    std::vector<ColouredGraph> sample = testing_support::bipartite_manifold_census8();
    for (const ColouredGraph& g : lens_family(4)) sample.push_back(g);
    for (const ColouredGraph& g : sample) {
        GmOptions o;
        o.keep_table = true;
        const GMReport r = gm_complexity(g, o);
        REQUIRE(r.table);
        int minimum = static_cast<int>(g.order());
        for (const GmChoice& c : *r.table) minimum = std::min(minimum, c.value);
        CHECK(r.value == minimum);
        CHECK(r.value >= 0);
        CHECK(r.value <= static_cast<int>(g.order()) - 2);
        CHECK(std::is_sorted(r.table->begin(), r.table->end(),
                             [](const GmChoice& a, const GmChoice& b) { return a.tie_key() < b.tie_key(); }));
        // the witness is the first minimal row
        for (const GmChoice& c : *r.table)
            if (c.value == r.value) {
                CHECK(c == r.witness);
                break;
            }
        CHECK(r.witness_region.key() == r.witness.region_key);
        CHECK(gm_bar(g, PartitionChoice(r.witness.partition), r.witness.d_index, r.witness.d_prime_index,
                     r.witness_region) == r.value);

        // every row against an independent set-union recount
        for (const GmChoice& c : *r.table) {
            const PartitionChoice p(c.partition);
            const auto e = p.epsilon();
            std::set<Vertex> all;
            const auto ds = oracle::bicoloured_cycles(g, e[0], e[1]);
            const auto dps = oracle::bicoloured_cycles(g, e[2], e[3]);
            all.insert(ds[c.d_index].begin(), ds[c.d_index].end());
            all.insert(dps[c.d_prime_index].begin(), dps[c.d_prime_index].end());
            for (const Region& reg : regions(g, p, c.d_index, c.d_prime_index))
                if (reg.key() == c.region_key) all.insert(reg.vertex_set.begin(), reg.vertex_set.end());
            CHECK(c.value == static_cast<int>(g.order() - all.size()));
        }
    }
}

TEST_CASE("gm is independent of labelling and job count") {
    std::mt19937 rng(9);
    std::vector<ColouredGraph> sample = testing_support::bipartite_manifold_census8();
    for (const ColouredGraph& g : lens_family(5)) sample.push_back(g);
    for (const ColouredGraph& g : sample) {
        const GMReport one = gm_complexity(g);
        GmOptions four;
        four.jobs = 4;
        four.keep_table = true;
        const GMReport par = gm_complexity(g, four);
        CHECK(par.value == one.value);
        CHECK(par.witness == one.witness);
        CHECK(gm_complexity(oracle::random_relabel(g, rng, true)).value == one.value);
    }
}

TEST_CASE("gm_bar rejects regions from another choice") {
    const ColouredGraph g = lens_gem(3, 1);
    const auto rs = regions(g, PartitionChoice(1), 0, 1);
    CHECK_THROWS_AS(gm_bar(g, PartitionChoice(1), 0, 0, rs.front()), ChoiceMismatchError);
    CHECK_THROWS_AS(gm_bar(g, PartitionChoice(0), 0, 1, rs.front()), ChoiceMismatchError);
    CHECK_NOTHROW(gm_bar(g, PartitionChoice(1), 0, 1, rs.front()));
}

TEST_CASE("gm needs a bipartite crystallization") {
    for (const ColouredGraph& g : testing_support::census8())
        if (!is_bipartite(g)) {
            CHECK_THROWS_AS(gm_complexity(g), NonBipartiteError);
            break;
        }
    const ColouredGraph split = testing_support::graph({{1, 0, 3, 2}, {1, 0, 3, 2}, {1, 0, 3, 2}, {2, 3, 0, 1}});
    REQUIRE(is_bipartite(split));
    CHECK_THROWS_AS(gm_complexity(split), NotContractedError);
}

TEST_CASE("catalogue bounds") {
    std::vector<CatalogueEntry> entries;
    const auto& census = testing_support::bipartite_manifold_census8();
    for (std::size_t i = 0; i < census.size(); ++i) entries.push_back(entry("c" + std::to_string(i), census[i]));

    const auto bounds = gm_min_over(entries, GroupBy::Signature);
    std::size_t members = 0;
    for (const CatalogueBound& b : bounds) {
        members += b.members;
        for (const CatalogueEntry& e : entries)
            if (group_key(e, GroupBy::Signature) == b.manifold_key) CHECK(b.best_value <= gm_complexity(e.graph).value);
    }
    CHECK(members == entries.size());
    const auto sphere = std::find_if(bounds.begin(), bounds.end(), [](const CatalogueBound& b) {
        return b.manifold_key == "H1=0;genus=0;bipartite=1";
    });
    REQUIRE(sphere != bounds.end());
    CHECK(sphere->best_value == 0);
    CHECK(sphere->best_order == 2);
    CHECK(sphere->minimal_order_flag);
    CHECK(sphere->best_graph == canonical_code(sphere_gem(), CodeMode::ColourPermutable));

    // single-entry group
    const std::vector<CatalogueEntry> one{entry("l", lens_gem(5, 2), "L(5,2)")};
    const auto b = gm_min_over(one, GroupBy::Name);
    REQUIRE(b.size() == 1);
    CHECK(b[0].manifold_key == "L(5,2)");
    CHECK(b[0].best_value == gm_complexity(lens_gem(5, 2)).value);

    // adding entries never raises a bound
    std::vector<CatalogueEntry> growing;
    int previous = 1 << 30;
    for (const CatalogueEntry& e : entries) {
        growing.push_back(e);
        growing.back().name = "all";
        const auto now = gm_min_over(growing, GroupBy::Name);
        REQUIRE(now.size() == 1);
        CHECK(now[0].best_value <= previous);
        previous = now[0].best_value;
    }

    // failing entries are reported, not fatal
    std::vector<CatalogueEntry> mixed = one;
    for (const ColouredGraph& g : testing_support::census8())
        if (!is_bipartite(g) && is_manifold_gem(g)) {
            mixed.push_back(entry("bad", g));
            break;
        }
    std::vector<EntryFailure> failures;
    const auto partial = gm_min_over(mixed, GroupBy::Signature, &failures);
    CHECK(partial.size() == 1);
    REQUIRE(failures.size() == 1);
    CHECK(failures[0].id == "bad");
}

TEST_CASE("lower bound check against known complexity") {
    CHECK(check_prop1(entry("s3", sphere_gem(), "S3", 0)));
    CHECK(check_prop1(entry("l21", lens_gem(2, 1), "L(2,1)", 0)));
    CHECK_FALSE(check_prop1(5, 3));
    CHECK(check_prop1(3, 3));
    CHECK_THROWS_AS(check_prop1(entry("x", sphere_gem())), MissingAnnotationError);
    CHECK_THROWS_AS(check_prop1(std::nullopt, 2), MissingAnnotationError);
}

TEST_CASE("subadditivity report") {
    const ColouredGraph s3 = sphere_gem();
    const auto pairs = admissible_sum_pairs(s3, s3);
    REQUIRE(pairs.size() == 2);
    const SubadditivityReport r = check_subadditivity(s3, s3, pairs);
    CHECK(r.violations == 0);
    for (const auto& s : r.samples) CHECK(s.gm_sum == 0);

    for (const ColouredGraph& g : testing_support::bipartite_manifold_census8()) {
        const auto all = admissible_sum_pairs(g, s3);
        CHECK(all.size() == g.order());
        const SubadditivityReport with_sphere = check_subadditivity(g, s3, all);
        CHECK(with_sphere.gm_second == 0);
        CHECK(with_sphere.violations == 0);
    }

    // two genus-1 gems: every admissible pair is evaluated and recorded
    const ColouredGraph l21 = lens_gem(2, 1);
    const auto both = admissible_sum_pairs(l21, l21);
    CHECK(both.size() == 32);
    const SubadditivityReport r2 = check_subadditivity(l21, l21, both, 2);
    CHECK(r2.samples.size() == both.size());
    std::size_t violations = 0;
    for (const auto& s : r2.samples) violations += !s.holds;
    CHECK(violations == r2.violations);
}
