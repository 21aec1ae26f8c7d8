#include "census.hpp"

#include "gemc/enumerate.hpp"

namespace testing_support {

const std::vector<gemc::ColouredGraph>& census8() {
    static const std::vector<gemc::ColouredGraph> all = [] {
        gemc::EnumerationOptions o;
        o.max_order = 8;
        return gemc::enumerate_crystallizations(o);
    }();
    return all;
}

const std::vector<gemc::ColouredGraph>& bipartite_manifold_census8() {
    static const std::vector<gemc::ColouredGraph> some = [] {
        std::vector<gemc::ColouredGraph> out;
        for (const auto& g : census8())
            if (gemc::is_bipartite(g) && gemc::is_manifold_gem(g)) out.push_back(g);
        return out;
    }();
    return some;
}

gemc::ColouredGraph graph(std::vector<std::vector<gemc::Vertex>> matchings) {
    const std::size_t order = matchings.at(0).size();
    return gemc::build_graph(order,
                             {std::move(matchings[0]), std::move(matchings[1]), std::move(matchings[2]),
                              std::move(matchings[3])});
}

}  // namespace testing_support
