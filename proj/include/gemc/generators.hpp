#pragma once

#include <string>
#include <vector>

#include "gemc/coloured_graph.hpp"

namespace gemc {

/// Order-4p bipartite crystallization of the lens space L(p,q), read off the
/// genus-one diagram made of two parallel meridians and two parallel
/// (p,q)-curves on the torus: vertices are the 4p crossings, meridian arcs
/// alternate colours 0/1 and the other arcs colours 2/3. Requires p >= 2,
/// 1 <= q < p and gcd(p,q) = 1; throws ParameterError otherwise.
ColouredGraph lens_gem(int p, int q);

struct NamedGem {
    std::string name;
    ColouredGraph graph;
};

/// "S3" (order 2), "S2xS1" (order 8), "L(2,1)" and "L(3,1)".
std::vector<NamedGem> standard_gems();

}  // namespace gemc
