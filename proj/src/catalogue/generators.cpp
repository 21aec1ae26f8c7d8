#include "gemc/generators.hpp"

#include <numeric>

#include "gemc/error.hpp"

namespace gemc {

ColouredGraph lens_gem(int p, int q) {
    if (p < 2 || q < 1 || q >= p || std::gcd(p, q) != 1)
        throw ParameterError("lens_gem needs p >= 2, 1 <= q < p, gcd(p,q) = 1; got (" + std::to_string(p) + "," +
                             std::to_string(q) + ")");
    const int len = 2 * p;  // crossings on each meridian
    const auto n = static_cast<std::size_t>(2 * len);
    // crossing j on meridian a
    auto vertex = [len](int a, int j) { return static_cast<Vertex>(a * len + ((j % len) + len) % len); };

    std::array<ColouredGraph::Matching, kColourCount> m;
    for (auto& mc : m) mc.assign(n, -1);
    auto join = [&m](Colour c, Vertex u, Vertex v) {
        m[static_cast<std::size_t>(c)][static_cast<std::size_t>(u)] = v;
        m[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = u;
    };
    for (int j = 0; j < len; ++j) {
        // the second meridian is shifted by q so that every face is bicoloured
        join(j % 2 == 0 ? 0 : 1, vertex(0, j), vertex(0, j + 1));
        join((j + q) % 2 == 0 ? 0 : 1, vertex(1, j), vertex(1, j + 1));
        join(2, vertex(0, j), vertex(1, j + q));
        join(3, vertex(1, j), vertex(0, j + q));
    }
    return build_graph(n, std::move(m));
}

std::vector<NamedGem> standard_gems() {
    std::vector<NamedGem> out;
    out.push_back({"S3", sphere_gem()});
    out.push_back({"S2xS1", ColouredGraph({{
                                 {1, 0, 4, 6, 2, 7, 3, 5},
                                 {1, 0, 6, 5, 7, 3, 2, 4},
                                 {2, 4, 0, 5, 1, 3, 7, 6},
                                 {3, 5, 4, 0, 2, 1, 7, 6},
                             }})});
    out.push_back({"L(2,1)", lens_gem(2, 1)});
    out.push_back({"L(3,1)", lens_gem(3, 1)});
    return out;
}

}  // namespace gemc
