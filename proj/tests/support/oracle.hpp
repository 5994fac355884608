#pragma once

#include <map>
#include <set>
#include <vector>

#include "archslice/sadg.hpp"
#include "archslice/slice.hpp"

// Brute-force reachability oracle: builds the full transitive closure of the
// arc relation with the Floyd-Warshall scheme and reads slices off the
// closed matrix. Deliberately shares no traversal code with the slicer.
namespace testoracle {

using namespace archslice;

inline std::set<Vertex> closure_reachable(const Sadg& g,
                                          const std::set<Vertex>& seeds,
                                          SliceDirection direction) {
    std::vector<Vertex> order(g.vertices.begin(), g.vertices.end());
    std::map<Vertex, std::size_t> index;
    for (std::size_t i = 0; i < order.size(); ++i)
        index[order[i]] = i;

    std::size_t n = order.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (const DependenceArc& arc : g.arcs) {
        std::size_t a = index.at(arc.from);
        std::size_t b = index.at(arc.to);
        if (direction == SliceDirection::Backward)
            reach[a][b] = true;
        else
            reach[b][a] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j])
                        reach[i][j] = true;

    std::set<Vertex> result = seeds;
    for (const Vertex& seed : seeds) {
        std::size_t s = index.at(seed);
        for (std::size_t j = 0; j < n; ++j)
            if (reach[s][j])
                result.insert(order[j]);
    }
    return result;
}

} // namespace testoracle
