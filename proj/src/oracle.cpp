// SPDX-License-Identifier: Apache-2.0
#include "graphlet/oracle.hpp"

#include <algorithm>

namespace graphlet {

int classify_three(const Graph& g, vid_t a, vid_t b, vid_t c) {
    int edges = (int)g.has_edge(a, b) + g.has_edge(a, c) + g.has_edge(b, c);
    switch (edges) {
    case 3: return 3;  // triangle
    case 2: return 4;  // 2-star
    case 1: return 5;  // one edge + isolated vertex
    default: return 6; // independent triple
    }
}

int classify_four(const Graph& g, const std::array<vid_t, 4>& q) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (q[i] == q[j]) throw std::invalid_argument("duplicate vertex in quad");

    std::array<int, 4> deg{};
    int edges = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (g.has_edge(q[i], q[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
            }
    std::sort(deg.begin(), deg.end());

    switch (edges) {
    case 0: return 17;
    case 1: return 16;
    case 2: return deg == std::array<int, 4>{1, 1, 1, 1} ? 14 : 15;
    case 3:
        if (deg == std::array<int, 4>{0, 2, 2, 2}) return 13; // triangle + isolated
        if (deg == std::array<int, 4>{1, 1, 1, 3}) return 11; // 3-star
        return 12;                                            // 4-path
    case 4: return deg == std::array<int, 4>{2, 2, 2, 2} ? 10 : 9;
    case 5: return 8;
    default: return 7;
    }
}

CensusVector brute_force_global(const Graph& g, std::uint32_t cap) {
    if (g.num_vertices() > cap)
        throw oracle_cap_error("brute-force census capped at " + std::to_string(cap) +
                               " vertices, graph has " + std::to_string(g.num_vertices()));
    const vid_t n = (vid_t)g.num_vertices();
    CensusVector census;
    for (vid_t a = 0; a < n; ++a)
        for (vid_t b = a + 1; b < n; ++b)
            census.X(g.has_edge(a, b) ? 1 : 2) += 1;
    for (vid_t a = 0; a < n; ++a)
        for (vid_t b = a + 1; b < n; ++b)
            for (vid_t c = b + 1; c < n; ++c)
                census.X(classify_three(g, a, b, c)) += 1;
    for (vid_t a = 0; a < n; ++a)
        for (vid_t b = a + 1; b < n; ++b)
            for (vid_t c = b + 1; c < n; ++c)
                for (vid_t d = c + 1; d < n; ++d)
                    census.X(classify_four(g, {a, b, c, d})) += 1;
    return census;
}

EdgeBruteCounts brute_force_edge(const Graph& g, const OrientedEdge& e) {
    EdgeBruteCounts out;
    std::vector<vid_t> tri, su, sv;
    for (vid_t w : g.neighbors_by_id(e.u)) {
        if (w == e.v) continue;
        (g.has_edge(w, e.v) ? tri : su).push_back(w);
    }
    for (vid_t w : g.neighbors_by_id(e.v)) {
        if (w == e.u) continue;
        if (!g.has_edge(w, e.u)) sv.push_back(w);
    }
    out.t = tri.size();
    out.x3 = tri.size();
    out.s_u = su.size();
    out.s_v = sv.size();
    for (std::size_t i = 0; i < tri.size(); ++i)
        for (std::size_t j = i + 1; j < tri.size(); ++j)
            if (g.has_edge(tri[i], tri[j])) ++out.x7;
    for (vid_t w : su)
        for (vid_t r : sv)
            if (g.has_edge(w, r)) ++out.x10;
    return out;
}

} // namespace graphlet
