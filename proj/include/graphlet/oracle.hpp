// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "graphlet/counts.hpp"
#include "graphlet/graph.hpp"

namespace graphlet {

// Exhaustive subset census used as ground truth in tests and `verify`.
// Deliberately naive and single-threaded; refuses graphs beyond the cap.

using CensusVector = GraphletVector;

class oracle_cap_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Classifies the induced subgraph on four distinct vertices into class 7..17
// by (edge count, sorted degree sequence). Every 4-vertex graph class is
// uniquely determined by that pair. Throws on duplicate vertices.
int classify_four(const Graph& g, const std::array<vid_t, 4>& quad);

// Same for three vertices: classes 3..6 by induced edge count.
int classify_three(const Graph& g, vid_t a, vid_t b, vid_t c);

// Enumerates all C(n,2), C(n,3), C(n,4) vertex subsets. Throws
// oracle_cap_error when n exceeds the cap.
CensusVector brute_force_global(const Graph& g, std::uint32_t cap = 64);

struct EdgeBruteCounts {
    std::uint64_t x3 = 0, x7 = 0, x10 = 0;
    std::uint64_t t = 0, s_u = 0, s_v = 0;

    bool operator==(const EdgeBruteCounts&) const = default;
};
// Direct set arithmetic over N(u) and N(v) plus pair enumeration.
EdgeBruteCounts brute_force_edge(const Graph& g, const OrientedEdge& e);

} // namespace graphlet
