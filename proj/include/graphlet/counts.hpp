// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "graphlet/common.hpp"

namespace graphlet {

// Raised when the closed-form inversion hits an inexact division or a
// negative intermediate, which can only mean the accumulation is broken.
class count_consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Per-edge motif summary: triangle set size t, exclusive-star sizes s_u/s_v,
// clique count x7, cycle count x10, and a deterministic operation counter.
// Invariants: s_u = deg(u)-t-1, s_v = deg(v)-t-1, x7 <= C(t,2), x10 <= s_u*s_v.
struct EdgeMotifRecord {
    eid_t edge_id = 0;
    std::uint32_t t = 0;
    std::uint32_t s_u = 0;
    std::uint32_t s_v = 0;
    std::uint64_t x7 = 0;
    std::uint64_t x10 = 0;
    std::uint64_t work_units = 0;

    std::uint32_t x3() const { return t; }
    // Vertices adjacent to neither endpoint.
    std::uint64_t disconnected(std::uint64_t n) const {
        return n - ((std::uint64_t)s_u + s_v + t) - 2;
    }
};

// Unrestricted per-edge pattern tallies summed over edges. Each component is
// a plain sum of nonnegative terms, so partials from different workers merge
// by componentwise addition. C6 is never needed: X6 falls out of X3..X5.
struct UnrestrictedCounts {
    count_t c3 = 0, c4 = 0, c5 = 0;
    count_t c7 = 0, c8 = 0, c9 = 0, c10 = 0, c11 = 0, c12 = 0;
    count_t c13 = 0, c14 = 0, c15 = 0, c16 = 0;

    bool operator==(const UnrestrictedCounts&) const = default;
};

void accumulate_unrestricted(UnrestrictedCounts& acc, const EdgeMotifRecord& rec,
                             std::uint64_t n, std::uint64_t m);
UnrestrictedCounts merge(const UnrestrictedCounts& a, const UnrestrictedCounts& b);

// Global counts X1..X17 over all 2/3/4-vertex induced subgraph classes,
// connected and disconnected. Index 0 is unused so X(i) matches the class id.
struct GraphletVector {
    std::array<count_t, 18> x{};

    count_t& X(int i) { return x[i]; }
    count_t X(int i) const { return x[i]; }
    bool operator==(const GraphletVector&) const = default;
};

// Class ids to readable names ("triangle", "4-cycle", ...).
const char* graphlet_name(int i);

// Inverts the unrestricted sums into exact global counts. Every division
// must be exact and every subtraction nonnegative; anything else throws
// count_consistency_error.
GraphletVector global_from_unrestricted(const UnrestrictedCounts& c,
                                        std::uint64_t n, std::uint64_t m);

struct LocalThree {
    std::uint64_t x3 = 0; // triangles at the edge
    std::uint64_t x4 = 0; // 2-stars at the edge: s_u + s_v
    std::uint64_t x5 = 0; // vertices adjacent to neither endpoint
};
// Throws std::invalid_argument when n < 2 (no valid edge context).
LocalThree local_three_counts(const EdgeMotifRecord& rec, std::uint64_t n);

// Micro (per-edge) record as emitted to users. No per-edge x6: an
// independent triple contains no edge to anchor it to.
struct MicroRecord {
    eid_t edge_id = 0;
    std::uint64_t x3 = 0, x4 = 0, x5 = 0;
    std::uint64_t x7 = 0, x10 = 0;
    std::uint64_t t = 0, s_u = 0, s_v = 0, d_e = 0;

    bool operator==(const MicroRecord&) const = default;
};
MicroRecord micro_counts(const EdgeMotifRecord& rec, std::uint64_t n);

} // namespace graphlet
