// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphlet/counts.hpp"
#include "graphlet/graph.hpp"

namespace graphlet {

// Per-worker mark table of length n. Edge k uses the marks 3k+1 (neighbor
// of v), 3k+2 (2-star at u) and 3k+3 (triangle). Marks are unique per edge,
// so the table never needs a reset between edges: anything left over from a
// previous edge can never alias the current marks.
struct StampTable {
    explicit StampTable(std::size_t n) : marks(n, 0) {}
    std::vector<std::uint64_t> marks;

    static std::uint64_t lambda1(eid_t k) { return 3ull * k + 1; }
    static std::uint64_t lambda2(eid_t k) { return 3ull * k + 2; }
    static std::uint64_t lambda3(eid_t k) { return 3ull * k + 3; }
};

// Reusable scratch for one edge neighborhood. tri and s_u never exceed
// deg(u)-1 entries combined, s_v never exceeds deg(v), so reserving
// max_degree once keeps a worker's footprint at O(d_max) past the table.
struct NeighborhoodSets {
    std::vector<vid_t> tri; // vertices completing a triangle, degree-descending
    std::vector<vid_t> s_u; // adjacent to u but not v (excluding v), same order
    std::vector<vid_t> s_v; // adjacent to v but not u (excluding u), same order

    void reserve(std::size_t d_max) {
        tri.reserve(d_max);
        s_u.reserve(d_max);
        s_v.reserve(d_max);
    }
    void clear() {
        tri.clear();
        s_u.clear();
        s_v.clear();
    }
};

// 3-graphlet kernel, mark-table variant: marks N(v)\{u} with lambda1, then
// classifies each w in N(u)\{v} as triangle (lambda3) or 2-star (lambda2) by
// an O(1) mark probe. On exit T holds lambda3, S_u holds lambda2 and the
// remaining lambda1 marks sit exactly on S_v - the later kernels rely on all
// three. Returns x3 = |T|. O(deg(v) + deg(u)) time, O(n) table.
std::uint32_t three_graphlets_hash(const Graph& g, StampTable& psi, const OrientedEdge& e,
                                   NeighborhoodSets& sets, std::uint64_t& work);

// Same outputs with no table: each w in N(u)\{v} is tested for adjacency to
// v by binary search, O(log deg(w)) per neighbor. The memory-light variant
// for workers that cannot afford an O(n) table each.
std::uint32_t three_graphlets_bsearch(const Graph& g, const OrientedEdge& e,
                                      NeighborhoodSets& sets, std::uint64_t& work);

// Fills sets.s_v = N(v) \ (T u {u}) by merging the degree-ordered N(v)
// against T. |S_v| = deg(v) - |T| - 1.
void derive_s_v(const Graph& g, const OrientedEdge& e, NeighborhoodSets& sets,
                std::uint64_t& work);

// Clique count over T: adjacent unordered pairs. T is degree-descending, so
// for i<j the pair is tested by binary search in the later (smaller-degree)
// vertex's list. The [begin,end) overload restricts the leading index and is
// the unit of fine-grained task splitting: partial results over disjoint
// leading ranges sum to the full count.
std::uint64_t clique_res(const Graph& g, std::span<const vid_t> tri, std::uint64_t& work);
std::uint64_t clique_res_range(const Graph& g, std::span<const vid_t> tri,
                               std::size_t begin, std::size_t end, std::uint64_t& work);

// Cycle count: edges between S_u and S_v, each tested by binary search in
// N(w) for w in S_u. Range overload restricts the S_u index for splitting.
std::uint64_t cycle_res(const Graph& g, std::span<const vid_t> s_u,
                        std::span<const vid_t> s_v, std::uint64_t& work);
std::uint64_t cycle_res_range(const Graph& g, std::span<const vid_t> s_u,
                              std::size_t begin, std::size_t end,
                              std::span<const vid_t> s_v, std::uint64_t& work);

// Clique count via neighbor iteration: for each w in T count neighbors still
// marked lambda3, clearing w's mark afterwards so each pair is seen once.
// Requires the marks left by three_graphlets_hash for the same edge.
std::uint64_t clique_hash(const Graph& g, StampTable& psi, std::span<const vid_t> tri,
                          const OrientedEdge& e, std::uint64_t& work);

// Cycle count via neighbor iteration over S_u (the smaller of the two star
// sets). A neighbor r closes a 4-cycle iff r is in S_v, and S_v members are
// precisely the vertices still marked lambda1: they were marked as neighbors
// of v and never upgraded to lambda3. S_u marks are cleared on the way out.
// Requires the lambda1 marks to be intact, i.e. run after clique_hash, whose
// resets only touch T.
std::uint64_t cycle_hash(const Graph& g, StampTable& psi, std::span<const vid_t> s_u,
                         const OrientedEdge& e, std::uint64_t& work);

// Full per-edge pipelines producing the motif record (t, s_u, s_v, x7, x10,
// work). The two variants give identical records for every edge.
EdgeMotifRecord process_edge_hash(const Graph& g, StampTable& psi, const OrientedEdge& e,
                                  NeighborhoodSets& sets);
EdgeMotifRecord process_edge_bsearch(const Graph& g, const OrientedEdge& e,
                                     NeighborhoodSets& sets);

} // namespace graphlet
