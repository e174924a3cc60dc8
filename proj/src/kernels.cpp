// SPDX-License-Identifier: Apache-2.0
#include "graphlet/kernels.hpp"

namespace graphlet {

namespace {

// Membership test over an ascending-id neighbor span, counting probes so the
// per-edge work counters are exact and reproducible.
inline bool bsearch_has(std::span<const vid_t> sorted, vid_t x, std::uint64_t& work) {
    std::size_t lo = 0, hi = sorted.size();
    while (lo < hi) {
        ++work;
        std::size_t mid = lo + (hi - lo) / 2;
        if (sorted[mid] < x)
            lo = mid + 1;
        else if (sorted[mid] > x)
            hi = mid;
        else
            return true;
    }
    return false;
}

} // namespace

std::uint32_t three_graphlets_hash(const Graph& g, StampTable& psi, const OrientedEdge& e,
                                   NeighborhoodSets& sets, std::uint64_t& work) {
    sets.tri.clear();
    sets.s_u.clear();
    const std::uint64_t l1 = StampTable::lambda1(e.id);
    for (vid_t w : g.neighbors(e.v)) {
        ++work;
        if (w != e.u) psi.marks[w] = l1;
    }
    const std::uint64_t l2 = StampTable::lambda2(e.id);
    const std::uint64_t l3 = StampTable::lambda3(e.id);
    for (vid_t w : g.neighbors(e.u)) {
        ++work;
        if (w == e.v) continue;
        if (psi.marks[w] == l1) {
            psi.marks[w] = l3;
            sets.tri.push_back(w);
        } else {
            psi.marks[w] = l2;
            sets.s_u.push_back(w);
        }
    }
    return (std::uint32_t)sets.tri.size();
}

std::uint32_t three_graphlets_bsearch(const Graph& g, const OrientedEdge& e,
                                      NeighborhoodSets& sets, std::uint64_t& work) {
    sets.tri.clear();
    sets.s_u.clear();
    for (vid_t w : g.neighbors(e.u)) {
        ++work;
        if (w == e.v) continue;
        if (bsearch_has(g.neighbors_by_id(w), e.v, work))
            sets.tri.push_back(w);
        else
            sets.s_u.push_back(w);
    }
    return (std::uint32_t)sets.tri.size();
}

void derive_s_v(const Graph& g, const OrientedEdge& e, NeighborhoodSets& sets,
                std::uint64_t& work) {
    sets.s_v.clear();
    auto nv = g.neighbors(e.v);
    std::size_t ti = 0;
    // N(v) and T are sorted by the same degree-descending order, so skipping
    // T (and u) is a single merge pass.
    for (vid_t w : nv) {
        ++work;
        if (w == e.u) continue;
        if (ti < sets.tri.size() && sets.tri[ti] == w) {
            ++ti;
            continue;
        }
        sets.s_v.push_back(w);
    }
}

std::uint64_t clique_res_range(const Graph& g, std::span<const vid_t> tri,
                               std::size_t begin, std::size_t end, std::uint64_t& work) {
    std::uint64_t cliques = 0;
    for (std::size_t i = begin; i < end; ++i)
        for (std::size_t j = i + 1; j < tri.size(); ++j)
            if (bsearch_has(g.neighbors_by_id(tri[j]), tri[i], work)) ++cliques;
    return cliques;
}

std::uint64_t clique_res(const Graph& g, std::span<const vid_t> tri, std::uint64_t& work) {
    return clique_res_range(g, tri, 0, tri.size(), work);
}

std::uint64_t cycle_res_range(const Graph& g, std::span<const vid_t> s_u,
                              std::size_t begin, std::size_t end,
                              std::span<const vid_t> s_v, std::uint64_t& work) {
    std::uint64_t cycles = 0;
    for (std::size_t i = begin; i < end; ++i) {
        auto nw = g.neighbors_by_id(s_u[i]);
        for (vid_t r : s_v)
            if (bsearch_has(nw, r, work)) ++cycles;
    }
    return cycles;
}

std::uint64_t cycle_res(const Graph& g, std::span<const vid_t> s_u,
                        std::span<const vid_t> s_v, std::uint64_t& work) {
    return cycle_res_range(g, s_u, 0, s_u.size(), s_v, work);
}

std::uint64_t clique_hash(const Graph& g, StampTable& psi, std::span<const vid_t> tri,
                          const OrientedEdge& e, std::uint64_t& work) {
    const std::uint64_t l3 = StampTable::lambda3(e.id);
    std::uint64_t cliques = 0;
    for (vid_t w : tri) {
        for (vid_t r : g.neighbors(w)) {
            ++work;
            if (psi.marks[r] == l3) ++cliques;
        }
        psi.marks[w] = 0; // processed: later T members no longer pair with w
    }
    return cliques;
}

std::uint64_t cycle_hash(const Graph& g, StampTable& psi, std::span<const vid_t> s_u,
                         const OrientedEdge& e, std::uint64_t& work) {
    const std::uint64_t l1 = StampTable::lambda1(e.id);
    std::uint64_t cycles = 0;
    for (vid_t w : s_u) {
        for (vid_t r : g.neighbors(w)) {
            ++work;
            if (psi.marks[r] == l1) ++cycles; // r in S_v
        }
        psi.marks[w] = 0;
    }
    return cycles;
}

EdgeMotifRecord process_edge_hash(const Graph& g, StampTable& psi, const OrientedEdge& e,
                                  NeighborhoodSets& sets) {
    EdgeMotifRecord rec;
    rec.edge_id = e.id;
    std::uint64_t work = 0;
    rec.t = three_graphlets_hash(g, psi, e, sets, work);
    rec.s_u = (std::uint32_t)sets.s_u.size();
    derive_s_v(g, e, sets, work);
    rec.s_v = (std::uint32_t)sets.s_v.size();
    rec.x7 = clique_hash(g, psi, sets.tri, e, work);
    rec.x10 = cycle_hash(g, psi, sets.s_u, e, work);
    rec.work_units = work;
    return rec;
}

EdgeMotifRecord process_edge_bsearch(const Graph& g, const OrientedEdge& e,
                                     NeighborhoodSets& sets) {
    EdgeMotifRecord rec;
    rec.edge_id = e.id;
    std::uint64_t work = 0;
    rec.t = three_graphlets_bsearch(g, e, sets, work);
    rec.s_u = (std::uint32_t)sets.s_u.size();
    derive_s_v(g, e, sets, work);
    rec.s_v = (std::uint32_t)sets.s_v.size();
    rec.x7 = clique_res(g, sets.tri, work);
    rec.x10 = cycle_res(g, sets.s_u, sets.s_v, work);
    rec.work_units = work;
    return rec;
}

} // namespace graphlet
