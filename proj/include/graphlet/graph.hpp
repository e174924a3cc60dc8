// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graphlet/common.hpp"

namespace graphlet {

// Edge pairs exactly as read from the input: may contain duplicates,
// self-loops and arbitrary label gaps. Self-loop endpoints still count as
// vertices even though the loop itself is dropped during build.
struct RawEdges {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
};

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Reads whitespace-separated integer pairs. Lines starting with '%' or '#'
// are comments; a "%%MatrixMarket" banner additionally causes the following
// dimension line to be skipped. Malformed tokens raise parse_error with the
// 1-based line number. An empty stream yields empty RawEdges.
RawEdges load_edge_list(std::istream& in);
RawEdges load_edge_list_file(const std::string& path);

/**
 * Immutable simple undirected graph, preprocessed for edge-centric search:
 *
 *  - vertices are relabeled so internal ids are sorted by non-decreasing
 *    degree (ties by ascending original label),
 *  - each neighbor list is kept in two views: degree-descending order
 *    (ties by ascending id) for iteration, and ascending-id order for
 *    O(log d) membership tests.
 *
 * Once built the graph is never mutated and is safe to share read-only
 * across any number of worker threads.
 */
class Graph {
public:
    Graph() = default;

    std::uint64_t num_vertices() const { return degree_.size(); }
    std::uint64_t num_edges() const { return m_; }
    std::uint32_t degree(vid_t v) const { return degree_[v]; }
    std::uint32_t max_degree() const { return d_max_; }

    // Neighbors of v ordered from largest to smallest degree (ties: ascending id).
    std::span<const vid_t> neighbors(vid_t v) const {
        return {adj_deg_.data() + offsets_[v], adj_deg_.data() + offsets_[v + 1]};
    }
    // Neighbors of v in ascending id order (binary-search view).
    std::span<const vid_t> neighbors_by_id(vid_t v) const {
        return {adj_id_.data() + offsets_[v], adj_id_.data() + offsets_[v + 1]};
    }

    bool has_edge(vid_t a, vid_t b) const;

    std::uint64_t original_label(vid_t v) const { return inverse_map_[v]; }
    // Internal id for an original label; throws std::out_of_range if unknown.
    vid_t internal_id(std::uint64_t label) const { return relabel_map_.at(label); }

    // Total order used inside neighbor lists: degree descending, ties by
    // ascending internal id.
    bool degree_order_less(vid_t a, vid_t b) const {
        return degree_[a] != degree_[b] ? degree_[a] > degree_[b] : a < b;
    }

private:
    friend Graph build_graph(const RawEdges& raw);

    std::uint64_t m_ = 0;
    std::uint32_t d_max_ = 0;
    std::vector<std::uint64_t> offsets_;
    std::vector<vid_t> adj_deg_;
    std::vector<vid_t> adj_id_;
    std::vector<std::uint32_t> degree_;
    std::vector<std::uint64_t> inverse_map_;
    std::unordered_map<std::uint64_t, vid_t> relabel_map_;
};

Graph build_graph(const RawEdges& raw);

// Undirected edge oriented so that v carries the larger degree. Degree
// relabeling makes this equivalent to v > u in internal-id order.
struct OrientedEdge {
    vid_t v = 0; // high-degree endpoint
    vid_t u = 0; // low-degree endpoint
    eid_t id = 0;
};

// One entry per undirected edge, ordered by ascending (v,u); ids are dense.
std::vector<OrientedEdge> orient_edges(const Graph& g);

// Sum of degrees over the edge neighborhood (N(u) u N(v)) \ {u,v}.
std::uint64_t edge_volume(const Graph& g, const OrientedEdge& e);

} // namespace graphlet
