// SPDX-License-Identifier: Apache-2.0
#include "graphlet/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

namespace graphlet {

std::string to_decimal(count_t v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(char('0' + (unsigned)(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

count_t from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty decimal string");
    count_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad decimal digit");
        count_t next = v * 10 + (unsigned)(c - '0');
        if (next / 10 != v) throw count_overflow_error("decimal exceeds 128 bits");
        v = next;
    }
    return v;
}

namespace {

bool parse_u64(std::string_view tok, std::uint64_t& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

} // namespace

RawEdges load_edge_list(std::istream& in) {
    RawEdges raw;
    std::string line;
    std::size_t line_no = 0;
    bool skip_dimension_line = false;
    std::vector<std::string_view> toks;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        if (line[start] == '%') {
            if (line.compare(start, 14, "%%MatrixMarket") == 0) skip_dimension_line = true;
            continue;
        }
        if (skip_dimension_line) {
            // Matrix Market dimension line ("rows cols nnz"); content unused,
            // vertices are taken from the entries themselves.
            skip_dimension_line = false;
            continue;
        }
        toks.clear();
        std::size_t pos = start;
        while (pos < line.size()) {
            std::size_t end = line.find_first_of(" \t\r", pos);
            if (end == std::string::npos) end = line.size();
            if (end > pos) toks.emplace_back(line.data() + pos, end - pos);
            pos = line.find_first_not_of(" \t\r", end);
            if (pos == std::string::npos) break;
        }
        if (toks.size() != 2)
            throw parse_error(line_no, "expected two integer tokens, got " + std::to_string(toks.size()));
        std::uint64_t a = 0, b = 0;
        if (!parse_u64(toks[0], a)) throw parse_error(line_no, "malformed token '" + std::string(toks[0]) + "'");
        if (!parse_u64(toks[1], b)) throw parse_error(line_no, "malformed token '" + std::string(toks[1]) + "'");
        raw.pairs.emplace_back(a, b);
    }
    return raw;
}

RawEdges load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return load_edge_list(in);
}

Graph build_graph(const RawEdges& raw) {
    // Collect the label universe. Self-loop endpoints count as vertices.
    std::vector<std::uint64_t> labels;
    labels.reserve(raw.pairs.size() * 2);
    for (const auto& [a, b] : raw.pairs) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.size() >= std::numeric_limits<vid_t>::max())
        throw std::invalid_argument("graph exceeds 32-bit vertex id space");
    const vid_t n = (vid_t)labels.size();

    std::unordered_map<std::uint64_t, vid_t> compact;
    compact.reserve(n * 2);
    for (vid_t i = 0; i < n; ++i) compact.emplace(labels[i], i);

    // Deduplicate undirected edges on compacted ids, dropping self-loops.
    std::vector<std::pair<vid_t, vid_t>> edges;
    edges.reserve(raw.pairs.size());
    for (const auto& [a, b] : raw.pairs) {
        if (a == b) continue;
        vid_t x = compact[a], y = compact[b];
        if (x > y) std::swap(x, y);
        edges.emplace_back(x, y);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<std::uint32_t> deg(n, 0);
    for (const auto& [x, y] : edges) {
        ++deg[x];
        ++deg[y];
    }

    // Degree relabeling: ascending degree, ties by ascending original label.
    std::vector<vid_t> order(n);
    for (vid_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](vid_t a, vid_t b) {
        return deg[a] != deg[b] ? deg[a] < deg[b] : labels[a] < labels[b];
    });
    std::vector<vid_t> new_id(n);
    for (vid_t rank = 0; rank < n; ++rank) new_id[order[rank]] = rank;

    Graph g;
    g.degree_.resize(n);
    g.inverse_map_.resize(n);
    g.relabel_map_.reserve(n * 2);
    for (vid_t old = 0; old < n; ++old) {
        vid_t id = new_id[old];
        g.degree_[id] = deg[old];
        g.inverse_map_[id] = labels[old];
        g.relabel_map_.emplace(labels[old], id);
    }
    g.m_ = edges.size();
    g.d_max_ = n ? *std::max_element(g.degree_.begin(), g.degree_.end()) : 0;

    g.offsets_.assign(n + 1, 0);
    for (vid_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + g.degree_[v];
    g.adj_id_.resize(2 * g.m_);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [x, y] : edges) {
        vid_t a = new_id[x], b = new_id[y];
        g.adj_id_[cursor[a]++] = b;
        g.adj_id_[cursor[b]++] = a;
    }
    for (vid_t v = 0; v < n; ++v)
        std::sort(g.adj_id_.begin() + g.offsets_[v], g.adj_id_.begin() + g.offsets_[v + 1]);

    g.adj_deg_ = g.adj_id_;
    for (vid_t v = 0; v < n; ++v) {
        auto first = g.adj_deg_.begin() + g.offsets_[v];
        auto last = g.adj_deg_.begin() + g.offsets_[v + 1];
        std::sort(first, last, [&](vid_t a, vid_t b) {
            return g.degree_[a] != g.degree_[b] ? g.degree_[a] > g.degree_[b] : a < b;
        });
    }
    return g;
}

bool Graph::has_edge(vid_t a, vid_t b) const {
    if (degree_[a] > degree_[b]) std::swap(a, b); // search the shorter list
    auto nb = neighbors_by_id(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<OrientedEdge> orient_edges(const Graph& g) {
    std::vector<OrientedEdge> edges;
    edges.reserve(g.num_edges());
    eid_t next = 0;
    const vid_t n = (vid_t)g.num_vertices();
    // Degree relabeling makes "v has the larger degree, ties to the larger
    // id" the same as v > u, so ascending (v,u) is a plain id scan.
    for (vid_t v = 0; v < n; ++v)
        for (vid_t u : g.neighbors_by_id(v)) {
            if (u >= v) break;
            edges.push_back({v, u, next++});
        }
    return edges;
}

std::uint64_t edge_volume(const Graph& g, const OrientedEdge& e) {
    auto nu = g.neighbors_by_id(e.u);
    auto nv = g.neighbors_by_id(e.v);
    std::uint64_t vol = 0;
    std::size_t i = 0, j = 0;
    while (i < nu.size() || j < nv.size()) {
        vid_t w;
        if (j == nv.size() || (i < nu.size() && nu[i] < nv[j])) {
            w = nu[i++];
        } else if (i == nu.size() || nv[j] < nu[i]) {
            w = nv[j++];
        } else {
            w = nu[i];
            ++i;
            ++j;
        }
        if (w != e.u && w != e.v) vol += g.degree(w);
    }
    return vol;
}

} // namespace graphlet
