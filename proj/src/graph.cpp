#include "indtree/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace indtree {

void Graph::add_vertex(int v) {
    if (v < 0)
        throw std::invalid_argument("vertex label must be nonnegative: " + std::to_string(v));
    adj_.try_emplace(v);
}

void Graph::add_edge(int u, int v) {
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    add_vertex(u);
    add_vertex(v);
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edges_;
}

bool Graph::has_edge(int u, int v) const {
    auto it = adj_.find(u);
    if (it == adj_.end())
        return false;
    return std::binary_search(it->second.begin(), it->second.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end())
        throw std::out_of_range("unknown vertex " + std::to_string(v));
    return it->second;
}

std::vector<int> Graph::vertices() const {
    std::vector<int> out;
    out.reserve(adj_.size());
    for (const auto& [v, nbrs] : adj_)
        out.push_back(v);
    return out;
}

VertexKind vertex_kind(const Graph& g, int v) {
    int d = g.degree(v);
    if (d == 1)
        return VertexKind::leaf;
    if (d > 2)
        return VertexKind::branching;
    return VertexKind::internal;
}

std::map<int, VertexKind> classify_vertices(const Graph& g) {
    std::map<int, VertexKind> out;
    for (const auto& [v, nbrs] : g.adjacency())
        out.emplace(v, vertex_kind(g, v));
    return out;
}

std::vector<int> branching_points(const Graph& g) {
    std::vector<int> out;
    for (const auto& [v, nbrs] : g.adjacency())
        if (nbrs.size() > 2)
            out.push_back(v);
    return out;
}

namespace {

// Iterative DFS over labels reachable from `start`; returns count of visited.
std::size_t reachable_count(const Graph& g, int start) {
    std::map<int, bool> seen;
    std::vector<int> stack{start};
    seen[start] = true;
    std::size_t n = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++n;
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return n;
}

} // namespace

bool is_connected(const Graph& g) {
    if (g.empty())
        return false;
    int start = g.adjacency().begin()->first;
    return reachable_count(g, start) == g.vertex_count();
}

bool is_tree(const Graph& g) {
    if (g.empty())
        return false;
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_path(const Graph& g) {
    return is_tree(g) && branching_points(g).empty();
}

Graph remove_vertices(const Graph& g, const std::vector<int>& drop) {
    std::map<int, bool> dropped;
    for (int v : drop) {
        if (!g.has_vertex(v))
            throw std::invalid_argument("remove_vertices: unknown vertex " + std::to_string(v));
        dropped[v] = true;
    }
    Graph out;
    for (const auto& [v, nbrs] : g.adjacency()) {
        if (dropped.count(v))
            continue;
        out.add_vertex(v);
        for (int w : nbrs)
            if (w > v && !dropped.count(w))
                out.add_edge(v, w);
    }
    return out;
}

std::vector<Graph> connected_components(const Graph& g) {
    std::vector<Graph> comps;
    std::map<int, bool> seen;
    for (const auto& [root, nbrs0] : g.adjacency()) {
        if (seen[root])
            continue;
        Graph comp;
        std::vector<int> stack{root};
        seen[root] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.add_vertex(v);
            for (int w : g.neighbors(v)) {
                if (w > v)
                    comp.add_edge(v, w);
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

} // namespace indtree
