#ifndef INDTREE_GRAPH_HPP
#define INDTREE_GRAPH_HPP

#include <cstddef>
#include <map>
#include <vector>

namespace indtree {

/// Labeled undirected simple graph. Vertex labels are arbitrary nonnegative
/// integers and are preserved by every operation (never compacted), so that
/// reduction traces stay readable against the original input.
///
/// Values are immutable once built; the free functions below are pure and
/// return fresh graphs, which makes sharing across threads safe.
class Graph {
public:
    Graph() = default;

    // Adds an isolated vertex; no-op if already present. Rejects negative labels.
    void add_vertex(int v);

    // Adds an undirected edge, inserting missing endpoints.
    // Throws std::invalid_argument on self-loops and duplicate edges.
    void add_edge(int u, int v);

    bool has_vertex(int v) const { return adj_.count(v) != 0; }
    bool has_edge(int u, int v) const;

    // Sorted neighbor labels. Throws std::out_of_range for unknown vertices.
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_; }
    bool empty() const { return adj_.empty(); }

    std::vector<int> vertices() const; // ascending labels

    // Map label -> sorted neighbor list, iterated in ascending label order.
    const std::map<int, std::vector<int>>& adjacency() const { return adj_; }

    bool operator==(const Graph&) const = default;

private:
    std::map<int, std::vector<int>> adj_;
    std::size_t edges_ = 0;
};

enum class VertexKind { leaf, internal, branching };

// leaf <=> degree 1; branching <=> degree > 2; internal otherwise (degree 0 or 2).
// The degree-0 single vertex counts as internal and is treated as the path P_1.
VertexKind vertex_kind(const Graph& g, int v);
std::map<int, VertexKind> classify_vertices(const Graph& g);

// Branching points (degree > 2) in ascending label order.
std::vector<int> branching_points(const Graph& g);

bool is_connected(const Graph& g); // empty graph is not connected

// Connected and |E| = |V| - 1. A single vertex is a tree; the empty graph is not.
bool is_tree(const Graph& g);

// A path graph P_n for some n >= 1 (tree with no branching point).
bool is_path(const Graph& g);

// Induced subgraph on V(g) minus `drop`. Throws std::invalid_argument if a label
// in `drop` is not a vertex of g.
Graph remove_vertices(const Graph& g, const std::vector<int>& drop);

// Components in ascending order of their smallest vertex label.
std::vector<Graph> connected_components(const Graph& g);

} // namespace indtree

#endif
