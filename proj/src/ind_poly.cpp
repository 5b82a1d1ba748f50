#include "indtree/ind_poly.hpp"

#include <map>
#include <utility>
#include <vector>

#include "indtree/errors.hpp"

namespace indtree {

Polynomial tree_ind_poly(const Graph& g) {
    if (!is_tree(g))
        throw NotATreeError("tree_ind_poly: input is not a tree");

    int root = g.adjacency().begin()->first;

    // Iterative DFS producing a parent map and a post-order vertex sequence.
    std::map<int, int> parent;
    std::vector<int> order, stack{root};
    parent[root] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (parent.count(w))
                continue;
            parent[w] = v;
            stack.push_back(w);
        }
    }

    // excluding[v]: independent sets of v's subtree avoiding v;
    // including[v]: those containing v.
    std::map<int, Polynomial> excluding, including;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        Polynomial ex = Polynomial::one();
        Polynomial in_children = Polynomial::one();
        for (int w : g.neighbors(v)) {
            if (w == parent[v])
                continue;
            ex *= excluding[w] + including[w];
            in_children *= excluding[w];
        }
        excluding[v] = std::move(ex);
        including[v] = in_children.shifted_mul_x();
    }
    return excluding[root] + including[root];
}

namespace {

Polynomial binomial_power(std::size_t k) {
    // (1 + x)^k for an edgeless graph on k vertices.
    Polynomial base({1, 1});
    Polynomial acc = Polynomial::one();
    for (std::size_t i = 0; i < k; ++i)
        acc *= base;
    return acc;
}

Polynomial component_ind_poly(const Graph& g) {
    if (g.empty())
        return Polynomial::one();
    if (g.edge_count() == 0)
        return binomial_power(g.vertex_count());

    // Pivot: maximum degree, ties broken by smallest label.
    int pivot = -1, best = -1;
    for (const auto& [v, nbrs] : g.adjacency()) {
        if (static_cast<int>(nbrs.size()) > best) {
            best = static_cast<int>(nbrs.size());
            pivot = v;
        }
    }

    std::vector<int> closed = g.neighbors(pivot);
    closed.push_back(pivot);
    Polynomial without = graph_ind_poly(remove_vertices(g, {pivot}));
    Polynomial with = graph_ind_poly(remove_vertices(g, closed));
    return without + with.shifted_mul_x();
}

} // namespace

Polynomial graph_ind_poly(const Graph& g) {
    if (g.empty())
        return Polynomial::one();
    auto comps = connected_components(g);
    if (comps.size() == 1)
        return component_ind_poly(comps.front());
    Polynomial acc = Polynomial::one();
    for (const auto& comp : comps)
        acc *= component_ind_poly(comp);
    return acc;
}

} // namespace indtree
