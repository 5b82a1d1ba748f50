#ifndef INDTREE_IND_POLY_HPP
#define INDTREE_IND_POLY_HPP

#include "indtree/graph.hpp"
#include "indtree/polynomial.hpp"

namespace indtree {

// Exact I(g;x) for a tree in polynomial time: root the tree and propagate,
// bottom up, the pair (independent-set polynomial excluding the vertex,
// polynomial including it). Throws NotATreeError otherwise.
Polynomial tree_ind_poly(const Graph& g);

// Exact I(g;x) for any simple graph. Splits into connected components
// (polynomials multiply), then branches on a maximum-degree vertex v
// (ties by smallest label): I(G) = I(G - v) + x * I(G - N[v]).
// Exponential in the worst case; callers enforce their own size budgets.
Polynomial graph_ind_poly(const Graph& g);

} // namespace indtree

#endif
