#ifndef INDTREE_REDUCTION_HPP
#define INDTREE_REDUCTION_HPP

#include <optional>
#include <random>
#include <vector>

#include "indtree/graph.hpp"
#include "indtree/polynomial.hpp"

namespace indtree {

/// A pure branch at a branching point: the path from `anchor` to a leaf,
/// anchor excluded, with every vertex on it of degree at most 2. Length is
/// counted in edges and equals the number of path vertices.
struct Branch {
    int anchor = -1;
    std::vector<int> path; // first vertex adjacent to anchor, last is a leaf

    int length() const { return static_cast<int>(path.size()); }
    int leaf() const { return path.back(); }
    int type() const { return length() % 3; } // branch type: length mod 3

    bool operator==(const Branch&) const = default;
};

enum class Parity { even, odd };

enum class MoveKind {
    // Keep one type-1 and one type-2 branch, drop every other vertex of the
    // graph. Forces I(G;-1) = 0; always an even move.
    mixed_pair,
    // Several pure branches of one type at the anchor: remove all but one.
    same_type_collapse,
    // Remove every type-0 pure branch at the anchor, keeping the anchor.
    type_zero_removal,
};

struct Move {
    MoveKind kind;
    int anchor;
    std::vector<Branch> removed; // for mixed_pair: the other pure branches at the anchor
    std::vector<Branch> kept;    // mixed_pair: two, same_type_collapse: one, type_zero_removal: none
    Parity parity;

    bool operator==(const Move&) const = default;
};

struct ReductionTrace {
    std::vector<Move> moves;
    int terminal_path_n = 0; // vertex count of the final path
    int odd_move_count = 0;
    bool mixed_pair_used = false;
};

struct Classification {
    int value = 0; // I(G;-1), in {-1,0,1} for trees
    bool contractible = false;
    // Parity of the sphere dimension when Ind(G) is a sphere: odd for value 1,
    // even for value -1, absent when contractible.
    std::optional<Parity> sphere_euler_parity;
    ReductionTrace trace;
};

// All maximal pure branches anchored at u, sorted by (length, leaf label).
// Throws std::invalid_argument if u is not a branching point.
std::vector<Branch> pure_branches_at(const Graph& g, int u);

// Odd iff an odd number of removed branches has length = 4 (mod 6) for type 1,
// = 2 (mod 6) for type 2, = 3 (mod 6) for type 0. Mixed pairs are even.
Parity move_parity(const Move& m);

// Applies one truncation move, validating that the move's branches are pure
// branches of g at the anchor. The input graph is left untouched.
// Value contract: I(result;-1) = (-1)^[m odd] * I(g;-1) for collapse/removal
// moves, and I(g;-1) = 0 whenever a mixed pair exists.
Graph apply_move(const Graph& g, const Move& m);

// First applicable move: branching points are scanned in ascending label
// order; at each, type-zero removal is preferred, then a mixed pair, then a
// same-type collapse keeping the shortest branch (ties by smallest leaf).
// Returns nullopt iff g has no branching point. Throws StallError if branching
// points exist but no move applies anywhere (impossible for trees).
std::optional<Move> choose_move(const Graph& g);

// Reduces a tree to a path, recording every move. Moves are applied in
// rounds: each round decides one move per eligible branching point from the
// round-start graph (ascending anchors, same precedence as choose_move) and
// then applies them in order. Terminates in at most |V| moves.
// Throws NotATreeError for non-tree input.
ReductionTrace reduce(const Graph& g);

// I(G;-1) implied by a completed reduction: (-1)^odd_moves * I(P_n;-1).
int trace_value(const ReductionTrace& t);

// Full classification of a tree from its deterministic reduction trace.
Classification classify(const Graph& g);

// Reduction variant with a randomized move-selection policy (random eligible
// branching point, random kept branches), one move at a time. The final value
// is order-invariant; terminal path length and odd-move count need not be.
ReductionTrace reduce_randomized(const Graph& g, std::mt19937_64& rng);

// Best-effort reduction of an arbitrary simple graph. The truncation moves
// preserve I(.;-1) up to the recorded sign even on graphs with cycles, but
// reducibility to a path is no longer guaranteed: the engine stops, without
// error, when no move applies (`stalled` when branching points remain).
struct PartialReduction {
    std::vector<Move> moves;
    Graph remainder;
    int odd_move_count = 0;
    bool mixed_pair_used = false;
    bool stalled = false;
};
PartialReduction reduce_partial(const Graph& g);

// Exact I(g;-1) for any simple graph. With `truncate_branches`, pure-branch
// moves first shrink the graph (sign-tracked) before the exponential
// evaluator runs on the remainder.
BigInt graph_value_at_minus1(const Graph& g, bool truncate_branches = true);

} // namespace indtree

#endif
