#include "indtree/reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "indtree/errors.hpp"
#include "indtree/ind_poly.hpp"

namespace indtree {

std::vector<Branch> pure_branches_at(const Graph& g, int u) {
    if (vertex_kind(g, u) != VertexKind::branching)
        throw std::invalid_argument("pure_branches_at: vertex " + std::to_string(u) +
                                    " is not a branching point");
    std::vector<Branch> out;
    for (int first : g.neighbors(u)) {
        Branch b{u, {}};
        int prev = u, cur = first;
        while (true) {
            int d = g.degree(cur);
            if (d > 2)
                break; // runs into another branching point: not pure
            b.path.push_back(cur);
            if (d == 1) { // leaf reached
                out.push_back(std::move(b));
                break;
            }
            const auto& nbrs = g.neighbors(cur);
            int next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
            if (next == u)
                break; // walked around a cycle back to the anchor
            prev = cur;
            cur = next;
        }
    }
    std::sort(out.begin(), out.end(), [](const Branch& a, const Branch& b) {
        return std::pair(a.length(), a.leaf()) < std::pair(b.length(), b.leaf());
    });
    return out;
}

Parity move_parity(const Move& m) {
    if (m.kind == MoveKind::mixed_pair)
        return Parity::even;
    int flip_residue = 0;
    switch (m.kind) {
    case MoveKind::same_type_collapse:
        if (m.kept.empty())
            throw std::invalid_argument("move_parity: collapse move without a kept branch");
        // Type 1 branches flip the sign at length 4 (mod 6), type 2 at 2 (mod 6).
        flip_residue = m.kept.front().type() == 1 ? 4 : 2;
        break;
    case MoveKind::type_zero_removal:
        flip_residue = 3;
        break;
    default:
        break;
    }
    int flips = 0;
    for (const Branch& b : m.removed)
        if (b.length() % 6 == flip_residue)
            ++flips;
    return flips % 2 == 1 ? Parity::odd : Parity::even;
}

namespace {

void check_branch_pure(const Graph& g, const Branch& b) {
    if (b.path.empty())
        throw std::invalid_argument("apply_move: empty branch");
    if (!g.has_vertex(b.anchor))
        throw std::invalid_argument("apply_move: anchor " + std::to_string(b.anchor) +
                                    " not in graph");
    int prev = b.anchor;
    for (std::size_t i = 0; i < b.path.size(); ++i) {
        int v = b.path[i];
        if (!g.has_vertex(v) || !g.has_edge(prev, v))
            throw std::invalid_argument("apply_move: branch at " + std::to_string(b.anchor) +
                                        " is not a path in the graph");
        if (g.degree(v) > 2)
            throw std::invalid_argument("apply_move: branch vertex " + std::to_string(v) +
                                        " has degree > 2 (branch not pure)");
        prev = v;
    }
    if (g.degree(b.path.back()) != 1)
        throw std::invalid_argument("apply_move: branch at " + std::to_string(b.anchor) +
                                    " does not end at a leaf");
}

void check_move(const Graph& g, const Move& m) {
    for (const Branch& b : m.removed)
        check_branch_pure(g, b);
    for (const Branch& b : m.kept)
        check_branch_pure(g, b);
    switch (m.kind) {
    case MoveKind::mixed_pair: {
        if (m.kept.size() != 2)
            throw std::invalid_argument("apply_move: mixed pair keeps exactly two branches");
        int t0 = m.kept[0].type(), t1 = m.kept[1].type();
        if (std::min(t0, t1) != 1 || std::max(t0, t1) != 2)
            throw std::invalid_argument("apply_move: mixed pair needs one type-1 and one type-2 branch");
        break;
    }
    case MoveKind::same_type_collapse: {
        if (m.kept.size() != 1 || m.removed.empty())
            throw std::invalid_argument("apply_move: collapse keeps one branch and removes at least one");
        int t = m.kept.front().type();
        if (t == 0)
            throw std::invalid_argument("apply_move: collapse applies to type 1 or type 2 branches");
        for (const Branch& b : m.removed)
            if (b.type() != t)
                throw std::invalid_argument("apply_move: collapse branches must share one type");
        break;
    }
    case MoveKind::type_zero_removal:
        if (!m.kept.empty() || m.removed.empty())
            throw std::invalid_argument("apply_move: type-zero removal keeps no branch");
        for (const Branch& b : m.removed)
            if (b.type() != 0)
                throw std::invalid_argument("apply_move: type-zero removal only removes type-0 branches");
        break;
    }
    for (const Branch& b : m.removed)
        if (b.anchor != m.anchor)
            throw std::invalid_argument("apply_move: branch anchor mismatch");
    for (const Branch& b : m.kept)
        if (b.anchor != m.anchor)
            throw std::invalid_argument("apply_move: branch anchor mismatch");
}

} // namespace

Graph apply_move(const Graph& g, const Move& m) {
    check_move(g, m);
    if (m.kind == MoveKind::mixed_pair) {
        // Keep only the anchor and the two kept branches.
        std::vector<int> keep{m.anchor};
        for (const Branch& b : m.kept)
            keep.insert(keep.end(), b.path.begin(), b.path.end());
        std::sort(keep.begin(), keep.end());
        std::vector<int> drop;
        for (int v : g.vertices())
            if (!std::binary_search(keep.begin(), keep.end(), v))
                drop.push_back(v);
        return remove_vertices(g, drop);
    }
    std::vector<int> drop;
    for (const Branch& b : m.removed)
        drop.insert(drop.end(), b.path.begin(), b.path.end());
    return remove_vertices(g, drop);
}

namespace {

// One move at a branching point of g, if any applies there. Precedence:
// type-zero removal, then mixed pair, then same-type collapse. Kept branches
// are the shortest of their type (ties by smallest leaf label).
std::optional<Move> move_at(const Graph& g, int u) {
    std::vector<Branch> branches = pure_branches_at(g, u); // sorted (length, leaf)
    std::vector<Branch> by_type[3];
    for (Branch& b : branches)
        by_type[b.type()].push_back(std::move(b));

    Move m;
    m.anchor = u;
    if (!by_type[0].empty()) {
        m.kind = MoveKind::type_zero_removal;
        m.removed = by_type[0];
    } else if (!by_type[1].empty() && !by_type[2].empty()) {
        m.kind = MoveKind::mixed_pair;
        m.kept = {by_type[1].front(), by_type[2].front()};
        for (std::size_t i = 1; i < by_type[1].size(); ++i)
            m.removed.push_back(by_type[1][i]);
        for (std::size_t i = 1; i < by_type[2].size(); ++i)
            m.removed.push_back(by_type[2][i]);
    } else if (by_type[1].size() >= 2 || by_type[2].size() >= 2) {
        auto& group = by_type[1].size() >= 2 ? by_type[1] : by_type[2];
        m.kind = MoveKind::same_type_collapse;
        m.kept = {group.front()};
        m.removed.assign(group.begin() + 1, group.end());
    } else {
        return std::nullopt;
    }
    m.parity = move_parity(m);
    return m;
}

// All moves of one round, decided against a snapshot of g: one move per
// branching point that admits one, in ascending anchor order. Branch interiors
// have degree <= 2 while anchors have degree > 2, so branches at distinct
// anchors are vertex-disjoint and never adjacent to a foreign anchor; a
// round's moves therefore stay valid as they are applied one after another.
std::vector<Move> round_moves(const Graph& g) {
    std::vector<Move> out;
    for (int u : branching_points(g))
        if (auto m = move_at(g, u))
            out.push_back(std::move(*m));
    return out;
}

struct EngineResult {
    std::vector<Move> moves;
    Graph remainder;
    bool stalled = false;
};

EngineResult run_engine(Graph g) {
    EngineResult res;
    while (!branching_points(g).empty()) {
        std::vector<Move> round = round_moves(g);
        if (round.empty()) {
            res.stalled = true;
            break;
        }
        bool ended_by_mixed_pair = false;
        for (Move& m : round) {
            g = apply_move(g, m);
            bool mixed = m.kind == MoveKind::mixed_pair;
            res.moves.push_back(std::move(m));
            if (mixed) { // graph is now a path; drop the rest of the round
                ended_by_mixed_pair = true;
                break;
            }
        }
        if (ended_by_mixed_pair)
            break;
    }
    res.remainder = std::move(g);
    return res;
}

ReductionTrace trace_from(std::vector<Move> moves, const Graph& terminal) {
    ReductionTrace t;
    t.moves = std::move(moves);
    t.terminal_path_n = static_cast<int>(terminal.vertex_count());
    for (const Move& m : t.moves) {
        if (m.parity == Parity::odd)
            ++t.odd_move_count;
        if (m.kind == MoveKind::mixed_pair)
            t.mixed_pair_used = true;
    }
    return t;
}

} // namespace

std::optional<Move> choose_move(const Graph& g) {
    auto anchors = branching_points(g);
    if (anchors.empty())
        return std::nullopt;
    for (int u : anchors)
        if (auto m = move_at(g, u))
            return m;
    throw StallError("graph has branching points but no applicable truncation move");
}

ReductionTrace reduce(const Graph& g) {
    if (!is_tree(g))
        throw NotATreeError("reduce: input is not a tree");
    EngineResult res = run_engine(g);
    if (res.stalled) // trees always stay reducible; a stall here is a bug
        throw StallError("reduction stalled on a tree input");
    return trace_from(std::move(res.moves), res.remainder);
}

int trace_value(const ReductionTrace& t) {
    int base = path_value_at_minus1(t.terminal_path_n);
    return t.odd_move_count % 2 == 1 ? -base : base;
}

Classification classify(const Graph& g) {
    Classification c;
    c.trace = reduce(g);
    c.value = trace_value(c.trace);
    c.contractible = c.value == 0;
    if (c.value == 1)
        c.sphere_euler_parity = Parity::odd;
    else if (c.value == -1)
        c.sphere_euler_parity = Parity::even;
    return c;
}

ReductionTrace reduce_randomized(const Graph& g, std::mt19937_64& rng) {
    if (!is_tree(g))
        throw NotATreeError("reduce_randomized: input is not a tree");
    auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

    Graph cur = g;
    std::vector<Move> moves;
    while (true) {
        std::vector<int> eligible;
        for (int u : branching_points(cur))
            if (move_at(cur, u))
                eligible.push_back(u);
        if (eligible.empty())
            break;
        int u = eligible[pick(eligible.size())];

        // Same per-anchor precedence as the deterministic policy, but the
        // kept branches are chosen at random.
        std::vector<Branch> branches = pure_branches_at(cur, u);
        std::vector<Branch> by_type[3];
        for (Branch& b : branches)
            by_type[b.type()].push_back(std::move(b));
        Move m;
        m.anchor = u;
        if (!by_type[0].empty()) {
            m.kind = MoveKind::type_zero_removal;
            m.removed = by_type[0];
        } else if (!by_type[1].empty() && !by_type[2].empty()) {
            m.kind = MoveKind::mixed_pair;
            std::size_t i = pick(by_type[1].size());
            std::size_t j = pick(by_type[2].size());
            m.kept = {by_type[1][i], by_type[2][j]};
            for (std::size_t k = 0; k < by_type[1].size(); ++k)
                if (k != i)
                    m.removed.push_back(by_type[1][k]);
            for (std::size_t k = 0; k < by_type[2].size(); ++k)
                if (k != j)
                    m.removed.push_back(by_type[2][k]);
        } else {
            auto& group = by_type[1].size() >= 2 ? by_type[1] : by_type[2];
            std::size_t i = pick(group.size());
            m.kind = MoveKind::same_type_collapse;
            m.kept = {group[i]};
            for (std::size_t k = 0; k < group.size(); ++k)
                if (k != i)
                    m.removed.push_back(group[k]);
        }
        m.parity = move_parity(m);
        cur = apply_move(cur, m);
        moves.push_back(std::move(m));
    }
    return trace_from(std::move(moves), cur);
}

PartialReduction reduce_partial(const Graph& g) {
    EngineResult res = run_engine(g);
    PartialReduction out;
    out.moves = std::move(res.moves);
    out.remainder = std::move(res.remainder);
    out.stalled = res.stalled;
    for (const Move& m : out.moves) {
        if (m.parity == Parity::odd)
            ++out.odd_move_count;
        if (m.kind == MoveKind::mixed_pair)
            out.mixed_pair_used = true;
    }
    return out;
}

BigInt graph_value_at_minus1(const Graph& g, bool truncate_branches) {
    if (!truncate_branches)
        return graph_ind_poly(g).eval(-1);
    PartialReduction pre = reduce_partial(g);
    if (pre.mixed_pair_used)
        return 0;
    BigInt rest = graph_ind_poly(pre.remainder).eval(-1);
    return pre.odd_move_count % 2 == 1 ? BigInt(-rest) : rest;
}

} // namespace indtree
