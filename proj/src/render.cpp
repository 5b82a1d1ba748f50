#include "indtree/render.hpp"

#include <sstream>

namespace indtree {

const char* move_kind_name(MoveKind k) {
    switch (k) {
    case MoveKind::mixed_pair:
        return "MixedPair";
    case MoveKind::same_type_collapse:
        return "SameTypeCollapse";
    default:
        return "TypeZeroRemoval";
    }
}

const char* parity_name(Parity p) {
    return p == Parity::even ? "even" : "odd";
}

nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const BigInt& c : p.coefficients())
        coeffs.push_back(c.str());
    return {{"coefficients", coeffs}, {"value_at_minus1", p.eval(-1).str()}};
}

nlohmann::json to_json(const Branch& b) {
    return {{"anchor", b.anchor}, {"path", b.path}, {"length", b.length()}, {"type", b.type()}};
}

nlohmann::json to_json(const Move& m) {
    nlohmann::json removed = nlohmann::json::array();
    for (const Branch& b : m.removed)
        removed.push_back(to_json(b));
    nlohmann::json kept = nlohmann::json::array();
    for (const Branch& b : m.kept)
        kept.push_back(to_json(b));
    return {{"kind", move_kind_name(m.kind)},
            {"anchor", m.anchor},
            {"removed", removed},
            {"kept", kept},
            {"parity", parity_name(m.parity)}};
}

nlohmann::json to_json(const ReductionTrace& t) {
    nlohmann::json moves = nlohmann::json::array();
    for (const Move& m : t.moves)
        moves.push_back(to_json(m));
    return {{"moves", moves},
            {"terminal_path_n", t.terminal_path_n},
            {"odd_move_count", t.odd_move_count},
            {"mixed_pair_used", t.mixed_pair_used}};
}

nlohmann::json to_json(const Classification& c) {
    nlohmann::json parity;
    if (c.sphere_euler_parity)
        parity = parity_name(*c.sphere_euler_parity);
    return {{"value", c.value},
            {"contractible", c.contractible},
            {"sphere_euler_parity", parity},
            {"trace", to_json(c.trace)}};
}

namespace {

std::string lengths_of(const std::vector<Branch>& branches) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < branches.size(); ++i) {
        if (i > 0)
            out << ",";
        out << branches[i].length();
    }
    out << "]";
    return out.str();
}

} // namespace

std::string trace_to_text(const ReductionTrace& t) {
    std::ostringstream out;
    for (std::size_t i = 0; i < t.moves.size(); ++i) {
        const Move& m = t.moves[i];
        out << "move " << i + 1 << ": " << move_kind_name(m.kind) << " at " << m.anchor
            << ", removed branches " << lengths_of(m.removed) << ", kept " << lengths_of(m.kept)
            << ", parity " << parity_name(m.parity) << "\n";
    }
    out << "terminal path n=" << t.terminal_path_n << ", odd moves s=" << t.odd_move_count
        << ", I(G;-1)=" << trace_value(t) << "\n";
    return out.str();
}

std::string classification_to_text(const Classification& c, bool with_trace) {
    std::ostringstream out;
    out << "I(G;-1)=" << c.value << ", ";
    if (c.contractible)
        out << "contractible";
    else
        out << "sphere (" << parity_name(*c.sphere_euler_parity) << " Euler parity)";
    out << ", terminal P_" << c.trace.terminal_path_n << ", odd moves " << c.trace.odd_move_count
        << "\n";
    if (with_trace)
        out << trace_to_text(c.trace);
    return out.str();
}

nlohmann::json to_json(const FuzzReport& r) {
    nlohmann::json shapes;
    for (std::size_t s = 0; s < r.shape_counts.size(); ++s)
        shapes[tree_shape_name(static_cast<TreeShape>(s))] = r.shape_counts[s];
    nlohmann::json ce;
    if (r.counterexample) {
        const FuzzCounterexample& c = *r.counterexample;
        ce = {{"index", c.index},
              {"n", c.spec.n},
              {"shape", tree_shape_name(c.spec.shape)},
              {"generator_seed", c.spec.seed},
              {"edge_list", c.edge_list},
              {"classify_value", c.classify_value},
              {"tree_dp_value", c.tree_dp_value},
              {"enumeration_value",
               c.enumeration_value ? nlohmann::json(*c.enumeration_value) : nlohmann::json()}};
    }
    return {{"seed", r.options.seed},
            {"count", r.options.count},
            {"max_n", r.options.max_n},
            {"checked", r.checked},
            {"passed", r.checked - r.failed},
            {"failed", r.failed},
            {"shapes", shapes},
            {"counterexample", ce}};
}

std::string fuzz_report_to_text(const FuzzReport& r) {
    std::ostringstream out;
    out << "fuzz: seed=" << r.options.seed << " count=" << r.options.count
        << " max_n=" << r.options.max_n << "\n";
    out << "shapes:";
    for (std::size_t s = 0; s < r.shape_counts.size(); ++s)
        out << " " << tree_shape_name(static_cast<TreeShape>(s)) << "=" << r.shape_counts[s];
    out << "\n";
    if (r.counterexample) {
        const FuzzCounterexample& c = *r.counterexample;
        out << "counterexample at index " << c.index << " (n=" << c.spec.n
            << ", shape=" << tree_shape_name(c.spec.shape) << ", generator_seed=" << c.spec.seed
            << "):\n";
        out << c.edge_list;
        out << "classify=" << c.classify_value << " tree_dp=" << c.tree_dp_value;
        if (c.enumeration_value)
            out << " enumeration=" << *c.enumeration_value;
        out << "\n";
    }
    out << "pass " << r.checked - r.failed << "/" << r.checked << "\n";
    return out.str();
}

} // namespace indtree
