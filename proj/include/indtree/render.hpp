#ifndef INDTREE_RENDER_HPP
#define INDTREE_RENDER_HPP

#include <string>

#include <json.hpp>

#include "indtree/oracle.hpp"
#include "indtree/polynomial.hpp"
#include "indtree/reduction.hpp"

namespace indtree {

// Arbitrary-precision integers are rendered as decimal strings in JSON so no
// consumer silently rounds them.

const char* move_kind_name(MoveKind k);
const char* parity_name(Parity p);

nlohmann::json to_json(const Polynomial& p);

nlohmann::json to_json(const Branch& b);
nlohmann::json to_json(const Move& m);
nlohmann::json to_json(const ReductionTrace& t);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const FuzzReport& r);

// One line per move:
//   "move <i>: <kind> at <anchor>, removed branches [lengths...], kept [lengths...], parity <even|odd>"
// then the footer "terminal path n=<n>, odd moves s=<s>, I(G;-1)=<v>".
std::string trace_to_text(const ReductionTrace& t);

std::string classification_to_text(const Classification& c, bool with_trace);

std::string fuzz_report_to_text(const FuzzReport& r);

} // namespace indtree

#endif
