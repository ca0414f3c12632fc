#pragma once

// Canonical JSON lines for enumerated objects.

#include <nlohmann/json.hpp>

#include "astlab/monotone.hpp"
#include "astlab/triangles.hpp"

namespace astlab {

inline constexpr const char* kObjectSchema = "astlab.object/1";

inline nlohmann::json to_json(const Ast& a) {
    const auto p = one_column_profile(a);
    return {{"schema", kObjectSchema}, {"kind", "ast"},   {"order", a.order}, {"rows", a.rows},
            {"positions", p.positions}, {"rho", p.left_eleven + p.right_ten + 1}};
}

inline nlohmann::json to_json(const Asm& a) {
    return {{"schema", kObjectSchema}, {"kind", "asm"}, {"order", a.order}, {"rows", a.rows},
            {"top_one_column", asm_top_one_column(a)}};
}

inline nlohmann::json to_json(const OddOosasmTriangle& t) {
    return {{"schema", kObjectSchema}, {"kind", "oosasm-triangle"}, {"order", t.order}, {"rows", t.rows},
            {"positions", oosasm_one_columns(t)}};
}

inline nlohmann::json to_json(const MonotoneTriangle& m) {
    return {{"schema", kObjectSchema}, {"kind", "monotone-triangle"}, {"order", m.rows.size()}, {"rows", m.rows}};
}

inline nlohmann::json to_json(const GtPatternBounded& g) {
    return {{"schema", kObjectSchema}, {"kind", "gt-pattern"}, {"order", g.order()}, {"rows", g.rows},
            {"weight", g.weight}};
}

}  // namespace astlab
