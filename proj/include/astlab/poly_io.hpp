#pragma once

// Canonical JSON form of a polynomial:
//   {"schema":"astlab.poly/1","vars":k,"terms":[{"e":[...],"c":"<decimal>"},...]}
// with terms in canonical (graded lexicographic) order.

#include <string>

#include <nlohmann/json.hpp>

#include "astlab/laurent_poly.hpp"

namespace astlab {

inline constexpr const char* kPolySchema = "astlab.poly/1";

template <class Coeff>
nlohmann::json poly_to_json(const LaurentPoly<Coeff>& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"e", e}, {"c", c.get_str()}});
    return {{"schema", kPolySchema}, {"vars", p.vars()}, {"terms", std::move(terms)}};
}

template <class Coeff>
LaurentPoly<Coeff> poly_from_json(const nlohmann::json& j) {
    if (j.value("schema", std::string{}) != kPolySchema) throw invalid_argument("not an astlab.poly/1 document");
    const std::size_t k = j.at("vars").get<std::size_t>();
    LaurentPoly<Coeff> p(k);
    for (const auto& t : j.at("terms")) {
        auto e = t.at("e").get<Exponents>();
        if (e.size() != k) throw invalid_argument("term exponent has wrong arity");
        Coeff c;
        if (c.set_str(t.at("c").get<std::string>(), 10) != 0) throw invalid_argument("malformed coefficient");
        if constexpr (std::is_same_v<Coeff, Rational>) c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

}  // namespace astlab
