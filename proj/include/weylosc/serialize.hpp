#pragma once

#include "weylosc/basis.hpp"
#include "weylosc/fock.hpp"
#include "weylosc/poly.hpp"
#include "weylosc/rational.hpp"
#include "weylosc/realize.hpp"
#include "weylosc/spectral.hpp"

#include <nlohmann/json.hpp>

#include <string>

// JSON encodings. Every rational is a canonical "num/den" string so that
// reports are exact and byte-stable; nlohmann::json orders object keys.

namespace weylosc {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return r.str(); }

/// Coefficient list, lowest power first.
inline json to_json(const Poly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) {
        out.push_back(c.str());
    }
    return out;
}

/// Object mapping the decimal power to the coefficient string.
inline json to_json(const LaurentPoly& l) {
    json out = json::object();
    for (const auto& [k, v] : l.terms()) {
        out[std::to_string(k)] = v.str();
    }
    return out;
}

inline json to_json(const BasisKind& b) {
    if (b.is_monomial()) {
        return json{{"kind", "monomial"}};
    }
    return json{{"kind", "quasi_monomial"}, {"delta", b.step().str()}};
}

/// [{"b": k, "a": m, "coeff": "..."}] sorted by (k, m).
inline json to_json(const FockPoly& f) {
    json out = json::array();
    for (const auto& [w, c] : f.terms()) {
        out.push_back(json{{"b", w.b}, {"a", w.a}, {"coeff", c.str()}});
    }
    return out;
}

inline json to_json(const Stencil& s) {
    json terms = json::array();
    for (const auto& [j, c] : s.terms) {
        terms.push_back(json{{"offset", j}, {"coeff", to_json(c)}});
    }
    return json{{"mode", s.mode == Stencil::Mode::shift ? "shift" : "scale"},
                {"param", s.param.str()},
                {"terms", std::move(terms)}};
}

inline json to_json(const SpectralReport& r) {
    json levels = json::array();
    for (const auto& l : r.levels) {
        levels.push_back(json{{"n", l.n}, {"E", l.eigenvalue.str()}, {"coeffs", to_json(l.eigenpoly)}});
    }
    return json{{"basis", to_json(r.basis)}, {"levels", std::move(levels)}};
}

inline Rational rational_from_json(const json& j) { return Rational::parse(j.get<std::string>()); }

inline Poly poly_from_json(const json& j) {
    std::vector<Rational> c;
    for (const auto& e : j) {
        c.push_back(rational_from_json(e));
    }
    return Poly(std::move(c));
}

} // namespace weylosc
