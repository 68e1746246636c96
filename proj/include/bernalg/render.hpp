#pragma once

#include <string>

#include "json.hpp"

#include "bernalg/bfrak.hpp"
#include "bernalg/identities.hpp"
#include "bernalg/partial_fractions.hpp"
#include "bernalg/reduction.hpp"

namespace bernalg {

/// Text form accepted by parse_element, atoms in (b, n, m, a) order, e.g.
/// "B^2 + 2/3*T*B(3T)*e^T - 2/3*T*B(3T)".
std::string render_text(const BElement& x);
/// One generator: "B(5T)*e^{3T}", "e^{2T}", "T^-1*B".
std::string render_generator(const Atom& g);
/// "(f_0)*G + (f_1)*d[G] + ..." per generator; parseable.
std::string render_text(const DCombination& d);

std::string render_latex(const Rational& r);
std::string render_latex(const BElement& x);
/// Orders ascending, each coefficient a polynomial in T.
std::string render_latex(const WeylOp& op);
std::string render_latex(const DCombination& d);
std::string render_latex(const Poly& p, char var = 'X');

nlohmann::ordered_json to_json(const Rational& r);
nlohmann::ordered_json to_json(const Poly& p);
nlohmann::ordered_json to_json(const BElement& x);
nlohmann::ordered_json to_json(const DCombination& d);
/// {"name", "params": [{"name", "value"}], "lhs", "rhs", "verified", "latex"},
/// plus "degenerate": true for empty-sum instances.
nlohmann::ordered_json to_json(const IdentityReport& r);

}  // namespace bernalg
