#include "bernalg/render.hpp"

#include <sstream>
#include <vector>

namespace bernalg {

namespace {

std::string scale_text(const Rational& c) {
  const Integer p = c.num();
  const Integer q = c.den();
  std::string s = p < 0 ? "-" : "";
  const Integer mag = abs(p);
  if (mag != 1) s += mag.get_str();
  s += "T";
  if (q != 1) s += "/" + q.get_str();
  return s;
}

std::string scale_latex(const Rational& c) {
  if (c == Rational(1)) return "T";
  if (c == Rational(-1)) return "-T";
  return render_latex(c) + "T";
}

std::vector<std::string> atom_factors(const Atom& at) {
  std::vector<std::string> f;
  if (at.m() == 1) {
    f.emplace_back("T");
  } else if (at.m() != 0) {
    f.push_back("T^" + std::to_string(at.m()));
  }
  if (at.n() > 0) {
    std::string b = at.b().is_one() ? "B" : "B(" + scale_text(at.b()) + ")";
    if (at.n() > 1) b += "^" + std::to_string(at.n());
    f.push_back(b);
  }
  if (!at.a().is_zero()) f.push_back(at.a().is_one() ? "e^T" : "e^{" + scale_text(at.a()) + "}");
  return f;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += sep;
    s += parts[i];
  }
  return s;
}

// Appends " + body" / " - body" (or a leading "-" for the first term).
void append_signed(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) {
    out = (negative ? "-" : "") + body;
  } else {
    out += (negative ? " - " : " + ") + body;
  }
}

std::string atom_latex(const Atom& at) {
  std::string s;
  if (at.m() == 1) {
    s += "T";
  } else if (at.m() != 0) {
    s += "T^{" + std::to_string(at.m()) + "}";
  }
  if (at.n() > 0) {
    s += "\\mathbf{B}";
    if (at.n() > 1) s += "^{" + std::to_string(at.n()) + "}";
    if (!at.b().is_one()) s += "(" + scale_latex(at.b()) + ")";
  }
  if (!at.a().is_zero()) s += "e^{" + scale_latex(at.a()) + "}";
  return s;
}

std::string signed_latex_sum(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::string out;
  for (const auto& [c, body] : terms) {
    const Rational mag = c.abs();
    std::string t = (mag.is_one() && !body.empty()) ? body : render_latex(mag) + body;
    if (out.empty()) {
      out = (c.sign() < 0 ? "-" : "") + t;
    } else {
      out += (c.sign() < 0 ? "-" : "+") + t;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string render_text(const BElement& x) {
  std::string out;
  for (const auto& [at, c] : x.terms()) {
    const auto f = atom_factors(at);
    const Rational mag = c.abs();
    std::string body;
    if (f.empty()) {
      body = mag.str();
    } else {
      body = mag.is_one() ? join(f, "*") : mag.str() + "*" + join(f, "*");
    }
    append_signed(out, c.sign() < 0, body);
  }
  return out.empty() ? "0" : out;
}

std::string render_generator(const Atom& g) {
  const auto f = atom_factors(g);
  return f.empty() ? "1" : join(f, "*");
}

std::string render_text(const DCombination& d) {
  std::vector<std::string> parts;
  for (const auto& [g, op] : d.terms()) {
    const std::string gen = render_generator(g);
    for (const auto& [k, f] : op.terms()) {
      std::string target = k == 0 ? gen : (k == 1 ? "d[" : "d^" + std::to_string(k) + "[") + gen + "]";
      parts.push_back("(" + f.str("T") + ")*" + target);
    }
  }
  return parts.empty() ? "0" : join(parts, " + ");
}

std::string render_latex(const Rational& r) {
  if (r.is_integer()) return r.str();
  const Integer p = r.num();
  return std::string(p < 0 ? "-" : "") + "\\frac{" + Integer(abs(p)).get_str() + "}{" + r.den().get_str() + "}";
}

std::string render_latex(const BElement& x) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [at, c] : x.terms()) terms.emplace_back(c, atom_latex(at));
  return signed_latex_sum(terms);
}

std::string render_latex(const WeylOp& op) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [k, f] : op.terms()) {
    std::string d;
    if (k == 1) d = "\\frac{d}{dT}";
    if (k > 1) d = "\\frac{d^{" + std::to_string(k) + "}}{dT^{" + std::to_string(k) + "}}";
    for (int j = 0; j <= f.degree(); ++j) {
      if (f.coeff(j).is_zero()) continue;
      std::string t = j == 0 ? "" : (j == 1 ? "T" : "T^{" + std::to_string(j) + "}");
      terms.emplace_back(f.coeff(j), t + d);
    }
  }
  return signed_latex_sum(terms);
}

std::string render_latex(const DCombination& d) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [g, op] : d.terms()) {
    const std::string gen = g == Atom::make(0, 0, Rational(1), Rational(0)) ? "" : atom_latex(g);
    const auto& ops = op.terms();
    const bool single = ops.size() == 1 && ops.begin()->first == 0 &&
                        ops.begin()->second.low_degree() == ops.begin()->second.degree();
    if (single) {
      const Poly& f = ops.begin()->second;
      const int j = f.degree();
      const std::string t = j == 0 ? "" : (j == 1 ? "T" : "T^{" + std::to_string(j) + "}");
      terms.emplace_back(f.coeff(j), t + gen);
    } else {
      terms.emplace_back(Rational(1), "\\left(" + render_latex(op) + "\\right)" + (gen.empty() ? "1" : gen));
    }
  }
  return signed_latex_sum(terms);
}

std::string render_latex(const Poly& p, char var) {
  std::vector<std::pair<Rational, std::string>> terms;
  const std::string v(1, var);
  for (int j = 0; j <= p.degree(); ++j) {
    if (p.coeff(j).is_zero()) continue;
    terms.emplace_back(p.coeff(j), j == 0 ? "" : (j == 1 ? v : v + "^{" + std::to_string(j) + "}"));
  }
  return signed_latex_sum(terms);
}

nlohmann::ordered_json to_json(const Rational& r) { return r.str(); }

nlohmann::ordered_json to_json(const Poly& p) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (int j = 0; j <= p.degree(); ++j) coeffs.push_back(p.coeff(j).str());
  return {{"coeffs", coeffs}, {"text", p.str("X")}};
}

nlohmann::ordered_json to_json(const BElement& x) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [at, c] : x.terms()) {
    terms.push_back({{"coefficient", c.str()},
                     {"m", at.m()},
                     {"n", at.n()},
                     {"b", at.b().str()},
                     {"a", at.a().str()}});
  }
  return {{"text", render_text(x)}, {"terms", terms}};
}

nlohmann::ordered_json to_json(const DCombination& d) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [g, op] : d.terms()) {
    nlohmann::ordered_json ops = nlohmann::ordered_json::array();
    for (const auto& [k, f] : op.terms()) ops.push_back({{"order", k}, {"coefficient", f.str("T")}});
    terms.push_back({{"generator", render_generator(g)}, {"operator", ops}, {"operator_text", op.str()}});
  }
  return {{"text", render_text(d)}, {"terms", terms}};
}

nlohmann::ordered_json to_json(const IdentityReport& r) {
  nlohmann::ordered_json params = nlohmann::ordered_json::array();
  for (const auto& p : r.params) params.push_back({{"name", p.name}, {"value", p.value.str()}});
  nlohmann::ordered_json j = {{"name", r.name},       {"params", params},         {"lhs", r.lhs.str()},
                      {"rhs", r.rhs.str()},   {"verified", r.verified},   {"latex", r.latex}};
  if (r.degenerate) j["degenerate"] = true;
  return j;
}

}  // namespace bernalg
