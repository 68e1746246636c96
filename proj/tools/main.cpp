// bernalg: command-line front end for the Bernoulli-series algebra library.

#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bernalg/acceptance.hpp"
#include "bernalg/bernoulli.hpp"
#include "bernalg/expr.hpp"
#include "bernalg/identities.hpp"
#include "bernalg/partial_fractions.hpp"
#include "bernalg/reduction.hpp"
#include "bernalg/render.hpp"

namespace {

using bernalg::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  bool format_given = false;
  std::optional<int> order;
  int jobs = 1;
  std::string out;
};

Rational parse_rational(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed rational '" + text + "'");
  }
}

int parse_int(const std::string& text) {
  const Rational r = parse_rational(text);
  if (!r.is_integer()) throw UsageError("expected an integer, got '" + text + "'");
  return static_cast<int>(r.to_long());
}

// "3", "1/2", "2..30", "0,1/2,7/3" or a mixture like "1..3,7".
std::vector<Rational> parse_values(const std::string& text) {
  std::vector<Rational> values;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    const auto dots = piece.find("..");
    if (dots == std::string::npos) {
      values.push_back(parse_rational(piece));
      continue;
    }
    const int lo = parse_int(piece.substr(0, dots));
    const int hi = parse_int(piece.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range '" + piece + "'");
    for (int v = lo; v <= hi; ++v) values.emplace_back(v);
  }
  if (values.empty()) throw UsageError("no values in '" + text + "'");
  return values;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const Rational& r : parse_values(text)) {
    if (!r.is_integer()) throw UsageError("expected integers, got '" + text + "'");
    out.push_back(static_cast<int>(r.to_long()));
  }
  return out;
}

void emit_values(std::ostream& os, const Globals& g, const std::vector<std::string>& labels,
                 const std::vector<Rational>& values) {
  if (g.format == "json") {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.str());
    os << arr.dump() << '\n';
    return;
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (g.format == "latex") {
      os << labels[i] << "=" << bernalg::render_latex(values[i]) << '\n';
    } else {
      os << values[i] << '\n';
    }
  }
}

// ---------------------------------------------------------------------------

struct BernArgs {
  std::string first;
  std::string second;
  std::string at;
  int order = 1;
};

int cmd_bern(const std::string& kind, const BernArgs& a, const Globals& g, std::ostream& os) {
  std::vector<std::string> labels;
  std::vector<Rational> values;
  if (kind == "num") {
    for (int i : parse_ints(a.first)) {
      if (i < 0) throw UsageError("index must be nonnegative");
      labels.push_back("B_{" + std::to_string(i) + "}");
      values.push_back(bernalg::bernoulli_number(i));
    }
  } else if (kind == "num-order") {
    for (int n : parse_ints(a.first)) {
      for (int i : parse_ints(a.second)) {
        if (n < 0 || i < 0) throw UsageError("order and index must be nonnegative");
        labels.push_back("B^{(" + std::to_string(n) + ")}_{" + std::to_string(i) + "}");
        values.push_back(bernalg::bernoulli_number_order(n, i));
      }
    }
  } else {
    if (a.at.empty()) {
      const int i = parse_int(a.first);
      if (i < 0 || a.order != 1) throw UsageError("poly without --at needs a nonnegative index and order 1");
      const bernalg::Poly p = bernalg::bernoulli_polynomial(i);
      if (g.format == "json") {
        os << bernalg::to_json(p).dump() << '\n';
      } else if (g.format == "latex") {
        os << "B_{" << i << "}(X)=" << bernalg::render_latex(p) << '\n';
      } else {
        os << p.str("X") << '\n';
      }
      return kExitOk;
    }
    if (a.order < 0) throw UsageError("order must be nonnegative");
    for (int i : parse_ints(a.first)) {
      if (i < 0) throw UsageError("index must be nonnegative");
      for (const Rational& x : parse_values(a.at)) {
        labels.push_back("B^{(" + std::to_string(a.order) + ")}_{" + std::to_string(i) + "}(" +
                         bernalg::render_latex(x) + ")");
        values.push_back(bernalg::bernoulli_poly_value(a.order, i, x));
      }
    }
  }
  emit_values(os, g, labels, values);
  return kExitOk;
}

int cmd_stirling(const std::string& n_text, const std::string& k_text, const Globals& g, std::ostream& os) {
  std::vector<std::string> labels;
  std::vector<Rational> values;
  for (int n : parse_ints(n_text)) {
    if (n < 0) throw UsageError("n must be nonnegative");
    std::vector<int> ks;
    if (k_text.empty()) {
      for (int k = 0; k <= n; ++k) ks.push_back(k);
    } else {
      ks = parse_ints(k_text);
    }
    for (int k : ks) {
      labels.push_back("S(" + std::to_string(n) + "," + std::to_string(k) + ")");
      values.emplace_back(bernalg::stirling(n, k));
    }
  }
  emit_values(os, g, labels, values);
  return kExitOk;
}

int cmd_pf(const std::string& kind, const std::vector<std::string>& args, const Globals& g, std::ostream& os) {
  auto line = [&](const std::string& name, const bernalg::Poly& p) {
    if (g.format == "latex") {
      os << name << "=" << bernalg::render_latex(p) << '\n';
    } else {
      os << name << " = " << p.str("X") << '\n';
    }
  };
  try {
    if (kind == "g") {
      if (args.size() != 2) throw UsageError("pf g needs m n");
      const int m = parse_int(args[0]);
      const int n = parse_int(args[1]);
      const bernalg::GPair p = bernalg::g_pair(m, n);
      if (g.format == "json") {
        os << json{{"m", m}, {"n", n}, {"l", p.l}, {"g_mn", bernalg::to_json(p.g_mn)}, {"g_nm", bernalg::to_json(p.g_nm)}}
                  .dump()
           << '\n';
        return kExitOk;
      }
      line("g_{" + std::to_string(m) + "," + std::to_string(n) + "}", p.g_mn);
      line("g_{" + std::to_string(n) + "," + std::to_string(m) + "}", p.g_nm);
      return kExitOk;
    }
    if (args.size() != 3) throw UsageError("pf hf needs k l n");
    const int k = parse_int(args[0]);
    const int l = parse_int(args[1]);
    const int n = parse_int(args[2]);
    const bernalg::HFPair p = bernalg::h_f(k, l, n);
    if (g.format == "json") {
      os << json{{"k", k}, {"l", l}, {"n", n}, {"h", bernalg::to_json(p.h)}, {"f", bernalg::to_json(p.f)}}.dump()
         << '\n';
      return kExitOk;
    }
    const std::string suffix = "^{(" + std::to_string(k) + ")}_{" + std::to_string(l) + "," + std::to_string(n) + "}";
    line("h" + suffix, p.h);
    line("f" + suffix, p.f);
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_reduce(const std::string& expr, bool first_order, std::string emit, const Globals& g, std::ostream& os) {
  if (emit.empty()) emit = g.format;
  bernalg::BElement x;
  try {
    x = bernalg::parse_element(expr);
  } catch (const bernalg::ParseError& e) {
    throw UsageError(bernalg::format_parse_error(expr, e));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!first_order) {
    if (emit == "json") {
      os << bernalg::to_json(x).dump() << '\n';
    } else if (emit == "latex") {
      os << bernalg::render_latex(x) << '\n';
    } else {
      os << bernalg::render_text(x) << '\n';
    }
    return kExitOk;
  }
  const bernalg::DCombination d = bernalg::reduce_to_first_order(x);
  if (!bernalg::semantically_equal(d, x)) {
    std::cerr << "internal error: reduction is not equal to its input\n";
    return kExitFailed;
  }
  if (emit == "json") {
    os << json{{"element", bernalg::to_json(x)}, {"combination", bernalg::to_json(d)}}.dump() << '\n';
  } else if (emit == "latex") {
    os << bernalg::render_latex(d) << '\n';
  } else {
    os << bernalg::render_text(d) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

// Global flags given after the identity name end up among the extras.
bool apply_global(Globals& g, const std::string& flag, const std::string& value) {
  if (flag == "format") {
    if (value != "text" && value != "json" && value != "latex") throw UsageError("--format must be text, json or latex");
    g.format = value;
    g.format_given = true;
  } else if (flag == "order") {
    g.order = parse_int(value);
    if (*g.order < 0) throw UsageError("--order must be nonnegative");
  } else if (flag == "jobs") {
    g.jobs = parse_int(value);
    if (g.jobs < 1) throw UsageError("--jobs must be positive");
  } else if (flag == "out") {
    g.out = value;
  } else {
    return false;
  }
  return true;
}

int cmd_verify(const std::string& name, const std::vector<std::string>& extras, Globals& g, std::ostream& os) {
  const bernalg::IdentityEntry* entry = bernalg::find_identity(name);
  if (entry == nullptr) {
    std::string known;
    for (const auto& s : bernalg::identity_catalog()) known += " " + s.name;
    throw UsageError("unknown identity '" + name + "'; known:" + known);
  }

  std::vector<std::optional<std::vector<Rational>>> values(entry->params.size());
  for (std::size_t i = 0; i < extras.size(); ++i) {
    std::string flag = extras[i];
    std::string value;
    if (flag.rfind("--", 0) != 0) throw UsageError("unexpected argument '" + flag + "'");
    flag = flag.substr(2);
    if (const auto eq = flag.find('='); eq != std::string::npos) {
      value = flag.substr(eq + 1);
      flag = flag.substr(0, eq);
    } else {
      if (i + 1 >= extras.size()) throw UsageError("--" + flag + " needs a value");
      value = extras[++i];
    }
    if (apply_global(g, flag, value)) continue;
    std::size_t slot = entry->params.size();
    for (std::size_t p = 0; p < entry->params.size(); ++p) {
      if (entry->params[p].name == flag) slot = p;
    }
    if (slot == entry->params.size()) throw UsageError(name + " has no parameter --" + flag);
    values[slot] = parse_values(value);
  }

  std::vector<std::vector<Rational>> grid{{}};
  for (std::size_t p = 0; p < values.size(); ++p) {
    if (!values[p]) throw UsageError(name + " needs --" + entry->params[p].name);
    std::vector<std::vector<Rational>> next;
    for (const auto& prefix : grid) {
      for (const auto& v : *values[p]) {
        auto row = prefix;
        row.push_back(v);
        next.push_back(std::move(row));
      }
    }
    grid = std::move(next);
  }

  std::vector<std::optional<bernalg::IdentityReport>> reports(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < grid.size(); i = cursor++) {
      try {
        reports[i] = entry->run(grid[i], g.order);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(g.jobs, static_cast<int>(grid.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& e : errors) {
    if (!e) continue;
    try {
      std::rethrow_exception(e);
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
  }

  bool all = true;
  const std::string format = g.format_given ? g.format : "json";
  for (const auto& r : reports) {
    all = all && r->verified;
    if (format == "json") {
      os << bernalg::to_json(*r).dump() << '\n';
    } else if (format == "latex") {
      os << r->latex << '\n';
    } else {
      os << (r->verified ? "verified " : "FAILED   ") << r->name;
      for (const auto& p : r->params) os << ' ' << p.name << '=' << p.value;
      os << "  lhs=" << r->lhs << " rhs=" << r->rhs << (r->degenerate ? "  (empty sums)" : "") << '\n';
    }
  }
  return all ? kExitOk : kExitFailed;
}

int cmd_selftest(bool as_json, std::ostream& os) {
  const auto results = bernalg::run_acceptance();
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (as_json) {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"id", r.id},
                     {"title", r.title},
                     {"passed", r.passed},
                     {"seconds", r.seconds},
                     {"limit_seconds", r.limit_seconds},
                     {"checks", r.checks},
                     {"detail", r.detail}});
    }
    os << json{{"passed", all}, {"criteria", arr}}.dump(2) << '\n';
  } else {
    for (const auto& r : results) os << bernalg::format_result(r) << '\n';
    int passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;
    os << passed << "/" << results.size() << " criteria passed\n";
  }
  return all ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebra of Bernoulli-type Laurent series"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->each([&](const std::string&) { g.format_given = true; });
  app.add_option("--order", g.order, "Series bound override")->check(CLI::NonNegativeNumber);
  app.add_option("--jobs", g.jobs, "Worker threads for verification grids")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Write output to this file");

  auto* bern = app.add_subcommand("bern", "Bernoulli numbers and polynomials");
  bern->require_subcommand(1);
  BernArgs bern_args;
  auto* bern_num = bern->add_subcommand("num", "B_i");
  bern_num->add_option("i", bern_args.first, "Index, range a..b or list")->required();
  auto* bern_order = bern->add_subcommand("num-order", "B^(n)_i");
  bern_order->add_option("n", bern_args.first, "Order")->required();
  bern_order->add_option("i", bern_args.second, "Index")->required();
  auto* bern_poly = bern->add_subcommand("poly", "B^(n)_i(x)");
  bern_poly->add_option("i", bern_args.first, "Index")->required();
  bern_poly->add_option("--at", bern_args.at, "Evaluation point(s)");
  bern_poly->add_option("--n", bern_args.order, "Order");

  auto* stir = app.add_subcommand("stirling", "Stirling numbers of the second kind");
  std::string stir_n;
  std::string stir_k;
  stir->add_option("n", stir_n)->required();
  stir->add_option("k", stir_k);

  auto* pf = app.add_subcommand("pf", "Partial-fraction polynomials");
  pf->require_subcommand(1);
  std::vector<std::string> pf_args;
  auto* pf_g = pf->add_subcommand("g", "g_{m,n} and g_{n,m}");
  pf_g->add_option("args", pf_args, "m n")->required()->expected(2);
  auto* pf_hf = pf->add_subcommand("hf", "h^(k)_{l,n} and f^(k)_{l,n}");
  pf_hf->add_option("args", pf_args, "k l n")->required()->expected(3);

  auto* reduce = app.add_subcommand("reduce", "Reduce products of series");
  reduce->require_subcommand(1);
  auto* product = reduce->add_subcommand("product", "Product of an expression into atoms");
  std::string expr;
  bool first_order = false;
  std::string emit;
  product->add_option("expr", expr, "Expression such as \"B(2T)*B(3T)\"")->required();
  product->add_flag("--to-first-order", first_order, "Lower to a D-combination of first-order generators");
  product->add_option("--emit", emit, "text, latex or json")->check(CLI::IsMember({"text", "json", "latex"}));

  auto* verify = app.add_subcommand("verify", "Verify an identity over a parameter grid");
  verify->allow_extras();
  verify->fallthrough(false);
  std::string identity;
  verify->add_option("name", identity, "Identity name")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  bool selftest_json = false;
  selftest->add_flag("--json", selftest_json, "Machine-readable summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ostringstream out;
  int code = kExitOk;
  try {
    if (bern->parsed()) {
      const std::string kind = bern_num->parsed() ? "num" : (bern_order->parsed() ? "num-order" : "poly");
      code = cmd_bern(kind, bern_args, g, out);
    } else if (stir->parsed()) {
      code = cmd_stirling(stir_n, stir_k, g, out);
    } else if (pf->parsed()) {
      code = cmd_pf(pf_g->parsed() ? "g" : "hf", pf_args, g, out);
    } else if (reduce->parsed()) {
      code = cmd_reduce(expr, first_order, emit, g, out);
    } else if (verify->parsed()) {
      code = cmd_verify(identity, verify->remaining(), g, out);
    } else if (selftest->parsed()) {
      code = cmd_selftest(selftest_json || g.format == "json", out);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }

  if (g.out.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(g.out);
    if (!file) {
      std::cerr << "error: cannot write " << g.out << '\n';
      return kExitUsage;
    }
    file << out.str();
  }
  return code;
}
