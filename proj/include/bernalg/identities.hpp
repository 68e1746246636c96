#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bernalg/bfrak.hpp"
#include "bernalg/reduction.hpp"
#include "bernalg/weyl.hpp"

namespace bernalg {

/// scale^index * B^{(order)}_index(argument). Order 0 is the monomial
/// argument^index.
struct BernSymbol {
  int order = 1;
  int index = 0;
  Rational argument;
  Rational scale{1};

  Rational value() const;
  std::string latex() const;
  friend bool operator==(const BernSymbol&, const BernSymbol&) = default;
};

struct IdentityTerm {
  Rational coefficient;
  std::vector<BernSymbol> factors;
};

/// sum lhs = sum rhs, both sides products of Bernoulli symbols.
struct CoefficientIdentity {
  std::vector<IdentityTerm> lhs;
  std::vector<IdentityTerm> rhs;
  int order = 0;  // exponent of T that was equated
  std::string source;

  Rational lhs_value() const;
  Rational rhs_value() const;
  std::string latex() const;
};

/// Product c * prod factors of atoms, left unreduced so that coefficients can
/// be read off factor by factor.
struct ProductTerm {
  Rational coefficient{1};
  std::vector<Atom> factors;
};

/// m! times the coefficient of T^m on both sides of lhs = rhs. The two sides
/// are checked to be equal as series first (std::invalid_argument otherwise)
/// and the resulting identity is checked numerically (std::logic_error).
CoefficientIdentity coefficient_identity(const std::vector<ProductTerm>& lhs, const DCombination& rhs, int m,
                                         std::string source = {});

struct IdentityParam {
  std::string name;
  Rational value;
};

struct IdentityReport {
  std::string name;
  std::vector<IdentityParam> params;
  Rational lhs;
  Rational rhs;
  bool verified = false;
  bool degenerate = false;  // empty sums on both sides
  std::string latex;
  std::optional<CoefficientIdentity> machine;
};

/// Default series bound for identity work: 2*order + 8.
int working_bound(int highest_order);

IdentityReport verify_euler(int m);
IdentityReport verify_recurrence(int n);
IdentityReport verify_multiplication(int m, int n, const Rational& a);
IdentityReport verify_lowering(int n, int i, const Rational& a);
IdentityReport verify_euler_polynomial(int n, const Rational& a, const Rational& b);
IdentityReport verify_agoh_dilcher_example(int n);
IdentityReport verify_rademacher(int n);
/// T^2 (B')^2 - (2n-1) B^2 = phi B as an exact relation in the ring.
IdentityReport verify_rademacher_relation(int n);
IdentityReport verify_23(int n);
IdentityReport verify_23_even(int n);
IdentityReport verify_235(int n);
IdentityReport verify_miki(int n);
/// B(sT)B((1-s)T) relation as a series identity over Q[s], up to T^bound.
IdentityReport verify_miki_s_relation(int bound);
/// The T^n coefficient of the s-relation as a Q[s] identity, then divided by
/// s(1-s) and integrated over [0,1].
IdentityReport verify_miki_s_coefficient(int n);
/// Sum form, and (k+1)! [T^{k+1}] e^T phi B with phi = (2k+1) T^k d^k + T^{k+1} d^{k+1}.
/// Verified only when both vanish. The operator coefficient does not vanish.
IdentityReport verify_kaneko(int k, std::optional<int> bound = std::nullopt);
/// Sum form, and (k+1)! [T^{2k+1}] e^T phi B with phi = d T^{k+1} d^k
/// = (k+1) T^k d^k + T^{k+1} d^{k+1}. This coefficient equals the sum.
IdentityReport verify_kaneko_shifted(int k, std::optional<int> bound = std::nullopt);
IdentityReport verify_stirling_gf(int n, int k);
IdentityReport verify_f_derivative(int n, int bound = 30);
/// Beta integral against direct polynomial integration.
IdentityReport verify_beta(int i, int j);
/// int_0^1 (1 - s^n - (1-s)^n)/(s(1-s)) ds = 2 H_{n-1}.
IdentityReport verify_harmonic_integral(int n);

/// int_0^1 s^i (1-s)^j ds/(s(1-s)) = (i-1)!(j-1)!/(i+j-1)!.
Rational beta_integral(int i, int j);
/// int_0^1 p(s) ds.
Rational integrate_unit(const Poly& p);

/// Registry used by the command line.
struct ParamInfo {
  std::string name;
  bool rational = false;  // integers otherwise
};

struct IdentityEntry {
  std::string name;
  std::string summary;
  std::vector<ParamInfo> params;
  /// Throws std::invalid_argument when the parameters violate the identity's range.
  /// `order` overrides the series bound where one is used.
  std::function<IdentityReport(const std::vector<Rational>&, std::optional<int> order)> run;
};

const std::vector<IdentityEntry>& identity_catalog();
const IdentityEntry* find_identity(std::string_view name);

}  // namespace bernalg
