#pragma once

#include <map>
#include <string>

#include "bernalg/bfrak.hpp"
#include "bernalg/bipoly.hpp"
#include "bernalg/weyl.hpp"

namespace bernalg {

/// D-linear combination sum_g op_g(g) over first-order generators
/// g = B(bT) e^{aT} (n = 1) or e^{aT} (n = 0), always with m = 0.
class DCombination {
 public:
  DCombination() = default;

  const std::map<Atom, WeylOp>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  WeylOp op(const Atom& generator) const;
  /// Throws std::invalid_argument unless generator has m = 0 and n <= 1.
  void add(const Atom& generator, const WeylOp& op);

  friend bool operator==(const DCombination&, const DCombination&) = default;

 private:
  std::map<Atom, WeylOp> terms_;
};

/// sum_g op_g(g) as an element.
BElement to_element(const DCombination& d);

/// Exact semantic equality of an element and a combination.
bool semantically_equal(const DCombination& d, const BElement& x);

/// One step of order lowering: atom = op(generator) with generator of B-power
/// atom.n() - 1 and m = 0, using
///   B^{n+1}(bT) e^{aT} = (1 - bT + aT/n - (T/n) d/dT)(B^n(bT) e^{aT}).
struct Lowered {
  Atom generator;
  WeylOp op;
};

/// Throws std::invalid_argument when at.n() < 2.
Lowered lower_order(const Atom& at);

/// Lowers every atom down to B-power at most one.
DCombination reduce_to_first_order(const BElement& x);

/// Exact product of two elements, again as a combination of atoms.
BElement product_reduce(const BElement& x, const BElement& y);

/// B^{-k} = T^{-k}(e^T - 1)^k expanded into B-free atoms. k >= 1.
BElement negative_power_expand(int k);

/// Stirling number of the second kind S(n, j) from a memoized table.
Integer stirling(int n, int j);

/// f_n(U, V) with d^n B/dT^n = T^{-n} f_n(T, B), from the Stirling closed form.
BiPoly f_n_closed(int n);

/// f_n by the recursion f_n = (1 - n + U d_U + V d_V - UV d_V - V^2 d_V) f_{n-1}, f_0 = V.
BiPoly f_n_inductive(int n);

/// sum c U^i V^j  ->  sum c T^i B^j.
BElement substitute_t_b(const BiPoly& p);

/// {B -> phi} with phi B = T^{m+n} (d^m B/dT^m)(d^n B/dT^n) = f_m(T,B) f_n(T,B).
DCombination agoh_dilcher_reduce(int m, int n);

}  // namespace bernalg
