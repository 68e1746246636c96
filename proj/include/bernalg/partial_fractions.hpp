#pragma once

#include <vector>

#include "bernalg/poly.hpp"

namespace bernalg {

/// Decomposition
///   1/((X^n-1)(X^m-1)) = l^2/(mn(X^l-1)^2) + g_nm/(X^n-1) + g_mn/(X^m-1)
/// with l = gcd(m, n), deg g_mn < m - l and deg g_nm < n - l.
struct GPair {
  int m = 0;
  int n = 0;
  int l = 0;
  Poly g_mn;
  Poly g_nm;
};

/// Throws std::invalid_argument for m == n or non-positive input.
GPair g_pair(int m, int n);

/// Decomposition
///   1/((X^l-1)^k (X^n-1)) = h/(X^l-1)^{k+1} + f/(X^n-1)
/// with l | n, deg h < k*l and deg f < n - l.
struct HFPair {
  int k = 0;
  int l = 0;
  int n = 0;
  Poly h;
  Poly f;
};

/// h comes from the coefficient recurrence in powers of (X-1), f from exact
/// division. Throws std::invalid_argument unless l | n and l < n.
HFPair h_f(int k, int l, int n);

/// h^{(k)}_{1,n} solved directly as the inverse of 1+X+...+X^{n-1} modulo
/// (X-1)^k. Independent of the recurrence used by h_f.
Poly h_by_bezout(int k, int n);

/// Factor (X^k - 1)^power of a product of cyclotomic-type denominators.
struct PowerFactor {
  int k = 0;
  int power = 0;
};

/// Term g/(X^m - 1)^l of a decomposition.
struct FractionTerm {
  Poly g;
  int m = 0;
  int l = 0;
};

/// 1/prod (X^{k_i}-1)^{n_i} = sum g_j/(X^{m_j}-1)^{l_j} with every l_j <= sum n_i,
/// built by pairwise merging. The result is checked by clearing denominators
/// before it is returned. Throws std::invalid_argument for an empty list.
std::vector<FractionTerm> decompose_power_product(const std::vector<PowerFactor>& factors);

/// Exact check that sum terms == 1/prod factors.
bool recombines(const std::vector<PowerFactor>& factors, const std::vector<FractionTerm>& terms);

bool recombines(const GPair& p);
bool recombines(const HFPair& p);

}  // namespace bernalg
