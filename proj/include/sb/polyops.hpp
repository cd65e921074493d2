#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sb/gamma.hpp"

namespace sb {

struct MultiPoly {
  int n_vars = 0;
  std::map<std::vector<int>, Q> terms;

  MultiPoly() = default;
  explicit MultiPoly(int n) : n_vars(n) {}
  static MultiPoly constant(int n, const Q& c);
  static MultiPoly var(int n, int i);

  void add(const std::vector<int>& e, const Q& a);
  Q value_at_zero() const;
  int degree() const;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const MultiPoly& o) const { return n_vars == o.n_vars && terms == o.terms; }
  std::string str() const;
};

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const Q& k, const MultiPoly& a);
MultiPoly truncate(const MultiPoly& p, int max_degree);
MultiPoly diff(const MultiPoly& p, int var);
MultiPoly laplacian(const MultiPoly& p, const std::vector<int>& vars);
MultiPoly d_dxn(const MultiPoly& p);
MultiPoly restrict_last(const MultiPoly& p);

// sum of c * Δ_{R^{n-1}}^j (d/dx_n)^i, optionally followed by x_n := 0
struct DiffOp {
  int n = 0;
  bool restricted = false;
  std::map<std::pair<int, int>, GammaSum> terms;

  void add(int j, int i, const GammaSum& c);
  bool tangential() const;  // no d/dx_n terms
  std::string str() const;
};

DiffOp identity_op(int n);
DiffOp rest_op(int n);
DiffOp laplacian_op(int n, int j);       // Δ_{R^{n-1}}^j
DiffOp laplacian_full_op(int n, int j);  // Δ_{R^n}^j
DiffOp dxn_op(int n, int i);
DiffOp scaled(const DiffOp& op, const GammaMonomial& c);
DiffOp compose(const DiffOp& a, const DiffOp& b);  // a ∘ b
bool op_eq(const DiffOp& a, const DiffOp& b);
MultiPoly apply(const DiffOp& op, const MultiPoly& p);

DiffOp juhl_operator(int n, const Q& lambda, const Q& nu);
Q juhl_coeff(int n, const Q& lambda, const Q& nu, int j);
DiffOp knapp_stein_residue_op(int m, int j);

MultiPoly taylor_power(int n_vars, const Q& expo, int max_order);  // (1+|x|^2)^expo
MultiPoly taylor_coeffs_conformal_factor(int n, const Q& lambda, int max_order);

Q nlap_closed(int n, const Q& lambda, int l, int j);
Q lap0_closed(int m, const Q& mu, int j);
GammaMonomial d1_constant(int m, int j);

bool gs_rational(const GammaSum& s, Q& out);

}  // namespace sb
