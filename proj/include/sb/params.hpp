#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "sb/gamma.hpp"

namespace sb {

enum class Kind { A, AA, B, BB, C, KS_Gprime, KS_G };
std::string kind_name(Kind k);
Kind parse_kind(const std::string& s);

struct ParamPoint {
  int n = 0;
  bool exact = true;
  Q lambda, nu;
  std::complex<double> lambda_c, nu_c;

  int m() const { return n - 1; }
  static ParamPoint make(int n, const Q& lambda, const Q& nu);
  static ParamPoint numeric(int n, std::complex<double> lambda, std::complex<double> nu);
};

// "p/q" and integers are exact; decimals and "a+bi" are floating
struct Scalar {
  bool exact = true;
  Q q;
  std::complex<double> z;
};
Scalar parse_scalar(const std::string& s);
ParamPoint parse_point(int n, const std::string& lambda, const std::string& nu);

void validate(const ParamPoint& p);
const ParamPoint& require_exact(const ParamPoint& p);

// λ+ν = n-1-2k
std::optional<long> slashslash_k(const ParamPoint& p);
// ν-λ = 2l
std::optional<long> parallel_l(const ParamPoint& p);
bool in_Leven(const ParamPoint& p);
bool in_Lodd(const ParamPoint& p);
bool in_X(const ParamPoint& p);
bool nu_neg_int(const ParamPoint& p);  // ν ∈ -ℕ
bool in_reducible_lattice(const ParamPoint& p);
std::optional<std::string> octant(const ParamPoint& p);

struct RegionReport {
  bool in_slashslash = false, in_parallel = false, in_X = false;
  bool in_Leven = false, in_Lodd = false;
  std::optional<long> k, l;
  bool in_Omega0 = false, in_Omega1 = false, in_Omega2 = false;
  std::optional<std::string> octant;
  std::string weyl_class;
};

enum class Tri { out, in, within_tolerance };
std::string tri_name(Tri t);

struct NumericRegionReport {
  Tri in_slashslash = Tri::out, in_parallel = Tri::out, in_X = Tri::out;
  Tri in_Leven = Tri::out, in_Lodd = Tri::out;
  Tri in_Omega0 = Tri::out, in_Omega1 = Tri::out, in_Omega2 = Tri::out;
};

RegionReport classify(const ParamPoint& p);
NumericRegionReport classify_numeric(const ParamPoint& p);

int multiplicity_principal(const ParamPoint& p);

struct MultFactors {
  int mTT = 0, mTF = 0, mFF = 0;
};
MultFactors multiplicity_factors(int n, int i, int j);
int multiplicity_I_to_factor(int n, const Q& lambda, int j, char target);

struct BasisReport {
  int dim_H = 0, dim_H_sing = 0, dim_H_diff = 0;
  std::vector<Kind> basis;
};
BasisReport basis_of_H(const ParamPoint& p);

std::string weyl_orbit_class(const ParamPoint& p);

}  // namespace sb
