#pragma once

#include <array>
#include <string>
#include <vector>

#include "sb/gamma.hpp"
#include "sb/params.hpp"
#include "sb/poly.hpp"
#include "sb/polyops.hpp"

namespace sb {

// F_λ[C̃̃_N^{n/2-1}(ω_n), h]
struct KFiniteVector {
  int N = 0;
  Poly1 h;
  static KFiniteVector spherical() { return {0, Poly1({Q(1)})}; }
};

void require_domain(Kind k, const ParamPoint& p);

GammaMonomial spherical_action(Kind k, const ParamPoint& p);

struct KFiniteValue {
  GammaSum value;
  // unreduced product form, present for A and B
  bool has_factors = false;
  GammaMonomial scale;  // 1 for A, (-1)^k 2^k (2k-1)!! for B
  GammaMonomial prefactor;
  GammaSum pab;
  Q product;
};

KFiniteValue kfinite_pairing(Kind k, const ParamPoint& p, const KFiniteVector& v);
GammaMonomial kfinite_prefactor(int n, int N, const Q& lambda);

enum class Residue { B_of_A, C_of_A, C_of_B };
enum class Functional { T_after_A, T_after_B, T_after_C_to_B, T_after_C_to_C, A_after_T_G, AA_after_T };
std::string residue_name(Residue r);
std::string functional_name(Functional f);
Residue parse_residue(const std::string& s);
Functional parse_functional(const std::string& s);

GammaMonomial residue_constant(Residue which, const ParamPoint& p);
GammaMonomial functional_constant(Functional which, const ParamPoint& p);

enum class Support { full, hyperplane, point, zero };
std::string support_name(Support s);

struct KernelDescriptor {
  Kind kind;
  ParamPoint params;
  enum class Form { density, delta_transverse, delta_point } form;
  GammaMonomial normalization;
  // delta_transverse: (i, coeff) on |x|^{-2ν-2i} δ^{(2k-2i)}(x_n)
  // delta_point: (j, coeff) on (Δ^j δ)(x) δ^{(2l-2j)}(x_n)
  std::vector<std::pair<int, Q>> coefficients;
  Support support;
};

KernelDescriptor kernel_descriptor(Kind k, const ParamPoint& p);

struct ImageClass {
  enum class Tag { zero, F, T, full_J } tag;
  long j = 0;
  std::string str() const;
};

ImageClass image_of(Kind k, const ParamPoint& p);
bool spherical_in_kernel(Kind k, const ParamPoint& p);

// scale * poly(s, t) with s = |ξ|^2, t = ξ_n; one entry per coefficient
struct FourierPoly {
  GammaMonomial scale;
  Poly2 poly;
};
bool fourier_eq(const FourierPoly& a, const FourierPoly& b);
double fourier_A_kernel(const ParamPoint& p, double xi_norm, double xi_n);
FourierPoly fourier_A_terminating(const ParamPoint& p);  // FcA with a = -l
FourierPoly fourier_A_parallel(const ParamPoint& p);     // closed polynomial form on //
FourierPoly fourier_C_kernel(const ParamPoint& p);       // (-1)^l C̃_{2l}(-s, t)

double kernel_kA(const ParamPoint& p, const std::vector<double>& x);
struct PdeResidual {
  double euler = 0, normal = 0;
  double max() const { return euler > normal ? euler : normal; }
};
PdeResidual pde_residual(const ParamPoint& p, const std::vector<std::vector<double>>& samples,
                         double fd_step);

// Λ[N] ∪ {λ-ν = -2j} ∪ {λ+ν = n+2j}, j < N/2
bool zn_predicted(const ParamPoint& p, int N);
int zn_degree_bound(const ParamPoint& p, int N);
bool kfinite_A_zero_upto(const ParamPoint& p, int N, int max_deg);

struct IdentityCase {
  std::string name;
  GammaSum lhs, rhs;
  bool holds() const { return lhs == rhs; }
};
std::vector<IdentityCase> residue_identities(const ParamPoint& p, int max_N);
std::vector<IdentityCase> functional_identities(const ParamPoint& p);

}  // namespace sb
