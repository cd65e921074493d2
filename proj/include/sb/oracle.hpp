#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sb/params.hpp"
#include "sb/sbo.hpp"

namespace sb {

struct QuadConfig {
  enum class Method { tanh_sinh, gauss_legendre } method = Method::tanh_sinh;
  int levels = 15;  // tanh-sinh refinements, or Gauss-Legendre panels
  double rel_tol = 1e-13;
  std::vector<double> split_points;

  void check() const;
};
std::string method_name(QuadConfig::Method m);

struct QuadResult {
  double value = 0;
  double est_error = 0;
};

// 2^{-λ} R S / (Γ((λ+ν-n+1)/2) Γ((λ-ν)/2)) on Ω0
QuadResult quad_pairing(const ParamPoint& p, const KFiniteVector& v, const QuadConfig& cfg);

// I(y) / (1+|y|^2)^{ν-m} for the m=2 convolution |x-y|^{2(ν-m)} * (1+|x|^2)^{-ν}
std::vector<double> quad_ks_convolution(int m, double nu, const std::vector<std::vector<double>>& ys,
                                        const QuadConfig& cfg, int theta_points = 96);
double ks_convolution_constant(int m, double nu);

double kbessel_T1_identity(int m, const Q& nu, const std::vector<double>& xi);

Q taylor_apply_juhl(int n, const Q& lambda, const Q& nu);
// Δ^j (1+|x|^2)^{j-m/2} at 0
Q taylor_d1(int m, int j);

// points in rmin <= |x| <= rmax with |x_n| >= margin
std::vector<std::vector<double>> annulus_samples(int n, int count, std::uint64_t seed, double rmin,
                                                 double rmax, double margin);

// pairing of the B kernel expansion with F_λ[ψ_N, h]; n even, ν off m/2 + ℤ/2
GammaSum kernel_pairing_B(const ParamPoint& p, const KFiniteVector& v);
// C̃ applied to the Taylor data of F_λ[ψ_N, h] at the origin
GammaSum taylor_pairing_C(const ParamPoint& p, const KFiniteVector& v);

}  // namespace sb
