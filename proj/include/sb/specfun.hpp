#pragma once

#include <vector>

#include "sb/gamma.hpp"
#include "sb/poly.hpp"

namespace sb {

Poly1 gegenbauer_poly(int N, const Q& mu);
Q gegenbauer(int N, const Q& mu, const Q& t);
double gegenbauer(int N, const Q& mu, double t);
// C_N^mu(s,t) = s^{N/2} C_N^mu(t/sqrt s)
Poly2 gegenbauer2(int N, const Q& mu);

Q a_coeff(int j, int l, const Q& mu);
Poly2 c_tilde(int l, const Q& mu);

// coefficient of t^{N-2j} in C̃̃_N^mu, j = 0..N/2
std::vector<GammaMonomial> c_renorm_coeffs(int N, const Q& mu);
double c_renorm(int N, const Q& mu, double t);
Poly1 chebyshev_t(int N);

GammaMonomial pab_g(const Q& a, const Q& b, int l1, int l2);
GammaSum pab(const Q& a, const Q& b, const Poly1& h);
// h(s) = sum over (l1,l2) of w * (1-s)^l1 (1+s)^l2
std::map<std::pair<int, int>, Q> g_expansion(const Poly1& h);

GammaMonomial sphere_integral_gegenbauer(int n, int N, const Q& p);
GammaMonomial ct_int2(int n, int N, const Q& a);

Q hyp2f1(const Q& a, const Q& b, const Q& c, const Q& z);
Poly1 hyp2f1_poly(const Q& a, const Q& b, const Q& c);
double hyp2f1(double a, double b, double c, double z);

double kbessel_renorm(const Q& nu, double z);

}  // namespace sb
