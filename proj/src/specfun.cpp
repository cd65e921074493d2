#include "sb/specfun.hpp"

#include <cmath>

namespace sb {

Poly1 gegenbauer_poly(int N, const Q& mu) {
  if (N < 0) throw std::invalid_argument("negative degree");
  std::vector<Q> c(N + 1, Q(0));
  for (int j = 0; 2 * j <= N; ++j) {
    Q a = poch(mu, N - j) / (factorial(j) * factorial(N - 2 * j));
    a *= pow_q(2, N - 2 * j);
    c[N - 2 * j] = (j % 2) ? Q(-a) : a;
  }
  return Poly1(std::move(c));
}

Q gegenbauer(int N, const Q& mu, const Q& t) { return gegenbauer_poly(N, mu).eval(t); }

double gegenbauer(int N, const Q& mu, double t) { return gegenbauer_poly(N, mu).eval(t); }

Poly2 gegenbauer2(int N, const Q& mu) {
  Poly1 g = gegenbauer_poly(N, mu);
  Poly2 r;
  for (int j = 0; 2 * j <= N; ++j) r.add(j, N - 2 * j, g.at(N - 2 * j));
  return r;
}

Q a_coeff(int j, int l, const Q& mu) {
  if (j < 0 || j > l) return 0;
  Q r = pow_q(2, 2 * l - 2 * j) / (factorial(j) * factorial(2 * l - 2 * j));
  for (int i = 1; i <= l - j; ++i) r *= mu + l + i - 1;
  return (j % 2) ? Q(-r) : r;
}

Poly2 c_tilde(int l, const Q& mu) {
  Poly2 r;
  for (int j = 0; j <= l; ++j) r.add(j, 2 * l - 2 * j, a_coeff(j, l, mu));
  return r;
}

Poly1 chebyshev_t(int N) {
  Poly1 a({Q(1)}), b({Q(0), Q(1)});
  if (N == 0) return a;
  Poly1 two_t({Q(0), Q(2)});
  for (int k = 1; k < N; ++k) {
    Poly1 c = two_t * b - a;
    a = b;
    b = c;
  }
  return b;
}

std::vector<GammaMonomial> c_renorm_coeffs(int N, const Q& mu) {
  if (is_int(mu) && mu < 0) throw domain_error("c_renorm: mu a negative integer");
  std::vector<GammaMonomial> out;
  if (mu == 0) {
    Poly1 t = chebyshev_t(N);
    for (int j = 0; 2 * j <= N; ++j) out.push_back(gm_rational(t.at(N - 2 * j)));
    return out;
  }
  if (N == 0) {
    out.push_back(GmBuilder().gamma(mu + 1).done());
    return out;
  }
  for (int j = 0; 2 * j <= N; ++j) {
    Q r = pow_q(2, N - 2 * j) / (factorial(j) * factorial(N - 2 * j));
    if (j % 2) r = -r;
    out.push_back(GmBuilder().q(r).lin(mu + frac(N, 2)).gamma(mu + N - j).done());
  }
  return out;
}

double c_renorm(int N, const Q& mu, double t) {
  auto cs = c_renorm_coeffs(N, mu);
  double r = 0;
  for (size_t j = 0; j < cs.size(); ++j)
    r += gm_eval_f64(cs[j]).real() * std::pow(t, N - 2 * static_cast<int>(j));
  return r;
}

GammaMonomial pab_g(const Q& a, const Q& b, int l1, int l2) {
  int L = l1 + l2;
  return GmBuilder()
      .pow2(a + b + L - 1)
      .gamma(a + l1)
      .gamma(b + l2)
      .inv_gamma(a)
      .inv_gamma(b)
      .inv_gamma(a + b + L)
      .done();
}

std::map<std::pair<int, int>, Q> g_expansion(const Poly1& h) {
  // s = ((1+s) - (1-s))/2
  std::map<std::pair<int, int>, Q> out;
  for (int d = 0; d <= h.degree(); ++d) {
    if (h.c[d] == 0) continue;
    for (int i = 0; i <= d; ++i) {
      Q w = h.c[d] * binom_q(d, i) / pow_q(2, d);
      if ((d - i) % 2) w = -w;
      auto& slot = out[{d - i, i}];
      slot += w;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

GammaSum pab(const Q& a, const Q& b, const Poly1& h) {
  GammaSum s;
  for (auto& [key, w] : g_expansion(h)) s.add(gm_mul(gm_rational(w), pab_g(a, b, key.first, key.second)));
  return s;
}

GammaMonomial sphere_integral_gegenbauer(int n, int N, const Q& p) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (N % 2) return gm_zero();
  return GmBuilder()
      .pow2(3 - p - n)
      .pi(n + 1)
      .gamma(Q(n + N - 1))
      .gamma(p + 1)
      .inv_gamma(frac(n - 1, 2))
      .inv_gamma(Q(N + 1))
      .inv_gamma((p - N + 2) / 2)
      .inv_gamma((p + N + n) / 2)
      .done();
}

GammaMonomial ct_int2(int n, int N, const Q& a) {
  return GmBuilder()
      .pi(2)
      .pow2(-(a + n - 1))
      .gamma(Q(n + N - 1))
      .gamma(a + 1)
      .inv_gamma(Q(N + 1))
      .inv_gamma((a - N + 2) / 2)
      .inv_gamma((a + N + n) / 2)
      .done();
}

Poly1 hyp2f1_poly(const Q& a, const Q& b, const Q& c) {
  long stop = -1;
  if (is_int(a) && a <= 0) stop = -to_long(a);
  if (is_int(b) && b <= 0) {
    long sb = -to_long(b);
    stop = stop < 0 ? sb : std::min(stop, sb);
  }
  if (stop < 0) throw domain_error("hyp2f1_poly: series does not terminate");
  std::vector<Q> cs;
  Q t = 1;
  for (long k = 0; k <= stop; ++k) {
    cs.push_back(t);
    if (c + k == 0 && k < stop) throw domain_error("hyp2f1: c hits a nonpositive integer");
    t *= (a + k) * (b + k) / ((c + k) * (k + 1));
  }
  return Poly1(std::move(cs));
}

Q hyp2f1(const Q& a, const Q& b, const Q& c, const Q& z) { return hyp2f1_poly(a, b, c).eval(z); }

double hyp2f1(double a, double b, double c, double z) {
  auto nonpos_int = [](double x) { return x <= 0 && x == std::floor(x); };
  bool term = nonpos_int(a) || nonpos_int(b);
  if (!term && std::fabs(z) >= 1) throw domain_error("hyp2f1: |z| >= 1 for a non-terminating series");
  double s = 1, t = 1;
  for (int k = 0; k < 10000; ++k) {
    if (c + k == 0) throw domain_error("hyp2f1: c is a nonpositive integer");
    double r = (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
    t *= r;
    s += t;
    if (t == 0) return s;
    double rn = std::fabs((a + k + 1) * (b + k + 1) / ((c + k + 1) * (k + 2)) * z);
    if (rn < 1 && std::fabs(t) * rn / (1 - rn) <= 1e-16 * std::fabs(s)) return s;
  }
  throw domain_error("hyp2f1: series did not converge in 10^4 terms");
}

namespace {

long double rgamma(long double x) {
  if (x <= 0 && x == std::floor(x)) return 0;
  return 1 / std::tgamma(x);
}

long double i_series(long double nu, long double h) {
  // sum (z/2)^{2j} / (j! Γ(j+nu+1)), h = (z/2)^2
  long double s = 0, p = 1;
  for (int j = 0; j < 500; ++j) {
    long double t = p * rgamma(j + nu + 1);
    s += t;
    p *= h / (j + 1);
    if (j > 5 && std::fabs(t) < 1e-22L * std::fabs(s)) break;
  }
  return s;
}

}  // namespace

double kbessel_renorm(const Q& nu, double z) {
  if (is_int(nu)) throw domain_error("kbessel_renorm: integer order");
  if (!(z > 0)) throw domain_error("kbessel_renorm: z must be positive");
  long double v = nu.get_d();
  long double h = z / 2.0L;
  long double sinp = std::sin(v * static_cast<long double>(M_PI));
  long double a = std::pow(h, -2 * v) * i_series(-v, h * h);
  long double b = i_series(v, h * h);
  return static_cast<double>(static_cast<long double>(M_PI) / (2 * sinp) * (a - b));
}

}  // namespace sb
