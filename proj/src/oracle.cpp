#include "sb/oracle.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <functional>
#include <random>

#include "sb/polyops.hpp"
#include "sb/specfun.hpp"

namespace sb {

void QuadConfig::check() const {
  if (!(rel_tol >= 1e-13)) throw std::invalid_argument("rel_tol must be at least 1e-13");
  if (levels < 1) throw std::invalid_argument("levels must be positive");
}

std::string method_name(QuadConfig::Method m) {
  return m == QuadConfig::Method::tanh_sinh ? "tanh_sinh" : "gauss_legendre";
}

namespace {

// f(x, distance to a, distance to b)
using EndpointFn = std::function<double(double, double, double)>;

QuadResult integrate_piece(const EndpointFn& f, double a, double b, const QuadConfig& cfg) {
  QuadResult r;
  double avg = (a + b) / 2, half = (b - a) / 2;
  if (cfg.method == QuadConfig::Method::tanh_sinh) {
    boost::math::quadrature::tanh_sinh<double> ts(cfg.levels);
    auto g = [&](double z, double zc) {
      double da = z < 0 ? -zc : 1 + z;  // 1+z
      double db = z > 0 ? zc : 1 - z;   // 1-z
      return f(avg + half * z, half * da, half * db);
    };
    double err = 0;
    r.value = half * ts.integrate(g, cfg.rel_tol, &err);
    r.est_error = std::fabs(half) * err;
    return r;
  }
  using GL = boost::math::quadrature::gauss<double, 30>;
  double w = (b - a) / cfg.levels;
  for (int i = 0; i < cfg.levels; ++i) {
    double lo = a + i * w, hi = i + 1 == cfg.levels ? b : lo + w;
    r.value += GL::integrate([&](double x) { return f(x, x - a, b - x); }, lo, hi);
  }
  r.est_error = std::fabs(r.value) * cfg.rel_tol;
  return r;
}

// splits keep endpoint distances exact for the outermost pieces only
QuadResult integrate(const EndpointFn& f, double a, double b, const QuadConfig& cfg) {
  std::vector<double> cuts = {a};
  for (double s : cfg.split_points)
    if (s > a && s < b) cuts.push_back(s);
  std::sort(cuts.begin() + 1, cuts.end());
  cuts.push_back(b);
  QuadResult total;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double lo = cuts[i], hi = cuts[i + 1];
    auto g = [&](double x, double dl, double dh) {
      double da = i == 0 ? dl : x - a;
      double db = i + 2 == cuts.size() ? dh : b - x;
      return f(x, da, db);
    };
    QuadResult q = integrate_piece(g, lo, hi, cfg);
    total.value += q.value;
    total.est_error += q.est_error;
  }
  return total;
}

double rgamma(double x) {
  if (x <= 0 && x == std::floor(x)) return 0;
  return 1 / std::tgamma(x);
}

double real_part(const ParamPoint& p, bool lambda) {
  if (p.exact) return (lambda ? p.lambda : p.nu).get_d();
  auto z = lambda ? p.lambda_c : p.nu_c;
  if (z.imag() != 0) throw domain_error("quadrature oracle needs real parameters");
  return z.real();
}

}  // namespace

QuadResult quad_pairing(const ParamPoint& p, const KFiniteVector& v, const QuadConfig& cfg) {
  validate(p);
  cfg.check();
  const double l = real_part(p, true), nu = real_part(p, false);
  const int n = p.n, N = v.N;
  if (!(l - nu > 0 && l + nu > n - 1)) throw domain_error("quad_pairing needs (λ,ν) ∈ Ω0");
  if (N < 0) throw std::invalid_argument("negative K-type");

  const double al = (l - nu + N - 2) / 2, be = (l + nu + N - 2) / 2;
  QuadResult R = integrate([&](double s, double d_lo,
                               double d_hi) { return std::pow(d_hi, al) * std::pow(d_lo, be) * v.h.eval(s); },
                           -1.0, 1.0, cfg);

  const double pexp = l + nu - n, w = (n - 3) / 2.0;
  const Q mu = frac(n - 2, 2);
  QuadConfig half = cfg;
  half.split_points.clear();
  // t = ±x on [0,1]: |t| = x, 1-t^2 = (1-x)(1+x)
  auto side = [&](double sign) {
    return integrate_piece(
        [&](double x, double d0, double d1) {
          return std::pow(d0, pexp) * std::pow(d1 * (1 + x), w) * c_renorm(N, mu, sign * x);
        },
        0.0, 1.0, half);
  };
  QuadResult sp = side(1), sm = side(-1);
  double vol = 2 * std::pow(M_PI, (n - 1) / 2.0) / std::tgamma((n - 1) / 2.0);
  double S = vol * (sp.value + sm.value);
  double S_err = vol * (sp.est_error + sm.est_error);

  double c = std::pow(2.0, -l) * rgamma((l + nu - n + 1) / 2) * rgamma((l - nu) / 2);
  QuadResult out;
  out.value = c * R.value * S;
  out.est_error = std::fabs(c) * (std::fabs(R.value) * S_err + std::fabs(S) * R.est_error);
  return out;
}

double ks_convolution_constant(int m, double nu) {
  return std::tgamma(nu - m / 2.0) * std::pow(M_PI, m / 2.0) / std::tgamma(nu);
}

std::vector<double> quad_ks_convolution(int m, double nu, const std::vector<std::vector<double>>& ys,
                                        const QuadConfig& cfg, int theta_points) {
  cfg.check();
  if (m != 2) throw domain_error("convolution oracle is implemented for m = 2 only");
  if (!(nu > 1 && nu < 2)) throw domain_error("convolution diverges unless m/2 < ν < m");
  if (theta_points < 8) throw std::invalid_argument("too few angular nodes");
  QuadConfig c = cfg;
  c.split_points.clear();
  std::vector<double> out;
  for (auto& y : ys) {
    if (y.size() != 2) throw std::invalid_argument("convolution samples must be 2-vectors");
    double total = 0;
    for (int t = 0; t < theta_points; ++t) {
      double th = 2 * M_PI * t / theta_points;
      double w0 = std::cos(th), w1 = std::sin(th);
      // ρ < 1 around y, then ρ = 1/v for the outer part
      QuadResult inner = integrate(
          [&](double r, double d0, double) {
            double a = y[0] + r * w0, b = y[1] + r * w1;
            return std::pow(d0, 2 * nu - 3) * std::pow(1 + a * a + b * b, -nu);
          },
          0.0, 1.0, c);
      QuadResult outer = integrate(
          [&](double s, double, double) {
            double a = s * y[0] + w0, b = s * y[1] + w1;
            return s * std::pow(s * s + a * a + b * b, -nu);
          },
          0.0, 1.0, c);
      total += inner.value + outer.value;
    }
    total *= 2 * M_PI / theta_points;
    double y2 = y[0] * y[0] + y[1] * y[1];
    out.push_back(total / std::pow(1 + y2, nu - m));
  }
  return out;
}

double kbessel_T1_identity(int m, const Q& nu, const std::vector<double>& xi) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (is_int(nu) || !(nu > 0 && nu < m)) throw domain_error("needs non-integer 0 < ν < m");
  Q ord = frac(m, 2) - nu;
  if (is_int(ord)) throw domain_error("K-Bessel order m/2-ν must be non-integer");
  const double v = nu.get_d(), pm = std::pow(M_PI, m / 2.0);
  double worst = 0;
  for (double z : xi) {
    if (!(z > 0)) throw std::invalid_argument("ξ samples must be positive");
    double lhs = std::pow(2.0, 2 * v - m) * pm / std::tgamma(m - v) * std::pow(z, m - 2 * v) *
                 (2 * pm / std::tgamma(v)) * kbessel_renorm(ord, z);
    double rhs = pm / std::tgamma(v) * (2 * pm / std::tgamma(m - v)) * kbessel_renorm(-ord, z);
    worst = std::max(worst, std::fabs(lhs - rhs) / std::fabs(rhs));
  }
  return worst;
}

Q taylor_apply_juhl(int n, const Q& lambda, const Q& nu) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  Q d = nu - lambda;
  if (!is_int(d) || d < 0 || to_long(d) % 2) throw domain_error("taylor_apply_juhl: (λ,ν) not in //");
  int l = static_cast<int>(to_long(d) / 2);
  MultiPoly f = taylor_power(n, -lambda, 2 * l);
  return apply(juhl_operator(n, lambda, nu), f).value_at_zero();
}

Q taylor_d1(int m, int j) {
  if (m < 1 || j < 0) throw std::invalid_argument("need m >= 1, j >= 0");
  MultiPoly f = taylor_power(m, Q(j) - frac(m, 2), 2 * j);
  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;
  for (int t = 0; t < j; ++t) f = laplacian(f, all);
  return f.value_at_zero();
}

std::vector<std::vector<double>> annulus_samples(int n, int count, std::uint64_t seed, double rmin,
                                                 double rmax, double margin) {
  if (n < 2 || count < 0) throw std::invalid_argument("bad sample request");
  if (!(rmin > 0 && rmax >= rmin && margin >= 0 && margin < rmax)) throw std::invalid_argument("bad annulus");
  std::mt19937_64 g(seed);
  auto u01 = [&]() { return static_cast<double>(g() >> 11) * 0x1.0p-53; };
  auto gauss = [&]() { return std::sqrt(-2 * std::log(1 - u01())) * std::cos(2 * M_PI * u01()); };
  std::vector<std::vector<double>> out;
  long tries = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++tries > 1000000) throw domain_error("annulus sampling: margin too restrictive");
    std::vector<double> x(n);
    double s = 0;
    for (auto& c : x) {
      c = gauss();
      s += c * c;
    }
    if (s == 0) continue;
    double r = rmin + (rmax - rmin) * u01();
    for (auto& c : x) c *= r / std::sqrt(s);
    if (std::fabs(x.back()) < margin || r < margin) continue;
    out.push_back(std::move(x));
  }
  return out;
}

GammaSum kernel_pairing_B(const ParamPoint& p, const KFiniteVector& v) {
  require_domain(Kind::B, p);
  if (p.n % 2) throw domain_error("kernel_pairing_B needs n even");
  if (is_int(2 * p.nu) && !is_int(p.nu)) throw domain_error("kernel_pairing_B needs ν off 1/2 + ℤ");
  GammaSum out;
  if (v.N < 0 || v.N % 2) return out;
  const int m = p.m(), N = v.N;
  const long k = *slashslash_k(p);
  const Q& lam = p.lambda;
  const Q& nu = p.nu;
  const Q m2 = frac(m, 2);
  auto cj = c_renorm_coeffs(N, frac(p.n - 2, 2));
  for (long i = 0; i <= k; ++i) {
    // c_i (2k-2i)! from the δ^{(2k-2i)} pairing
    Q ci = factorial(2 * k) * poch(nu, i) / factorial(i);
    if (i % 2) ci = -ci;
    const long upow = k - i;
    for (int j = 0; 2 * j <= N; ++j)
      for (int d = 0; d <= v.h.degree(); ++d) {
        if (v.h.at(d) == 0) continue;
        Q G = lam + N + d;
        for (int a = 0; a <= j; ++a)
          for (int b = 0; b <= d; ++b)
            for (int e = 0; e <= d - b; ++e) {
              long r = upow - (N / 2 - j) - a - b;
              if (r < 0) continue;
              Q c = ci * pow_q(2, N) * v.h.at(d) * binom_q(j, a) * binom_q(d, b) * binom_q(d - b, e) *
                    binom_q(-G, r);
              if ((b + e) % 2) c = -c;
              if (c == 0) continue;
              long E = j - a + e;
              Q gam = G + r;
              out.add(GmBuilder()
                          .q(c)
                          .mul(cj[j])
                          .pi(m)
                          .gamma(m2 - nu - i + E)
                          .gamma(gam + nu + i - E - m2)
                          .inv_gamma(m2)
                          .inv_gamma(gam)
                          .inv_gamma((lam - nu) / 2)
                          .done());
            }
      }
  }
  return out;
}

GammaSum taylor_pairing_C(const ParamPoint& p, const KFiniteVector& v) {
  require_domain(Kind::C, p);
  GammaSum out;
  if (v.N < 0 || v.N % 2) return out;
  const int n = p.n, N = v.N;
  const long l = *parallel_l(p);
  const int ord = static_cast<int>(2 * l);
  MultiPoly R(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 2;
    R.add(e, 1);
  }
  MultiPoly one = MultiPoly::constant(n, 1);
  DiffOp C = juhl_operator(n, p.lambda, p.nu);
  auto cj = c_renorm_coeffs(N, frac(n - 2, 2));
  for (int j = 0; 2 * j <= N; ++j) {
    MultiPoly head = one;
    for (int t = 0; t < N - 2 * j; ++t) head = head * MultiPoly::var(n, n - 1);
    for (int t = 0; t < j; ++t) head = truncate(head * R, ord);
    Q acc = 0;
    MultiPoly oneminus = one;
    for (int d = 0; d <= v.h.degree(); ++d) {
      if (d) oneminus = truncate(oneminus * (one - R), ord);
      if (v.h.at(d) == 0) continue;
      MultiPoly f = truncate(head * oneminus, ord);
      f = truncate(f * taylor_power(n, -(p.lambda + N + d), ord), ord);
      acc += v.h.at(d) * apply(C, f).value_at_zero();
    }
    if (acc != 0) out.add(gm_mul(gm_rational(pow_q(2, N) * acc), cj[j]));
  }
  return out;
}

}  // namespace sb
