#include "sb/sbo.hpp"

#include <cmath>
#include <set>

#include "sb/specfun.hpp"

namespace sb {

namespace {

const Q kHalf = frac(1, 2);

std::string pt(const ParamPoint& p) {
  return "(n=" + std::to_string(p.n) + ", λ=" + p.lambda.get_str() + ", ν=" + p.nu.get_str() + ")";
}

long need_k(const ParamPoint& p) {
  auto k = slashslash_k(p);
  if (!k) throw domain_error("(λ,ν) not in \\\\ " + pt(p));
  return *k;
}

long need_l(const ParamPoint& p) {
  auto l = parallel_l(p);
  if (!l) throw domain_error("(λ,ν) not in // " + pt(p));
  return *l;
}

ParamPoint dual_nu(const ParamPoint& p) { return ParamPoint::make(p.n, p.lambda, Q(p.n - 1) - p.nu); }

}  // namespace

void require_domain(Kind k, const ParamPoint& p) {
  require_exact(p);
  switch (k) {
    case Kind::AA:
      if (!nu_neg_int(p)) throw domain_error("AA needs ν ∈ -ℕ " + pt(p));
      break;
    case Kind::B:
      need_k(p);
      break;
    case Kind::BB:
      if (p.n % 2 == 0 || !in_Leven(p)) throw domain_error("BB needs n odd and (λ,ν) ∈ L_even " + pt(p));
      break;
    case Kind::C:
      need_l(p);
      break;
    default:
      break;
  }
}

GammaMonomial spherical_action(Kind k, const ParamPoint& p) {
  require_domain(k, p);
  const int m = p.m();
  switch (k) {
    case Kind::A:
      return GmBuilder().pi(m).inv_gamma(p.lambda).done();
    case Kind::AA:
      return GmBuilder().pi(m).gamma(Aff{(p.lambda - p.nu) / 2, kHalf}).inv_gamma(Aff{p.lambda, 1}).done();
    case Kind::B: {
      long kk = need_k(p);
      return GmBuilder()
          .q(kk % 2 ? -1 : 1)
          .q(pow_q(2, kk) * double_factorial_odd(kk))
          .pi(m)
          .inv_gamma(p.lambda)
          .done();
    }
    case Kind::BB: {
      long kk = need_k(p), l = need_l(p);
      long M = -to_long(p.lambda);
      Q c = 2 * factorial(M) * factorial(2 * kk) / (factorial(kk) * factorial(l));
      if ((m / 2) % 2) c = -c;
      return GmBuilder().q(c).pi(m).done();
    }
    case Kind::C: {
      long l = need_l(p);
      Q c = pow_q(2, 2 * l) * poch(p.lambda, 2 * l) / factorial(l);
      return gm_rational(l % 2 ? Q(-c) : c);
    }
    case Kind::KS_Gprime:
      return GmBuilder().pi(m).inv_gamma(p.nu).done();
    case Kind::KS_G:
      return GmBuilder().pi(p.n).inv_gamma(p.lambda).done();
  }
  throw std::logic_error("unreachable");
}

GammaMonomial kfinite_prefactor(int n, int N, const Q& lambda) {
  return GmBuilder()
      .pow2(3 - lambda - n)
      .pi(n)
      .gamma(Q(n + N - 1))
      .inv_gamma(frac(n - 1, 2))
      .inv_gamma(Q(N + 1))
      .done();
}

namespace {

// sum over the g_{l1,l2} expansion of h, every term entire in λ at fixed ν
GammaSum kfinite_terms(const ParamPoint& p, int N, const Poly1& h, bool renormalized) {
  const Q& lam = p.lambda;
  const Q& nu = p.nu;
  const int n = p.n;
  Q a = (lam - nu + N) / 2, b = (lam + nu + N) / 2;
  GmBuilder prod;
  for (int j = 0; j < N / 2; ++j) {
    if (!renormalized) prod.lin(Aff{(lam - nu) / 2 + j, kHalf});
    prod.lin(Aff{(lam + nu - n) / 2 - j, kHalf});
  }
  GammaMonomial pr = prod.done();
  GammaMonomial c = kfinite_prefactor(n, N, lam);
  GammaSum s;
  if (pr.zero) return s;
  for (auto& [key, w] : g_expansion(h)) {
    int l1 = key.first, l2 = key.second, L = l1 + l2;
    GmBuilder t;
    t.q(w).mul(c).mul(pr).pow2(a + b + L - 1);
    t.gamma(Aff{a + l1, kHalf}).gamma(Aff{b + l2, kHalf});
    t.inv_gamma(Aff{b, kHalf}).inv_gamma(Aff{a + b + L, 1});
    if (!renormalized) t.inv_gamma(Aff{a, kHalf});
    s.add(t.done());
  }
  return s;
}

Q b_scale(long k) {
  Q c = pow_q(2, k) * double_factorial_odd(k);
  return k % 2 ? Q(-c) : c;
}

}  // namespace

KFiniteValue kfinite_pairing(Kind k, const ParamPoint& p, const KFiniteVector& v) {
  if (k != Kind::A && k != Kind::AA && k != Kind::B && k != Kind::BB)
    throw domain_error("kfinite_pairing is defined for A, AA, B, BB");
  require_domain(k, p);
  if (v.N < 0) throw std::invalid_argument("negative K-type");
  KFiniteValue r;
  if (v.N % 2) return r;
  if (k == Kind::A || k == Kind::B) {
    Q lam = p.lambda, nu = p.nu;
    Q a = (lam - nu + v.N) / 2, b = (lam + nu + v.N) / 2;
    r.has_factors = true;
    r.prefactor = kfinite_prefactor(p.n, v.N, lam);
    r.pab = pab(a, b, v.h);
    r.product = 1;
    for (int j = 0; j < v.N / 2; ++j) r.product *= ((lam - nu) / 2 + j) * ((lam + nu - p.n) / 2 - j);
    r.scale = gm_rational(k == Kind::B ? b_scale(need_k(p)) : Q(1));
    if (r.product != 0) r.value = kfinite_terms(p, v.N, v.h, false).scaled(r.scale);
    return r;
  }
  GammaSum aa = kfinite_terms(p, v.N, v.h, true);
  if (k == Kind::AA) {
    r.value = aa;
  } else {
    long kk = need_k(p);
    Q inv_q = factorial(2 * kk) / factorial(kk);
    if (kk % 2) inv_q = -inv_q;
    r.value = aa.scaled(gm_rational(inv_q));
  }
  return r;
}

std::string residue_name(Residue r) {
  switch (r) {
    case Residue::B_of_A:
      return "B_of_A";
    case Residue::C_of_A:
      return "C_of_A";
    case Residue::C_of_B:
      return "C_of_B";
  }
  return "?";
}

std::string functional_name(Functional f) {
  switch (f) {
    case Functional::T_after_A:
      return "T_after_A";
    case Functional::T_after_B:
      return "T_after_B";
    case Functional::T_after_C_to_B:
      return "T_after_C_to_B";
    case Functional::T_after_C_to_C:
      return "T_after_C_to_C";
    case Functional::A_after_T_G:
      return "A_after_T_G";
    case Functional::AA_after_T:
      return "AA_after_T";
  }
  return "?";
}

Residue parse_residue(const std::string& s) {
  for (Residue r : {Residue::B_of_A, Residue::C_of_A, Residue::C_of_B})
    if (residue_name(r) == s) return r;
  throw std::invalid_argument("unknown residue constant: " + s);
}

Functional parse_functional(const std::string& s) {
  for (Functional f : {Functional::T_after_A, Functional::T_after_B, Functional::T_after_C_to_B,
                       Functional::T_after_C_to_C, Functional::A_after_T_G, Functional::AA_after_T})
    if (functional_name(f) == s) return f;
  throw std::invalid_argument("unknown functional constant: " + s);
}

GammaMonomial residue_constant(Residue which, const ParamPoint& p) {
  require_exact(p);
  const int m = p.m();
  switch (which) {
    case Residue::B_of_A: {
      long k = need_k(p);
      return gm_rational(1 / b_scale(k));
    }
    case Residue::C_of_A: {
      long l = need_l(p);
      return GmBuilder().q(l % 2 ? -1 : 1).q(factorial(l) / pow_q(2, 2 * l)).pi(m).inv_gamma(p.nu).done();
    }
    case Residue::C_of_B: {
      long k = need_k(p), l = need_l(p);
      return GmBuilder()
          .q((l - k) % 2 ? -1 : 1)
          .q(factorial(l) * double_factorial_odd(k))
          .pow2(Q(k - 2 * l))
          .pi(m)
          .inv_gamma(p.nu)
          .done();
    }
  }
  throw std::logic_error("unreachable");
}

GammaMonomial functional_constant(Functional which, const ParamPoint& p) {
  require_exact(p);
  const int m = p.m();
  switch (which) {
    case Functional::T_after_A:
      return GmBuilder().pi(m).inv_gamma(p.nu).done();
    case Functional::T_after_B: {
      long k = need_k(p);
      return GmBuilder()
          .q(factorial(2 * k))
          .pow2(Q(-2 * k))
          .pi(2 * m)
          .inv_gamma(p.nu)
          .inv_gamma(Q(m) - p.nu)
          .done();
    }
    case Functional::T_after_C_to_B: {
      long l = need_l(p);
      return gm_rational(pow_q(2, 2 * l) / factorial(2 * l));
    }
    case Functional::T_after_C_to_C: {
      long k = need_k(p), l = need_l(p);
      return GmBuilder()
          .q((k + l) % 2 ? -1 : 1)
          .q(factorial(k) / factorial(l))
          .pow2(Q(2 * l - 2 * k))
          .pi(m)
          .inv_gamma(Q(m) - p.nu)
          .done();
    }
    case Functional::A_after_T_G:
      return GmBuilder().pi(p.n).inv_gamma(Q(p.n) - p.lambda).done();
    case Functional::AA_after_T:
      if (!nu_neg_int(p)) throw domain_error("AA_after_T needs ν ∈ -ℕ " + pt(p));
      return gm_zero();
  }
  throw std::logic_error("unreachable");
}

std::string support_name(Support s) {
  switch (s) {
    case Support::full:
      return "full";
    case Support::hyperplane:
      return "hyperplane_S^{n-1}";
    case Support::point:
      return "point_p+";
    case Support::zero:
      return "zero";
  }
  return "?";
}

KernelDescriptor kernel_descriptor(Kind k, const ParamPoint& p) {
  if (k == Kind::KS_G || k == Kind::KS_Gprime)
    throw domain_error("no symmetry breaking kernel for Knapp-Stein operators");
  require_domain(k, p);
  KernelDescriptor d;
  d.kind = k;
  d.params = p;
  bool ss = slashslash_k(p).has_value();
  bool par = parallel_l(p).has_value();
  bool x = ss && par;
  bool le = in_Leven(p);
  const Q& lam = p.lambda;
  const Q& nu = p.nu;
  auto transverse = [&]() {
    long kk = need_k(p);
    for (long i = 0; i <= kk; ++i) {
      Q c = factorial(2 * kk) * poch(nu, i) / (factorial(2 * kk - 2 * i) * factorial(i));
      d.coefficients.push_back({static_cast<int>(i), i % 2 ? Q(-c) : c});
    }
  };
  switch (k) {
    case Kind::A:
      d.form = KernelDescriptor::Form::density;
      d.normalization = GmBuilder().inv_gamma((lam + nu - p.n + 1) / 2).inv_gamma((lam - nu) / 2).done();
      if (le)
        d.support = Support::zero;
      else if (ss && !x)
        d.support = Support::hyperplane;
      else if (par)
        d.support = Support::point;
      else
        d.support = Support::full;
      break;
    case Kind::AA:
      d.form = KernelDescriptor::Form::density;
      d.normalization = GmBuilder().inv_gamma((lam + nu - p.n + 1) / 2).done();
      d.support = ss ? Support::hyperplane : Support::full;
      break;
    case Kind::B:
      d.form = KernelDescriptor::Form::delta_transverse;
      d.normalization = GmBuilder().inv_gamma((lam - nu) / 2).done();
      transverse();
      if (p.n % 2 && le)
        d.support = Support::zero;
      else
        d.support = x ? Support::point : Support::hyperplane;
      break;
    case Kind::BB:
      d.form = KernelDescriptor::Form::delta_transverse;
      d.normalization = gm_rational(1);
      transverse();
      d.support = Support::hyperplane;
      break;
    case Kind::C: {
      d.form = KernelDescriptor::Form::delta_point;
      d.normalization = gm_rational(1);
      long l = need_l(p);
      for (int j = 0; j <= l; ++j) d.coefficients.push_back({j, juhl_coeff(p.n, lam, nu, j)});
      d.support = Support::point;
      break;
    }
    default:
      break;
  }
  return d;
}

std::string ImageClass::str() const {
  switch (tag) {
    case Tag::zero:
      return "zero";
    case Tag::F:
      return "F(" + std::to_string(j) + ")";
    case Tag::T:
      return "T(" + std::to_string(j) + ")";
    case Tag::full_J:
      return "full_J";
  }
  return "?";
}

ImageClass image_of(Kind k, const ParamPoint& p) {
  if (k == Kind::KS_G || k == Kind::KS_Gprime)
    throw domain_error("image_of covers symmetry breaking operators only");
  require_domain(k, p);
  const int m = p.m();
  using T = ImageClass::Tag;
  bool odd = p.n % 2 == 1;
  bool le = in_Leven(p);
  if (nu_neg_int(p)) {
    long j = -to_long(p.nu);
    switch (k) {
      case Kind::A:
        return le ? ImageClass{T::zero, j} : ImageClass{T::F, j};
      case Kind::AA:
        return {T::F, j};
      case Kind::B:
        return (odd && le) ? ImageClass{T::zero, j} : ImageClass{T::F, j};
      case Kind::BB:
        return {T::F, j};
      case Kind::C:
        return {T::full_J, j};
      default:
        break;
    }
  }
  if (is_int(p.nu) && p.nu >= m) {
    long j = to_long(p.nu) - m;
    Q s = p.lambda + j;
    bool neg_even = is_int(s) && s <= 0 && to_long(s) % 2 == 0;
    switch (k) {
      case Kind::A:
        return neg_even ? ImageClass{T::T, j} : ImageClass{T::full_J, j};
      case Kind::B:
        return {T::T, j};
      case Kind::C:
        return (neg_even && odd) ? ImageClass{T::T, j} : ImageClass{T::full_J, j};
      default:
        break;
    }
  }
  throw domain_error("image_of needs ν ∈ -ℕ or ν ∈ n-1+ℕ " + pt(p));
}

bool spherical_in_kernel(Kind k, const ParamPoint& p) { return gm_is_zero(spherical_action(k, p)); }

bool fourier_eq(const FourierPoly& a, const FourierPoly& b) {
  std::set<std::pair<int, int>> keys;
  for (auto& [key, c] : a.poly.c) keys.insert(key);
  for (auto& [key, c] : b.poly.c) keys.insert(key);
  for (auto& key : keys) {
    GammaMonomial x = gm_mul(a.scale, gm_rational(a.poly.at(key.first, key.second)));
    GammaMonomial y = gm_mul(b.scale, gm_rational(b.poly.at(key.first, key.second)));
    if (!gm_eq(x, y)) return false;
  }
  return true;
}

namespace {

double rgamma(double x) {
  if (x <= 0 && x == std::floor(x)) return 0;
  return 1 / std::tgamma(x);
}

double real_lambda(const ParamPoint& p) { return p.exact ? p.lambda.get_d() : p.lambda_c.real(); }
double real_nu(const ParamPoint& p) { return p.exact ? p.nu.get_d() : p.nu_c.real(); }

}  // namespace

double fourier_A_kernel(const ParamPoint& p, double xi_norm, double xi_n) {
  validate(p);
  if (!(std::fabs(xi_n) < xi_norm)) throw domain_error("fourier_A_kernel needs |ξ_n| < |ξ|");
  double l = real_lambda(p), v = real_nu(p);
  int m = p.m();
  double pre = std::pow(M_PI, m / 2.0) * std::pow(xi_norm, v - l) * rgamma(v) / std::pow(2.0, v - l);
  double z = -(xi_n * xi_n) / (xi_norm * xi_norm);
  return pre * hyp2f1((l - v) / 2, (l + v + 1 - p.n) / 2, 0.5, z);
}

FourierPoly fourier_A_terminating(const ParamPoint& p) {
  long l = need_l(p);
  FourierPoly f;
  f.scale = GmBuilder().pi(p.m()).pow2(Q(-2 * l)).inv_gamma(p.nu).done();
  Poly1 z = hyp2f1_poly(Q(-l), (p.lambda + p.nu + 1 - p.n) / 2, kHalf);
  for (int q = 0; q <= z.degree(); ++q)
    f.poly.add(static_cast<int>(l) - q, 2 * q, q % 2 ? Q(-z.at(q)) : z.at(q));
  return f;
}

FourierPoly fourier_A_parallel(const ParamPoint& p) {
  long l = need_l(p);
  FourierPoly f;
  f.scale = GmBuilder().q(factorial(l)).pi(p.m()).pow2(Q(-2 * l)).inv_gamma(p.nu).done();
  Poly2 c = c_tilde(static_cast<int>(l), p.lambda - frac(p.m(), 2));
  for (auto& [key, v] : c.c) f.poly.add(key.first, key.second, key.first % 2 ? Q(-v) : v);
  return f;
}

FourierPoly fourier_C_kernel(const ParamPoint& p) {
  long l = need_l(p);
  FourierPoly f;
  f.scale = gm_rational(l % 2 ? -1 : 1);
  Poly2 c = c_tilde(static_cast<int>(l), p.lambda - frac(p.m(), 2));
  for (auto& [key, v] : c.c) f.poly.add(key.first, key.second, key.first % 2 ? Q(-v) : v);
  return f;
}

double kernel_kA(const ParamPoint& p, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != p.n) throw std::invalid_argument("kernel_kA: point dimension mismatch");
  double l = real_lambda(p), v = real_nu(p);
  double r2 = 0;
  for (double c : x) r2 += c * c;
  return std::pow(std::fabs(x.back()), l + v - p.n) * std::pow(r2, -v);
}

PdeResidual pde_residual(const ParamPoint& p, const std::vector<std::vector<double>>& samples,
                         double fd_step) {
  validate(p);
  double l = real_lambda(p), v = real_nu(p);
  if (!(l - v > 0 && l + v > p.n - 1)) throw domain_error("pde_residual needs (λ,ν) ∈ Ω0");
  if (!(fd_step > 0)) throw std::invalid_argument("fd_step must be positive");
  PdeResidual res;
  const int n = p.n;
  for (auto& x : samples) {
    if (static_cast<int>(x.size()) != n) throw std::invalid_argument("sample dimension mismatch");
    double r2 = 0;
    for (double c : x) r2 += c * c;
    if (std::fabs(x.back()) < 0.1 || std::sqrt(r2) < 0.1)
      throw domain_error("sample closer than 0.1 to the singular set");
    double F = kernel_kA(p, x);
    std::vector<double> grad(n);
    for (int i = 0; i < n; ++i) {
      auto xp = x, xm = x;
      xp[i] += fd_step;
      xm[i] -= fd_step;
      grad[i] = (kernel_kA(p, xp) - kernel_kA(p, xm)) / (2 * fd_step);
    }
    double E = 0;
    for (int i = 0; i < n; ++i) E += x[i] * grad[i];
    res.euler = std::max(res.euler, std::fabs(E - (l - v - n) * F));
    for (int j = 0; j < n - 1; ++j) {
      double r = (l - n) * x[j] * F - x[j] * E + 0.5 * r2 * grad[j];
      res.normal = std::max(res.normal, std::fabs(r));
    }
  }
  return res;
}

bool zn_predicted(const ParamPoint& p, int N) {
  require_exact(p);
  const Q& l = p.lambda;
  const Q& v = p.nu;
  for (int j = 0; j < N / 2; ++j) {
    if (l - v == -2 * j) return true;
    if (l + v == p.n + 2 * j) return true;
  }
  if (is_int(l) && is_int(v)) {
    Q av = v < 0 ? Q(-v) : v;
    if (l + N + av <= 0 && to_long(l + N - v) % 2 == 0) return true;
  }
  return false;
}

int zn_degree_bound(const ParamPoint& p, int N) {
  Q b = 2 - p.lambda - N;
  long c = to_long(floor_q(b)) + 1;
  return static_cast<int>(std::max<long>(6, c));
}

bool kfinite_A_zero_upto(const ParamPoint& p, int N, int max_deg) {
  for (int d = 0; d <= max_deg; ++d)
    if (!kfinite_pairing(Kind::A, p, {N, Poly1::monomial(d)}).value.is_zero()) return false;
  return true;
}

std::vector<IdentityCase> residue_identities(const ParamPoint& p, int max_N) {
  require_exact(p);
  std::vector<IdentityCase> out;
  const GammaMonomial A = spherical_action(Kind::A, p);
  bool ss = slashslash_k(p).has_value(), par = parallel_l(p).has_value();
  std::vector<Poly1> hs = {Poly1({Q(1)}), Poly1({Q(0), Q(1)}), Poly1({Q(0), Q(0), Q(1)}),
                           Poly1({Q(1), Q(0), Q(-1)})};
  if (ss) {
    GammaMonomial q = residue_constant(Residue::B_of_A, p);
    out.push_back({"B_residue_spherical", A, gm_mul(q, spherical_action(Kind::B, p))});
    for (int N = 0; N <= max_N; N += 2)
      for (size_t i = 0; i < hs.size(); ++i) {
        KFiniteVector v{N, hs[i]};
        out.push_back({"B_residue_kfinite_N" + std::to_string(N) + "_h" + std::to_string(i),
                       kfinite_pairing(Kind::A, p, v).value, kfinite_pairing(Kind::B, p, v).value.scaled(q)});
      }
  }
  if (par)
    out.push_back({"C_residue_spherical", A,
                   gm_mul(residue_constant(Residue::C_of_A, p), spherical_action(Kind::C, p))});
  if (ss && par) {
    out.push_back({"C_of_B_residue_spherical", spherical_action(Kind::B, p),
                   gm_mul(residue_constant(Residue::C_of_B, p), spherical_action(Kind::C, p))});
    out.push_back({"qAB_qBC_eq_qAC",
                   gm_mul(residue_constant(Residue::B_of_A, p), residue_constant(Residue::C_of_B, p)),
                   residue_constant(Residue::C_of_A, p)});
  }
  if (p.n % 2 == 1 && in_Leven(p)) {
    out.push_back({"AA_to_BB_residue_spherical", spherical_action(Kind::AA, p),
                   gm_mul(residue_constant(Residue::B_of_A, p), spherical_action(Kind::BB, p))});
    out.push_back({"BB_kfinite_vs_spherical", kfinite_pairing(Kind::BB, p, KFiniteVector::spherical()).value,
                   gm_mul(GmBuilder().gamma(frac(p.n, 2)).done(), spherical_action(Kind::BB, p))});
  }
  if (nu_neg_int(p))
    out.push_back({"AA_kfinite_vs_spherical", kfinite_pairing(Kind::AA, p, KFiniteVector::spherical()).value,
                   gm_mul(GmBuilder().gamma(frac(p.n, 2)).done(), spherical_action(Kind::AA, p))});
  out.push_back({"A_kfinite_vs_spherical", kfinite_pairing(Kind::A, p, KFiniteVector::spherical()).value,
                 gm_mul(GmBuilder().gamma(frac(p.n, 2)).done(), A)});
  return out;
}

std::vector<IdentityCase> functional_identities(const ParamPoint& p) {
  require_exact(p);
  std::vector<IdentityCase> out;
  const int m = p.m();
  ParamPoint d = dual_nu(p);
  GammaMonomial ks = spherical_action(Kind::KS_Gprime, p);
  GammaMonomial pTA = functional_constant(Functional::T_after_A, p);
  out.push_back(
      {"T_after_A_sph", gm_mul(ks, spherical_action(Kind::A, p)), gm_mul(pTA, spherical_action(Kind::A, d))});
  ParamPoint pg = ParamPoint::make(p.n, Q(p.n) - p.lambda, p.nu);
  out.push_back({"A_after_T_sph", gm_mul(spherical_action(Kind::A, pg), spherical_action(Kind::KS_G, p)),
                 gm_mul(functional_constant(Functional::A_after_T_G, p), spherical_action(Kind::A, p))});
  out.push_back({"T_after_T_sph", gm_mul(ks, spherical_action(Kind::KS_Gprime, d)),
                 GmBuilder().pi(2 * m).inv_gamma(Q(m) - p.nu).inv_gamma(p.nu).done()});
  bool ss = slashslash_k(p).has_value(), par = parallel_l(p).has_value();
  if (ss) {
    GammaMonomial pTB = functional_constant(Functional::T_after_B, p);
    out.push_back({"elementary_qAB_pTB_eq_pTA_qAC", gm_mul(residue_constant(Residue::B_of_A, p), pTB),
                   gm_mul(pTA, residue_constant(Residue::C_of_A, d))});
    out.push_back({"T_after_B_sph", gm_mul(ks, spherical_action(Kind::B, p)),
                   gm_mul(pTB, spherical_action(Kind::C, d))});
  }
  if (par) {
    GammaMonomial pCB = functional_constant(Functional::T_after_C_to_B, p);
    out.push_back({"elementary_pTCB_pTB_eq_TT", gm_mul(pCB, functional_constant(Functional::T_after_B, d)),
                   GmBuilder().pi(2 * m).inv_gamma(p.nu).inv_gamma(Q(m) - p.nu).done()});
    out.push_back({"T_after_C_to_B_sph", gm_mul(ks, spherical_action(Kind::C, p)),
                   gm_mul(pCB, spherical_action(Kind::B, d))});
  }
  if (ss && par) {
    GammaMonomial pCC = functional_constant(Functional::T_after_C_to_C, p);
    out.push_back(
        {"elementary_pTCC_eq_pTCB_qBC", pCC,
         gm_mul(functional_constant(Functional::T_after_C_to_B, p), residue_constant(Residue::C_of_B, d))});
    out.push_back({"T_after_C_to_C_sph", gm_mul(ks, spherical_action(Kind::C, p)),
                   gm_mul(pCC, spherical_action(Kind::C, d))});
  }
  if (nu_neg_int(p))
    out.push_back({"T_after_AA_sph", gm_mul(ks, spherical_action(Kind::AA, p)),
                   functional_constant(Functional::AA_after_T, p)});
  return out;
}

}  // namespace sb
