#include "suites.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "sb/oracle.hpp"
#include "sb/polyops.hpp"
#include "sb/sbo.hpp"
#include "sb/specfun.hpp"

namespace sb {

namespace {

std::string pt(const ParamPoint& p) {
  return "n=" + std::to_string(p.n) + " λ=" + p.lambda.get_str() + " ν=" + p.nu.get_str();
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// runs body, turning exceptions into failed cases
void guarded(std::vector<CaseResult>& out, const std::string& name, const std::function<CaseResult()>& body) {
  try {
    out.push_back(body());
  } catch (const std::exception& e) {
    out.push_back({name, false, std::string("exception: ") + e.what()});
  }
}

const std::vector<Poly1>& test_h() {
  static const std::vector<Poly1> hs = {Poly1({Q(1)}), Poly1({Q(0), Q(1)}), Poly1({Q(0), Q(0), Q(1)}),
                                        Poly1({Q(1), Q(0), Q(-1)})};
  return hs;
}

bool leven_int(long l, long v) { return l <= v && v <= 0 && (v - l) % 2 == 0; }

double tol_or(const SuiteOptions& o, double d) { return o.tol > 0 ? o.tol : d; }

}  // namespace

std::vector<CaseResult> check_multiplicity_table() {
  std::vector<CaseResult> out;
  for (int n = 2; n <= 5; ++n) {
    int bad_mult = 0, bad_dim = 0, total = 0;
    std::string first;
    for (long l = -12; l <= 16; ++l)
      for (long v = -12; v <= 15; ++v) {
        ++total;
        auto p = ParamPoint::make(n, l, v);
        bool le = leven_int(l, v);
        if (multiplicity_principal(p) != (le ? 2 : 1)) {
          ++bad_mult;
          if (first.empty()) first = pt(p);
        }
        int eh, es, ed;
        long d1 = v - l, d2 = n - 1 - l - v;
        if (le) {
          eh = 2;
          es = n % 2 ? 2 : 1;
          ed = 1;
        } else if (d1 >= 0 && d1 % 2 == 0) {
          eh = es = ed = 1;
        } else if (d2 >= 0 && d2 % 2 == 0) {
          eh = es = 1;
          ed = 0;
        } else {
          eh = 1;
          es = ed = 0;
        }
        auto b = basis_of_H(p);
        if (b.dim_H != eh || b.dim_H_sing != es || b.dim_H_diff != ed) {
          ++bad_dim;
          if (first.empty()) first = pt(p);
        }
      }
    out.push_back({"multiplicity_n" + std::to_string(n), bad_mult == 0 && bad_dim == 0,
                   std::to_string(total) + " points, " + std::to_string(bad_mult) + " multiplicity and " +
                       std::to_string(bad_dim) + " dimension mismatches" +
                       (first.empty() ? "" : ", first at " + first)});
  }
  return out;
}

std::vector<CaseResult> check_quadrature(const SuiteOptions& o) {
  const double tol = tol_or(o, 1e-7);
  struct Combo {
    int n;
    Q l, v;
    int N, h;
  };
  std::vector<Combo> cs = {{3, Q(4), Q(1), 0, 0}, {3, Q(5), Q(1), 2, 1}};
  const std::vector<Q> nus = {Q(1), frac(1, 3), frac(-1, 2), frac(3, 2), frac(2, 3)};
  for (int i = 0; cs.size() < 20; ++i) {
    int n = 3 + i % 3;
    Q v = nus[i % 5];
    Q l = Q(n) + (v < 0 ? Q(-v) : v) + frac(i % 4, 2) + frac(1, 4);
    cs.push_back({n, l, v, 2 * ((i / 3) % 3), i % 4});
  }
  std::vector<CaseResult> out;
  QuadConfig cfg;
  for (auto& c : cs) {
    std::string name = "quad n=" + std::to_string(c.n) + " λ=" + c.l.get_str() + " ν=" + c.v.get_str() +
                       " N=" + std::to_string(c.N) + " h=" + test_h()[c.h].str();
    guarded(out, name, [&]() {
      auto p = ParamPoint::make(c.n, c.l, c.v);
      KFiniteVector kv{c.N, test_h()[c.h]};
      double q = quad_pairing(p, kv, cfg).value;
      double e = kfinite_pairing(Kind::A, p, kv).value.eval_f64().real();
      double err = e == 0 ? std::fabs(q) : std::fabs(q - e) / std::fabs(e);
      return CaseResult{name, err <= tol, "rel err " + num(err)};
    });
  }
  return out;
}

std::vector<CaseResult> check_vanishing() {
  std::vector<CaseResult> out;
  for (int n : {3, 4}) {
    int points = 0, bad = 0;
    std::string first;
    for (long l = -8; l <= 0; ++l)
      for (long v = -8; v <= 0; ++v) {
        if (!leven_int(l, v)) continue;
        ++points;
        auto p = ParamPoint::make(n, l, v);
        for (int N = 0; N <= 8; N += 2)
          if (!kfinite_A_zero_upto(p, N, 6)) {
            ++bad;
            if (first.empty()) first = pt(p) + " N=" + std::to_string(N);
            break;
          }
      }
    out.push_back({"vanishing_Leven_n" + std::to_string(n), bad == 0,
                   std::to_string(points) + " L_even points, " + std::to_string(bad) + " nonzero" +
                       (first.empty() ? "" : ", first " + first)});
  }
  // witnesses away from L_even
  std::vector<ParamPoint> cand;
  for (int n : {3, 4})
    for (long l = -8; l <= 2; ++l)
      for (long v = -8; v <= 2; ++v)
        if (!leven_int(l, v)) cand.push_back(ParamPoint::make(n, l, v));
  size_t stride = cand.size() / 20;
  for (size_t i = 0; i < 20; ++i) {
    const ParamPoint& p = cand[i * stride];
    guarded(out, "witness " + pt(p), [&]() {
      for (int N = 0; N <= 8; N += 2) {
        int bound = zn_degree_bound(p, N);
        for (int d = 0; d <= bound; ++d)
          if (!kfinite_pairing(Kind::A, p, {N, Poly1::monomial(d)}).value.is_zero())
            return CaseResult{"witness " + pt(p), true,
                              "N=" + std::to_string(N) + " h=s^" + std::to_string(d)};
      }
      return CaseResult{"witness " + pt(p), false, "no nonzero pairing found"};
    });
  }
  return out;
}

std::vector<CaseResult> check_residues() {
  std::vector<CaseResult> out;
  // (1) on K-finite data, every \\ lattice point with k <= 3
  for (int n = 3; n <= 6; ++n)
    for (long l = -8; l <= 8; ++l)
      for (long k = 0; k <= 3; ++k) {
        auto p = ParamPoint::make(n, l, Q(n - 1 - 2 * k - l));
        std::string name = "B_residue_kfinite " + pt(p);
        guarded(out, name, [&]() {
          GammaMonomial q = residue_constant(Residue::B_of_A, p);
          int bad = 0, route = 0;
          for (int N = 0; N <= 6; N += 2)
            for (auto& h : test_h()) {
              KFiniteVector kv{N, h};
              GammaSum b = kfinite_pairing(Kind::B, p, kv).value;
              if (kfinite_pairing(Kind::A, p, kv).value != b.scaled(q)) ++bad;
              if (p.n % 2 == 0) {
                ++route;
                if (kernel_pairing_B(p, kv) != b) ++bad;
              }
            }
          return CaseResult{name, bad == 0,
                            std::to_string(bad) + " mismatches" +
                                (route ? ", kernel route on " + std::to_string(route) + " vectors" : "")};
        });
      }
  // (2) spherical for l <= 4, and on K-finite data through the Taylor route
  const std::vector<Q> lams = {Q(-3), Q(-2), Q(-1), Q(0), Q(1), Q(2), frac(1, 2), frac(-5, 3)};
  for (int n = 3; n <= 5; ++n)
    for (const Q& l : lams)
      for (long ll = 0; ll <= 4; ++ll) {
        auto p = ParamPoint::make(n, l, l + 2 * ll);
        std::string name = "C_residue " + pt(p);
        guarded(out, name, [&]() {
          GammaMonomial q = residue_constant(Residue::C_of_A, p);
          bool ok = gm_eq(spherical_action(Kind::A, p), gm_mul(q, spherical_action(Kind::C, p)));
          int kf = 0;
          if (ll <= 2)
            for (int N = 0; N <= 4; N += 2)
              for (int h = 0; h < 3; ++h) {
                KFiniteVector kv{N, test_h()[h]};
                ok = ok && kfinite_pairing(Kind::A, p, kv).value == taylor_pairing_C(p, kv).scaled(q);
                ++kf;
              }
          return CaseResult{name, ok, "spherical + " + std::to_string(kf) + " Taylor K-finite vectors"};
        });
      }
  // (3) on X, k, l <= 4
  for (int n = 3; n <= 5; ++n)
    for (long k = 0; k <= 4; ++k)
      for (long ll = 0; ll <= 4; ++ll) {
        Q l = frac(n - 1 - 2 * k - 2 * ll, 2);
        auto p = ParamPoint::make(n, l, l + 2 * ll);
        std::string name = "C_of_B_residue " + pt(p);
        guarded(out, name, [&]() {
          bool a = gm_eq(spherical_action(Kind::B, p),
                         gm_mul(residue_constant(Residue::C_of_B, p), spherical_action(Kind::C, p)));
          bool b = gm_eq(gm_mul(residue_constant(Residue::B_of_A, p), residue_constant(Residue::C_of_B, p)),
                         residue_constant(Residue::C_of_A, p));
          return CaseResult{name, a && b, std::string(a ? "" : "B≠qC ") + (b ? "" : "qq≠q")};
        });
      }
  // (4) through BB, n odd, L_even
  for (int n : {3, 5})
    for (long l = -8; l <= 0; ++l)
      for (long v = l; v <= 0; v += 2) {
        auto p = ParamPoint::make(n, l, v);
        std::string name = "BB_residue " + pt(p);
        guarded(out, name, [&]() {
          GammaMonomial q = residue_constant(Residue::B_of_A, p);
          bool ok = gm_eq(spherical_action(Kind::AA, p), gm_mul(q, spherical_action(Kind::BB, p)));
          GammaMonomial g = GmBuilder().gamma(frac(n, 2)).done();
          ok = ok && kfinite_pairing(Kind::BB, p, KFiniteVector::spherical()).value ==
                         GammaSum(gm_mul(g, spherical_action(Kind::BB, p)));
          for (int N = 0; N <= 4; N += 2)
            ok = ok && kfinite_pairing(Kind::AA, p, {N, test_h()[1]}).value ==
                           kfinite_pairing(Kind::BB, p, {N, test_h()[1]}).value.scaled(q);
          return CaseResult{name, ok, "AA = q^A_B BB, spherical and K-finite"};
        });
      }
  return out;
}

std::vector<ParamPoint> region_samples(const std::string& region, int count) {
  std::vector<ParamPoint> all;
  auto in_region = [&](const ParamPoint& p) {
    bool ss = slashslash_k(p).has_value(), par = parallel_l(p).has_value();
    if (region == "X") return ss && par;
    if (region == "slashslash_only") return ss && !par;
    if (region == "parallel_only") return par && !ss;
    if (region == "nu_neg_int") return nu_neg_int(p) && !ss && !par;
    if (region == "generic") return !ss && !par && !nu_neg_int(p);
    throw std::invalid_argument("unknown region " + region);
  };
  int den = region == "generic" ? 3 : 2;
  for (int n = 3; n <= 5; ++n)
    for (long a = -6 * den; a <= 6 * den; ++a)
      for (long b = -6 * den; b <= 6 * den; ++b) {
        auto p = ParamPoint::make(n, frac(a, den), frac(b, den));
        if (in_region(p)) all.push_back(p);
      }
  if (static_cast<int>(all.size()) <= count) return all;
  std::vector<ParamPoint> out;
  for (int i = 0; i < count; ++i) out.push_back(all[all.size() * i / count]);
  return out;
}

std::vector<CaseResult> check_functional() {
  std::vector<CaseResult> out;
  for (std::string r : {"X", "slashslash_only", "parallel_only", "nu_neg_int", "generic"}) {
    auto ps = region_samples(r, 50);
    int bad = 0, ids = 0;
    std::string first;
    for (auto& p : ps) {
      try {
        for (auto& c : functional_identities(p)) {
          ++ids;
          if (!c.holds()) {
            ++bad;
            if (first.empty()) first = c.name + " at " + pt(p);
          }
        }
      } catch (const std::exception& e) {
        ++bad;
        if (first.empty()) first = std::string(e.what()) + " at " + pt(p);
      }
    }
    out.push_back({"functional_" + r, bad == 0 && ps.size() == 50,
                   std::to_string(ps.size()) + " samples, " + std::to_string(ids) + " identities, " +
                       std::to_string(bad) + " failures" + (first.empty() ? "" : ", first " + first)});
  }
  return out;
}

std::vector<CaseResult> check_factorizations() {
  std::vector<CaseResult> out;
  for (int n = 3; n <= 5; ++n)
    for (int j = 0; j <= 2; ++j)
      for (int l = 0; l <= 2; ++l) {
        Q lam = frac(n, 2) + j, nu = lam + 2 * l;
        std::string name = "factor_juhl_laplacian n=" + std::to_string(n) + " j=" + std::to_string(j) +
                           " l=" + std::to_string(l);
        guarded(out, name, [&]() {
          DiffOp lhs = compose(juhl_operator(n, lam, nu), laplacian_full_op(n, j));
          DiffOp rhs = scaled(juhl_operator(n, Q(n) - lam, nu), gm_rational(factorial(l + j) / factorial(l)));
          return CaseResult{name, op_eq(lhs, rhs), lhs.str()};
        });
      }
  for (int n = 3; n <= 5; ++n)
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= k; ++l) {
        Q lam = frac(n - 1 - 2 * k - 2 * l, 2), nu = lam + 2 * l;
        std::string name = "factor_laplacian_juhl n=" + std::to_string(n) + " k=" + std::to_string(k) +
                           " l=" + std::to_string(l);
        guarded(out, name, [&]() {
          DiffOp lhs = compose(laplacian_op(n, k - l), juhl_operator(n, lam, nu));
          DiffOp rhs = scaled(juhl_operator(n, lam, Q(n - 1) - nu), gm_rational(factorial(k) / factorial(l)));
          return CaseResult{name, op_eq(lhs, rhs), lhs.str()};
        });
      }
  return out;
}

std::vector<CaseResult> check_juhl_taylor() {
  std::vector<CaseResult> out;
  for (int n : {3, 4})
    for (const Q& lam : {frac(1, 2), Q(1), Q(3)})
      for (int l = 0; l <= 3; ++l) {
        auto p = ParamPoint::make(n, lam, lam + 2 * l);
        std::string name = "juhl_taylor " + pt(p);
        guarded(out, name, [&]() {
          Q t = taylor_apply_juhl(n, lam, lam + 2 * l);
          bool ok = gm_eq(gm_rational(t), spherical_action(Kind::C, p));
          return CaseResult{name, ok, "Taylor value " + t.get_str()};
        });
      }
  return out;
}

std::vector<CaseResult> check_fourier() {
  std::vector<CaseResult> out;
  const std::vector<Q> lams = {Q(-3), frac(-1, 2), frac(1, 3), Q(2), frac(7, 2)};
  for (int n = 3; n <= 5; ++n)
    for (const Q& lam : lams)
      for (int l = 0; l <= 4; ++l) {
        auto p = ParamPoint::make(n, lam, lam + 2 * l);
        std::string name = "fourier " + pt(p);
        guarded(out, name, [&]() {
          FourierPoly a = fourier_A_terminating(p), b = fourier_A_parallel(p);
          bool ok = fourier_eq(a, b);
          FourierPoly c = fourier_C_kernel(p);
          c.scale = gm_mul(c.scale, residue_constant(Residue::C_of_A, p));
          ok = ok && fourier_eq(b, c);
          return CaseResult{name, ok, "terminating 2F1 = closed Gegenbauer form = q^A_C F(K^C)"};
        });
      }
  return out;
}

std::vector<CaseResult> check_knapp_stein(const SuiteOptions& o) {
  std::vector<CaseResult> out;
  {
    int bad = 0, total = 0;
    for (int n = 2; n <= 6; ++n)
      for (long a = -9; a <= 9; ++a) {
        auto p = ParamPoint::make(n, Q(1), frac(a, 3));
        ++total;
        GammaMonomial lhs =
            gm_mul(spherical_action(Kind::KS_Gprime, p),
                   spherical_action(Kind::KS_Gprime, ParamPoint::make(n, Q(1), Q(n - 1) - p.nu)));
        GammaMonomial rhs = GmBuilder().pi(2 * (n - 1)).inv_gamma(p.nu).inv_gamma(Q(n - 1) - p.nu).done();
        if (!gm_eq(lhs, rhs)) ++bad;
      }
    out.push_back({"ttks_exact", bad == 0, std::to_string(total) + " rational samples"});
  }
  const double ctol = tol_or(o, 1e-5);
  guarded(out, "ks_convolution_m2", [&]() {
    const double nu = 1.3;
    std::vector<std::vector<double>> ys = {{0, 0}, {0.5, 0}, {-0.5, 0}, {0.3, -0.7}, {-0.3, 0.7}};
    auto r = quad_ks_convolution(2, nu, ys, QuadConfig{});
    double c = ks_convolution_constant(2, nu), worst = 0;
    for (double x : r) worst = std::max(worst, std::fabs(x - c) / c);
    double sym = std::max(std::fabs(r[1] - r[2]), std::fabs(r[3] - r[4])) / c;
    return CaseResult{"ks_convolution_m2", worst <= ctol && sym <= 1e-10,
                      "max rel err " + num(worst) + ", symmetry " + num(sym)};
  });
  const double btol = 1e-11;
  for (auto [m, nu] : std::vector<std::pair<int, Q>>{{2, frac(1, 3)}, {3, frac(1, 3)}, {4, frac(3, 2)}}) {
    std::string name = "kbessel m=" + std::to_string(m) + " ν=" + nu.get_str();
    guarded(out, name, [&]() {
      double e = kbessel_T1_identity(m, nu, {0.5, 1.0, 2.0});
      return CaseResult{name, e <= btol, "max rel err " + num(e)};
    });
  }
  for (int m = 2; m <= 4; ++m)
    for (int j = 1; j <= 2; ++j) {
      std::string name = "d1 m=" + std::to_string(m) + " j=" + std::to_string(j);
      guarded(out, name, [&]() {
        Q t = taylor_d1(m, j);
        bool ok = gm_eq(gm_rational(t), d1_constant(m, j));
        // residue operator on the spherical vector gives the Knapp-Stein value
        auto p = ParamPoint::make(m + 1, Q(1), frac(m, 2) - j);
        GammaMonomial c = knapp_stein_residue_op(m, j).terms.begin()->second.terms().at(0);
        ok = ok && gm_eq(gm_mul(c, gm_rational(t)), spherical_action(Kind::KS_Gprime, p));
        return CaseResult{name, ok, "Taylor value " + t.get_str()};
      });
    }
  return out;
}

std::vector<CaseResult> check_pde(const SuiteOptions& o) {
  std::vector<CaseResult> out;
  const double tol = tol_or(o, 1e-6);
  guarded(out, "pde_kA_3_5_1", [&]() {
    auto s = annulus_samples(3, 20, o.seed, 0.5, 2.0, 0.1);
    auto r = pde_residual(ParamPoint::make(3, 5, 1), s, 1e-5);
    return CaseResult{
        "pde_kA_3_5_1", r.max() <= tol,
        "euler " + num(r.euler) + ", normal " + num(r.normal) + ", seed " + std::to_string(o.seed)};
  });
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> s = {"residues", "functional",    "vanishing",
                                             "oracle",   "factorization", "pde"};
  return s;
}

std::vector<CaseResult> run_suite(const std::string& name, const SuiteOptions& o) {
  auto cat = [](std::vector<CaseResult> a, const std::vector<CaseResult>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  if (name == "residues") return check_residues();
  if (name == "functional") return cat(check_functional(), check_fourier());
  if (name == "vanishing") return check_vanishing();
  if (name == "oracle") return cat(cat(check_quadrature(o), check_juhl_taylor()), check_knapp_stein(o));
  if (name == "factorization") return check_factorizations();
  if (name == "pde") return check_pde(o);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace sb
