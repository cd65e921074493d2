#include "sb/params.hpp"

#include <cmath>
#include <regex>

namespace sb {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::A:
      return "A";
    case Kind::AA:
      return "AA";
    case Kind::B:
      return "B";
    case Kind::BB:
      return "BB";
    case Kind::C:
      return "C";
    case Kind::KS_Gprime:
      return "KS_Gprime";
    case Kind::KS_G:
      return "KS_G";
  }
  return "?";
}

Kind parse_kind(const std::string& s) {
  for (Kind k : {Kind::A, Kind::AA, Kind::B, Kind::BB, Kind::C, Kind::KS_Gprime, Kind::KS_G})
    if (kind_name(k) == s) return k;
  throw std::invalid_argument("unknown operator kind: " + s);
}

ParamPoint ParamPoint::make(int n, const Q& lambda, const Q& nu) {
  ParamPoint p;
  p.n = n;
  p.exact = true;
  p.lambda = lambda;
  p.nu = nu;
  p.lambda_c = lambda.get_d();
  p.nu_c = nu.get_d();
  validate(p);
  return p;
}

ParamPoint ParamPoint::numeric(int n, std::complex<double> lambda, std::complex<double> nu) {
  ParamPoint p;
  p.n = n;
  p.exact = false;
  p.lambda_c = lambda;
  p.nu_c = nu;
  validate(p);
  return p;
}

Scalar parse_scalar(const std::string& s) {
  static const std::regex rat(R"([+-]?\d+(/\d+)?)");
  static const std::regex real(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  static const std::regex cplx(
      R"(([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?([+-](?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i)");
  Scalar r;
  std::smatch mm;
  if (std::regex_match(s, rat)) {
    r.q = parse_q(s);
    r.z = r.q.get_d();
    return r;
  }
  r.exact = false;
  if (std::regex_match(s, real)) {
    r.z = std::stod(s);
    return r;
  }
  if (std::regex_match(s, mm, cplx)) {
    double re = mm[1].matched && mm[1].length() ? std::stod(mm[1].str()) : 0.0;
    std::string im = mm[2].str();
    double imv = (im == "+" || im == "-") ? (im == "+" ? 1.0 : -1.0) : std::stod(im);
    r.z = {re, imv};
    return r;
  }
  throw std::invalid_argument("cannot parse number: " + s);
}

ParamPoint parse_point(int n, const std::string& lambda, const std::string& nu) {
  Scalar a = parse_scalar(lambda), b = parse_scalar(nu);
  if (a.exact && b.exact) return ParamPoint::make(n, a.q, b.q);
  return ParamPoint::numeric(n, a.z, b.z);
}

void validate(const ParamPoint& p) {
  if (p.n < 2) throw std::invalid_argument("n must be at least 2 (got " + std::to_string(p.n) + ")");
}

const ParamPoint& require_exact(const ParamPoint& p) {
  validate(p);
  if (!p.exact) throw std::invalid_argument("exact rational parameters required");
  return p;
}

static std::optional<long> half_nat(const Q& d) {
  if (!is_int(d) || d < 0) return std::nullopt;
  long v = to_long(d);
  if (v % 2) return std::nullopt;
  return v / 2;
}

std::optional<long> slashslash_k(const ParamPoint& p) {
  require_exact(p);
  return half_nat(Q(p.n - 1) - p.lambda - p.nu);
}

std::optional<long> parallel_l(const ParamPoint& p) {
  require_exact(p);
  return half_nat(p.nu - p.lambda);
}

static bool both_nonpos_int(const ParamPoint& p) {
  return is_int(p.lambda) && is_int(p.nu) && p.lambda <= 0 && p.nu <= 0;
}

bool in_Leven(const ParamPoint& p) {
  require_exact(p);
  return both_nonpos_int(p) && p.lambda <= p.nu && to_long(p.nu - p.lambda) % 2 == 0;
}

bool in_Lodd(const ParamPoint& p) {
  require_exact(p);
  return both_nonpos_int(p) && p.lambda <= p.nu && to_long(p.nu - p.lambda) % 2 != 0;
}

bool in_X(const ParamPoint& p) { return slashslash_k(p) && parallel_l(p); }

bool nu_neg_int(const ParamPoint& p) {
  require_exact(p);
  return is_int(p.nu) && p.nu <= 0;
}

bool in_reducible_lattice(const ParamPoint& p) {
  require_exact(p);
  if (!is_int(p.lambda) || !is_int(p.nu)) return false;
  bool inside = p.lambda > 0 && p.lambda < p.n && p.nu > 0 && p.nu < p.n - 1;
  return !inside;
}

std::optional<std::string> octant(const ParamPoint& p) {
  if (!in_reducible_lattice(p)) return std::nullopt;
  const Q& l = p.lambda;
  const Q& v = p.nu;
  long n = p.n;
  if (l <= 0) {
    if (v < l) return "I.A";
    if (l <= v && v <= 0) return "I.B";
    if (v > -l + n - 1) return "II.A";
    if (n - 1 <= v && v <= -l + n - 1) return "II.B";
  } else if (l >= n) {
    if (v > l - 1) return "III.A";
    if (n - 1 <= v && v <= l - 1) return "III.B";
    if (v < -l + n) return "IV.A";
    if (-l + n <= v && v <= 0) return "IV.B";
  }
  return std::nullopt;
}

std::string weyl_orbit_class(const ParamPoint& p) {
  if (!in_reducible_lattice(p))
    throw domain_error("(" + p.lambda.get_str() + "," + p.nu.get_str() +
                       ") is outside the reducible lattice");
  long l = to_long(p.lambda), v = to_long(p.nu);
  long n = p.n;
  std::optional<long> lr, vr;
  if (l <= 0)
    lr = l;
  else if (n - l <= 0)
    lr = n - l;
  if (v <= 0)
    vr = v;
  else if (n - 1 - v <= 0)
    vr = n - 1 - v;
  if (lr && vr && ((*lr - *vr) % 2 == 0)) return "L_even-orbit";
  return "L_odd-orbit";
}

RegionReport classify(const ParamPoint& p) {
  require_exact(p);
  RegionReport r;
  r.k = slashslash_k(p);
  r.l = parallel_l(p);
  r.in_slashslash = r.k.has_value();
  r.in_parallel = r.l.has_value();
  r.in_X = r.in_slashslash && r.in_parallel;
  r.in_Leven = in_Leven(p);
  r.in_Lodd = in_Lodd(p);
  Q d = p.lambda - p.nu, s = p.lambda + p.nu;
  r.in_Omega1 = d > 0;
  r.in_Omega0 = d > 0 && s > p.n - 1;
  r.in_Omega2 = d > 0 && s < p.n;
  r.octant = octant(p);
  r.weyl_class = in_reducible_lattice(p) ? weyl_orbit_class(p) : "non-reducible-pair";
  return r;
}

std::string tri_name(Tri t) {
  switch (t) {
    case Tri::out:
      return "out";
    case Tri::in:
      return "in";
    case Tri::within_tolerance:
      return "within-tolerance";
  }
  return "?";
}

namespace {

constexpr double kEps = 1e-12;

Tri near_half_nat(std::complex<double> d) {
  if (std::fabs(d.imag()) > kEps) return Tri::out;
  double k = std::round(d.real() / 2);
  if (k < 0) return Tri::out;
  return std::fabs(d.real() - 2 * k) <= kEps ? Tri::within_tolerance : Tri::out;
}

Tri near_nonpos_int(std::complex<double> x, long& v) {
  if (std::fabs(x.imag()) > kEps) return Tri::out;
  double r = std::round(x.real());
  v = static_cast<long>(r);
  if (r > 0 || std::fabs(x.real() - r) > kEps) return Tri::out;
  return Tri::within_tolerance;
}

Tri positive(double x) {
  if (x > kEps) return Tri::in;
  if (x < -kEps) return Tri::out;
  return Tri::within_tolerance;
}

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::out || b == Tri::out) return Tri::out;
  if (a == Tri::in && b == Tri::in) return Tri::in;
  return Tri::within_tolerance;
}

}  // namespace

NumericRegionReport classify_numeric(const ParamPoint& p) {
  validate(p);
  NumericRegionReport r;
  auto l = p.lambda_c, v = p.nu_c;
  r.in_slashslash = near_half_nat(double(p.n - 1) - l - v);
  r.in_parallel = near_half_nat(v - l);
  r.in_X = tri_and(r.in_slashslash, r.in_parallel);
  long li = 0, vi = 0;
  Tri a = near_nonpos_int(l, li), b = near_nonpos_int(v, vi);
  Tri both = tri_and(a, b);
  if (both != Tri::out && li <= vi) {
    r.in_Leven = (vi - li) % 2 == 0 ? both : Tri::out;
    r.in_Lodd = (vi - li) % 2 != 0 ? both : Tri::out;
  }
  bool real = std::fabs(l.imag()) <= kEps && std::fabs(v.imag()) <= kEps;
  if (real) {
    double d = l.real() - v.real(), s = l.real() + v.real();
    r.in_Omega1 = positive(d);
    r.in_Omega0 = tri_and(positive(d), positive(s - (p.n - 1)));
    r.in_Omega2 = tri_and(positive(d), positive(p.n - s));
  }
  return r;
}

int multiplicity_principal(const ParamPoint& p) { return in_Leven(p) ? 2 : 1; }

MultFactors multiplicity_factors(int n, int i, int j) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (i < 0 || j < 0) throw std::invalid_argument("i, j must be natural numbers");
  if (i >= j && (i - j) % 2 == 0) return {1, 0, 1};
  return {0, 1, 0};
}

int multiplicity_I_to_factor(int n, const Q& lambda, int j, char target) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (j < 0) throw std::invalid_argument("j must be a natural number");
  if (target == 'F') return 1;
  if (target != 'T') throw std::invalid_argument("target must be F or T");
  Q s = lambda + j;
  return (is_int(s) && s <= 0 && to_long(s) % 2 == 0) ? 1 : 0;
}

BasisReport basis_of_H(const ParamPoint& p) {
  require_exact(p);
  BasisReport r;
  bool odd = p.n % 2 == 1;
  bool le = in_Leven(p);
  bool par = parallel_l(p).has_value();
  bool ss = slashslash_k(p).has_value();
  if (le) {
    r.basis = odd ? std::vector<Kind>{Kind::BB, Kind::C} : std::vector<Kind>{Kind::AA, Kind::C};
    r.dim_H_sing = odd ? 2 : 1;
    r.dim_H_diff = 1;
  } else if (par) {
    r.basis = {Kind::C};
    r.dim_H_sing = 1;
    r.dim_H_diff = 1;
  } else if (ss) {
    r.basis = {Kind::B};
    r.dim_H_sing = 1;
    r.dim_H_diff = 0;
  } else {
    r.basis = {Kind::A};
  }
  r.dim_H = static_cast<int>(r.basis.size());
  return r;
}

}  // namespace sb
