#include "sb/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sb {

Q parse_q(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool slash = false;
  for (size_t j = i; j < s.size(); ++j) {
    if (s[j] == '/' && !slash && j > i && j + 1 < s.size()) {
      slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw std::invalid_argument("not a rational: " + s);
  }
  if (i == s.size()) throw std::invalid_argument("not a rational: " + s);
  Q q(s[0] == '+' ? s.substr(1) : s, 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string q_str(const Q& q) { return q.get_str(); }

bool is_int(const Q& q) { return q.get_den() == 1; }

long to_long(const Q& q) {
  if (!is_int(q) || !q.get_num().fits_slong_p())
    throw std::invalid_argument("not a machine integer: " + q.get_str());
  return q.get_num().get_si();
}

Q floor_q(const Q& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Q(r);
}

Q factorial(long n) {
  if (n < 0) throw std::invalid_argument("negative factorial");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Q(r);
}

Q binom_q(const Q& top, long k) {
  if (k < 0) return 0;
  Q r = 1;
  for (long i = 0; i < k; ++i) r *= (top - i);
  return r / factorial(k);
}

Q poch(const Q& x, long k) {
  Q r = 1;
  for (long i = 0; i < k; ++i) r *= (x + i);
  return r;
}

Q double_factorial_odd(long k) {
  Q r = 1;
  for (long t = 1; t <= 2 * k - 1; t += 2) r *= t;
  return r;
}

Q frac(long a, long b) {
  Q r(a, b);
  r.canonicalize();
  return r;
}

Q pow_q(const Q& x, long e) {
  Q r = 1;
  Q b = e < 0 ? Q(1 / x) : x;
  for (long i = 0; i < std::labs(e); ++i) r *= b;
  return r;
}

bool GammaMonomial::same_fields(const GammaMonomial& o) const {
  return zero == o.zero && coeff == o.coeff && pi_half == o.pi_half && two_frac == o.two_frac &&
         num == o.num && den == o.den && order == o.order;
}

GmBuilder& GmBuilder::q(const Q& c) {
  if (c == 0)
    zero_ = true;
  else
    coeff_ *= c;
  return *this;
}

GmBuilder& GmBuilder::lin(const Aff& a) {
  if (a.x != 0) {
    coeff_ *= a.x;
  } else if (a.rate != 0) {
    coeff_ *= a.rate;
    --order_;
  } else {
    zero_ = true;
  }
  return *this;
}

GmBuilder& GmBuilder::gamma(const Aff& a) {
  push(a, false);
  return *this;
}

GmBuilder& GmBuilder::inv_gamma(const Aff& a) {
  push(a, true);
  return *this;
}

GmBuilder& GmBuilder::pi(int half_units) {
  pi_ += half_units;
  return *this;
}

GmBuilder& GmBuilder::pow2(const Q& e) {
  two_ += e;
  return *this;
}

GmBuilder& GmBuilder::mul(const GammaMonomial& g) {
  if (g.zero) {
    zero_ = true;
    return *this;
  }
  coeff_ *= g.coeff;
  pi_ += g.pi_half;
  two_ += g.two_frac;
  order_ += g.order;
  num_.insert(num_.end(), g.num.begin(), g.num.end());
  den_.insert(den_.end(), g.den.begin(), g.den.end());
  return *this;
}

// Γ(x+rate ε) to leading order; nonpositive integers become simple poles
void GmBuilder::push(const Aff& a, bool inverse) {
  Q x = a.x;
  if (is_int(x) && x <= 0) {
    long m = -to_long(x);
    if (a.rate == 0) {
      if (inverse) {
        zero_ = true;
        return;
      }
      throw domain_error("Gamma pole at " + x.get_str() + " with no regularizing path");
    }
    Q res = factorial(m) * a.rate;
    if (m % 2) res = -res;
    if (inverse) {
      coeff_ *= res;
      --order_;
    } else {
      coeff_ /= res;
      ++order_;
    }
    return;
  }
  Q f = 1;
  while (x > 1) {
    x -= 1;
    f *= x;
  }
  while (x <= 0) {
    f /= x;
    x += 1;
  }
  if (inverse)
    coeff_ /= f;
  else
    coeff_ *= f;
  if (x != 1) (inverse ? den_ : num_).push_back(x);
}

namespace {

const Q kHalf = frac(1, 2);

// arguments in (1/2,1) go to (0,1/2) by Γ(y+1/2) = 2^{1-2y} π^{1/2} Γ(2y)/Γ(y)
void reduce_side(std::vector<Q>& work, std::vector<Q>& same, std::vector<Q>& other, int sign, int& pi,
                 Q& two) {
  while (!work.empty()) {
    Q x = work.back();
    work.pop_back();
    if (x == kHalf) {
      pi += sign;
    } else if (x < kHalf) {
      same.push_back(x);
    } else {
      Q y = x - kHalf;
      two += sign * (1 - 2 * y);
      pi += sign;
      other.push_back(y);
      Q z = 2 * y;
      if (z != 1) work.push_back(z);
    }
  }
}

}  // namespace

GammaMonomial GmBuilder::done() const {
  GammaMonomial g;
  if (zero_) return gm_zero();
  g.coeff = coeff_;
  g.order = order_;
  int pi = pi_;
  Q two = two_;
  std::vector<Q> num, den;
  std::vector<Q> wn = num_, wd = den_;
  // new denominators produced while reducing numerators and vice versa
  std::vector<Q> extra_den, extra_num;
  reduce_side(wn, num, extra_den, 1, pi, two);
  reduce_side(wd, den, extra_num, -1, pi, two);
  for (auto& e : extra_den) den.push_back(e);
  for (auto& e : extra_num) num.push_back(e);
  std::sort(num.begin(), num.end());
  std::sort(den.begin(), den.end());
  std::vector<Q> rn, rd;
  size_t i = 0, j = 0;
  while (i < num.size() || j < den.size()) {
    if (j == den.size() || (i < num.size() && num[i] < den[j])) {
      rn.push_back(num[i++]);
    } else if (i == num.size() || den[j] < num[i]) {
      rd.push_back(den[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  Q fl = floor_q(two);
  long e = to_long(fl);
  mpz_class p2 = 1;
  mpz_mul_2exp(p2.get_mpz_t(), p2.get_mpz_t(), static_cast<unsigned long>(std::labs(e)));
  if (e >= 0)
    g.coeff *= Q(p2);
  else
    g.coeff /= Q(p2);
  g.two_frac = two - fl;
  g.pi_half = pi;
  g.num = std::move(rn);
  g.den = std::move(rd);
  if (g.coeff == 0) return gm_zero();
  return g;
}

GammaMonomial gm_make(const Q& coeff, int pi_half, const std::vector<Q>& num, const std::vector<Q>& den) {
  GmBuilder b;
  b.q(coeff).pi(pi_half);
  for (auto& x : num) b.gamma(x);
  for (auto& x : den) b.inv_gamma(x);
  return b.done();
}

GammaMonomial gm_rational(const Q& c) { return GmBuilder().q(c).done(); }

GammaMonomial gm_zero() {
  GammaMonomial g;
  g.zero = true;
  g.coeff = 0;
  return g;
}

GammaMonomial gm_mul(const GammaMonomial& a, const GammaMonomial& b) {
  if (a.zero || b.zero) return gm_zero();
  return GmBuilder().mul(a).mul(b).done();
}

GammaMonomial gm_div(const GammaMonomial& a, const GammaMonomial& b) {
  if (b.zero) throw domain_error("division by exact zero");
  if (a.zero) return gm_zero();
  GammaMonomial inv;
  inv.coeff = 1 / b.coeff;
  inv.pi_half = -b.pi_half;
  inv.two_frac = -b.two_frac;
  inv.num = b.den;
  inv.den = b.num;
  inv.order = -b.order;
  return GmBuilder().mul(a).mul(inv).done();
}

GammaMonomial gm_neg(const GammaMonomial& a) {
  GammaMonomial r = a;
  r.coeff = -r.coeff;
  return r;
}

bool gm_is_zero(const GammaMonomial& a) { return a.zero || a.order < 0; }
bool gm_is_pole(const GammaMonomial& a) { return !a.zero && a.order > 0; }

bool gm_eq(const GammaMonomial& a, const GammaMonomial& b) {
  bool za = gm_is_zero(a), zb = gm_is_zero(b);
  if (za || zb) return za && zb;
  return a.same_fields(b);
}

std::complex<double> gm_eval_f64(const GammaMonomial& a) {
  if (gm_is_zero(a)) return 0.0;
  if (a.order > 0) throw domain_error("evaluation at a pole: " + gm_str(a));
  double lg = std::log(std::fabs(a.coeff.get_d()));
  if (!std::isfinite(lg)) {
    // coefficient outside double range
    mpz_class n = abs(a.coeff.get_num()), d = a.coeff.get_den();
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, n.get_mpz_t());
    double md = mpz_get_d_2exp(&ed, d.get_mpz_t());
    lg = std::log(mn) - std::log(md) + (en - ed) * std::log(2.0);
  }
  lg += 0.5 * a.pi_half * std::log(M_PI) + a.two_frac.get_d() * std::log(2.0);
  for (auto& x : a.num) lg += std::lgamma(x.get_d());
  for (auto& x : a.den) lg -= std::lgamma(x.get_d());
  double v = std::exp(lg);
  return a.coeff < 0 ? -v : v;
}

std::string gm_str(const GammaMonomial& a) {
  if (a.zero) return "0";
  std::ostringstream os;
  std::vector<std::string> parts;
  if (a.two_frac != 0) parts.push_back("2^{" + a.two_frac.get_str() + "}");
  if (a.pi_half != 0) {
    Q e = frac(a.pi_half, 2);
    e.canonicalize();
    parts.push_back(e == 1 ? std::string("π") : "π^{" + e.get_str() + "}");
  }
  for (auto& x : a.num) parts.push_back("Γ(" + x.get_str() + ")");
  std::string body;
  for (size_t i = 0; i < parts.size(); ++i) body += (i ? "·" : "") + parts[i];
  std::string dens;
  for (size_t i = 0; i < a.den.size(); ++i)
    dens += (i ? "·" : "") + std::string("Γ(") + a.den[i].get_str() + ")";
  std::string c = a.coeff.get_str();
  if (body.empty()) {
    os << c;
  } else if (a.coeff == 1) {
    os << body;
  } else if (a.coeff == -1) {
    os << "-" << body;
  } else {
    os << "(" << c << ")·" << body;
  }
  if (!dens.empty()) os << "/" << (a.den.size() > 1 ? "(" + dens + ")" : dens);
  if (a.order > 0) os << "·ε^{-" << a.order << "}";
  if (a.order < 0) os << "·ε^{" << -a.order << "}";
  return os.str();
}

bool GammaSum::Key::operator<(const Key& o) const {
  if (pi_half != o.pi_half) return pi_half < o.pi_half;
  if (two_frac != o.two_frac) return two_frac < o.two_frac;
  if (num != o.num) return num < o.num;
  return den < o.den;
}

void GammaSum::add(const GammaMonomial& g) {
  if (gm_is_zero(g)) return;
  if (g.order > 0) throw domain_error("pole term in a sum: " + gm_str(g));
  Key k{g.pi_half, g.two_frac, g.num, g.den};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), g.coeff);
  } else {
    it->second += g.coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void GammaSum::add(const GammaSum& s) {
  for (auto& t : s.terms()) add(t);
}

std::vector<GammaMonomial> GammaSum::terms() const {
  std::vector<GammaMonomial> out;
  for (auto& [k, c] : terms_) {
    GammaMonomial g;
    g.coeff = c;
    g.pi_half = k.pi_half;
    g.two_frac = k.two_frac;
    g.num = k.num;
    g.den = k.den;
    out.push_back(std::move(g));
  }
  return out;
}

GammaSum GammaSum::scaled(const GammaMonomial& g) const {
  GammaSum r;
  if (gm_is_zero(g)) return r;
  for (auto& t : terms()) r.add(gm_mul(t, g));
  return r;
}

GammaSum GammaSum::times(const GammaSum& s) const {
  GammaSum r;
  for (auto& t : s.terms()) r.add(scaled(t));
  return r;
}

bool GammaSum::operator==(const GammaSum& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b) {
    if (a->first < b->first || b->first < a->first) return false;
    if (a->second != b->second) return false;
  }
  return true;
}

std::complex<double> GammaSum::eval_f64() const {
  std::complex<double> s = 0;
  for (auto& t : terms()) s += gm_eval_f64(t);
  return s;
}

std::string GammaSum::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& t : terms()) {
    std::string p = gm_str(t);
    if (first)
      s = p;
    else if (p[0] == '-')
      s += " - " + p.substr(1);
    else
      s += " + " + p;
    first = false;
  }
  return s;
}

GammaSum operator-(const GammaSum& a, const GammaSum& b) {
  GammaSum r = a;
  for (auto& t : b.terms()) r.add(gm_neg(t));
  return r;
}

}  // namespace sb
