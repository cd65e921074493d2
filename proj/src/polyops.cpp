#include "sb/polyops.hpp"

#include <sstream>

namespace sb {

MultiPoly MultiPoly::constant(int n, const Q& c) {
  MultiPoly p(n);
  p.add(std::vector<int>(n, 0), c);
  return p;
}

MultiPoly MultiPoly::var(int n, int i) {
  MultiPoly p(n);
  std::vector<int> e(n, 0);
  e.at(i) = 1;
  p.add(e, 1);
  return p;
}

void MultiPoly::add(const std::vector<int>& e, const Q& a) {
  if (static_cast<int>(e.size()) != n_vars) throw std::invalid_argument("exponent length mismatch");
  if (a == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, a);
  } else {
    it->second += a;
    if (it->second == 0) terms.erase(it);
  }
}

Q MultiPoly::value_at_zero() const {
  auto it = terms.find(std::vector<int>(n_vars, 0));
  return it == terms.end() ? Q(0) : it->second;
}

int MultiPoly::degree() const {
  int d = -1;
  for (auto& [e, a] : terms) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

std::string MultiPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, a] : terms) {
    if (!first) os << " + ";
    os << a.get_str();
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) os << "·x" << (i + 1) << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    first = false;
  }
  return os.str();
}

static void check_vars(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_vars != b.n_vars) throw std::invalid_argument("variable-count mismatch");
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  check_vars(a, b);
  MultiPoly r = a;
  for (auto& [e, c] : b.terms) r.add(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + Q(-1) * b; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_vars(a, b);
  MultiPoly r(a.n_vars);
  std::vector<int> e(a.n_vars);
  for (auto& [ea, ca] : a.terms)
    for (auto& [eb, cb] : b.terms) {
      for (int i = 0; i < a.n_vars; ++i) e[i] = ea[i] + eb[i];
      r.add(e, ca * cb);
    }
  return r;
}

MultiPoly operator*(const Q& k, const MultiPoly& a) {
  MultiPoly r(a.n_vars);
  for (auto& [e, c] : a.terms) r.add(e, k * c);
  return r;
}

MultiPoly truncate(const MultiPoly& p, int max_degree) {
  MultiPoly r(p.n_vars);
  for (auto& [e, c] : p.terms) {
    int s = 0;
    for (int x : e) s += x;
    if (s <= max_degree) r.add(e, c);
  }
  return r;
}

MultiPoly diff(const MultiPoly& p, int var) {
  if (var < 0 || var >= p.n_vars) throw std::invalid_argument("variable index out of range");
  MultiPoly r(p.n_vars);
  for (auto& [e, c] : p.terms) {
    if (e[var] == 0) continue;
    auto f = e;
    f[var] -= 1;
    r.add(f, c * e[var]);
  }
  return r;
}

MultiPoly laplacian(const MultiPoly& p, const std::vector<int>& vars) {
  MultiPoly r(p.n_vars);
  for (int v : vars) r = r + diff(diff(p, v), v);
  return r;
}

MultiPoly d_dxn(const MultiPoly& p) { return diff(p, p.n_vars - 1); }

MultiPoly restrict_last(const MultiPoly& p) {
  MultiPoly r(p.n_vars - 1);
  for (auto& [e, c] : p.terms) {
    if (e.back() != 0) continue;
    r.add(std::vector<int>(e.begin(), e.end() - 1), c);
  }
  return r;
}

void DiffOp::add(int j, int i, const GammaSum& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(j, i);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second.add(c);
    if (it->second.is_zero()) terms.erase(it);
  }
}

bool DiffOp::tangential() const {
  for (auto& [k, c] : terms)
    if (k.second != 0) return false;
  return true;
}

std::string DiffOp::str() const {
  std::ostringstream os;
  if (restricted) os << "rest∘(";
  bool first = true;
  for (auto& [k, c] : terms) {
    if (!first) os << " + ";
    os << "[" << c.str() << "]";
    if (k.first) os << "·Δ" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
    if (k.second) os << "·∂" << (k.second > 1 ? "^" + std::to_string(k.second) : "");
    first = false;
  }
  if (first) os << "0";
  if (restricted) os << ")";
  return os.str();
}

DiffOp identity_op(int n) {
  DiffOp d;
  d.n = n;
  d.add(0, 0, gm_rational(1));
  return d;
}

DiffOp rest_op(int n) {
  DiffOp d = identity_op(n);
  d.restricted = true;
  return d;
}

DiffOp laplacian_op(int n, int j) {
  DiffOp d;
  d.n = n;
  d.add(j, 0, gm_rational(1));
  return d;
}

DiffOp laplacian_full_op(int n, int j) {
  DiffOp d;
  d.n = n;
  for (int i = 0; i <= j; ++i) d.add(i, 2 * (j - i), gm_rational(binom_q(j, i)));
  return d;
}

DiffOp dxn_op(int n, int i) {
  DiffOp d;
  d.n = n;
  d.add(0, i, gm_rational(1));
  return d;
}

DiffOp scaled(const DiffOp& op, const GammaMonomial& c) {
  DiffOp r;
  r.n = op.n;
  r.restricted = op.restricted;
  for (auto& [k, v] : op.terms) r.add(k.first, k.second, v.scaled(c));
  return r;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (a.n != b.n) throw std::invalid_argument("compose: dimension mismatch");
  if (b.restricted && !a.tangential())
    throw std::invalid_argument("compose: normal derivative after restriction");
  DiffOp r;
  r.n = a.n;
  r.restricted = a.restricted || b.restricted;
  for (auto& [ka, ca] : a.terms)
    for (auto& [kb, cb] : b.terms) r.add(ka.first + kb.first, ka.second + kb.second, ca.times(cb));
  return r;
}

bool op_eq(const DiffOp& a, const DiffOp& b) {
  if (a.n != b.n || a.restricted != b.restricted) return false;
  if (a.terms.size() != b.terms.size()) return false;
  for (auto& [k, c] : a.terms) {
    auto it = b.terms.find(k);
    if (it == b.terms.end() || it->second != c) return false;
  }
  return true;
}

bool gs_rational(const GammaSum& s, Q& out) {
  auto ts = s.terms();
  if (ts.empty()) {
    out = 0;
    return true;
  }
  if (ts.size() != 1) return false;
  auto& g = ts[0];
  if (g.pi_half != 0 || g.two_frac != 0 || !g.num.empty() || !g.den.empty()) return false;
  out = g.coeff;
  return true;
}

MultiPoly apply(const DiffOp& op, const MultiPoly& p) {
  bool tangential_input = p.n_vars == op.n - 1;
  if (!tangential_input && p.n_vars != op.n) throw std::invalid_argument("apply: variable-count mismatch");
  if (tangential_input && !op.tangential())
    throw std::invalid_argument("apply: normal derivative on a function of n-1 variables");
  std::vector<int> tang;
  for (int v = 0; v < op.n - 1; ++v) tang.push_back(v);
  MultiPoly r(p.n_vars);
  for (auto& [k, c] : op.terms) {
    Q a;
    if (!gs_rational(c, a)) throw domain_error("apply: coefficient is not rational");
    MultiPoly q = p;
    for (int t = 0; t < k.first; ++t) q = laplacian(q, tang);
    for (int t = 0; t < k.second; ++t) q = d_dxn(q);
    r = r + a * q;
  }
  if (op.restricted && !tangential_input) r = restrict_last(r);
  return r;
}

Q juhl_coeff(int n, const Q& lambda, const Q& nu, int j) {
  Q d = nu - lambda;
  if (!is_int(d) || d < 0 || to_long(d) % 2) throw domain_error("juhl_operator: (λ,ν) not in //");
  int l = static_cast<int>(to_long(d) / 2);
  if (j < 0 || j > l) return 0;
  Q r = pow_q(2, 2 * l - 2 * j) / (factorial(j) * factorial(2 * l - 2 * j));
  for (int i = 1; i <= l - j; ++i) r *= (lambda + nu - n - 1) / 2 + i;
  return r;
}

DiffOp juhl_operator(int n, const Q& lambda, const Q& nu) {
  Q d = nu - lambda;
  if (!is_int(d) || d < 0 || to_long(d) % 2) throw domain_error("juhl_operator: (λ,ν) not in //");
  int l = static_cast<int>(to_long(d) / 2);
  DiffOp op;
  op.n = n;
  op.restricted = true;
  for (int j = 0; j <= l; ++j) op.add(j, 2 * l - 2 * j, gm_rational(juhl_coeff(n, lambda, nu, j)));
  return op;
}

DiffOp knapp_stein_residue_op(int m, int j) {
  if (j < 0) throw std::invalid_argument("negative power");
  GammaMonomial c = GmBuilder().q(j % 2 ? -1 : 1).pi(m).pow2(Q(-2 * j)).inv_gamma(frac(m, 2) + j).done();
  DiffOp op;
  op.n = m + 1;
  op.add(j, 0, c);
  return op;
}

MultiPoly taylor_power(int n_vars, const Q& expo, int max_order) {
  if (max_order > 40) throw std::invalid_argument("taylor: max_order above 40");
  MultiPoly u(n_vars);
  for (int i = 0; i < n_vars; ++i) {
    std::vector<int> e(n_vars, 0);
    e[i] = 2;
    u.add(e, 1);
  }
  MultiPoly r = MultiPoly::constant(n_vars, 1);
  MultiPoly up = MultiPoly::constant(n_vars, 1);
  for (int p = 1; 2 * p <= max_order; ++p) {
    up = up * u;
    r = r + binom_q(expo, p) * up;
  }
  return r;
}

MultiPoly taylor_coeffs_conformal_factor(int n, const Q& lambda, int max_order) {
  return taylor_power(n, -lambda, max_order);
}

Q nlap_closed(int n, const Q& lambda, int l, int j) {
  Q m2 = frac(n - 1, 2);
  return pow_q(2, 2 * j) * factorial(2 * l - 2 * j) / factorial(l - j) * poch(-lambda - l + 1, l) *
         poch(m2, j);
}

Q lap0_closed(int m, const Q& mu, int j) {
  // Γ(μ+1)/Γ(μ+1-j) = μ(μ-1)...(μ-j+1)
  Q fall = 1;
  for (int i = 0; i < j; ++i) fall *= mu - i;
  return pow_q(2, 2 * j) * fall * poch(frac(m, 2), j);
}

GammaMonomial d1_constant(int m, int j) {
  return GmBuilder().q(j % 2 ? -1 : 1).pow2(Q(2 * j)).gamma(frac(m, 2) + j).inv_gamma(frac(m, 2) - j).done();
}

}  // namespace sb
