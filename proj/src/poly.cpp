#include "sb/poly.hpp"

#include <sstream>

namespace sb {

Poly1::Poly1(std::vector<Q> coeffs) : c(std::move(coeffs)) { trim(); }

Poly1 Poly1::monomial(int d, const Q& a) {
  Poly1 p;
  p.c.assign(d + 1, Q(0));
  p.c[d] = a;
  p.trim();
  return p;
}

void Poly1::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Q Poly1::eval(const Q& s) const {
  Q r = 0;
  for (int i = degree(); i >= 0; --i) r = r * s + c[i];
  return r;
}

double Poly1::eval(double s) const {
  double r = 0;
  for (int i = degree(); i >= 0; --i) r = r * s + c[i].get_d();
  return r;
}

std::string Poly1::str(const char* var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    os << c[i].get_str();
    if (i == 1) os << "·" << var;
    if (i > 1) os << "·" << var << "^" << i;
    first = false;
  }
  return os.str();
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
  std::vector<Q> r(std::max(a.c.size(), b.c.size()), Q(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return Poly1(std::move(r));
}

Poly1 operator-(const Poly1& a, const Poly1& b) { return a + Q(-1) * b; }

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return Poly1();
  std::vector<Q> r(a.c.size() + b.c.size() - 1, Q(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return Poly1(std::move(r));
}

Poly1 operator*(const Q& k, const Poly1& a) {
  std::vector<Q> r = a.c;
  for (auto& x : r) x *= k;
  return Poly1(std::move(r));
}

Poly1 parse_poly1(const std::string& csv) {
  std::vector<Q> r;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty coefficient in '" + csv + "'");
    r.push_back(parse_q(tok.substr(a, b - a + 1)));
  }
  return Poly1(std::move(r));
}

void Poly2::add(int i, int j, const Q& a) {
  if (a == 0) return;
  auto key = std::make_pair(i, j);
  auto it = c.find(key);
  if (it == c.end()) {
    c.emplace(key, a);
  } else {
    it->second += a;
    if (it->second == 0) c.erase(it);
  }
}

Q Poly2::at(int i, int j) const {
  auto it = c.find({i, j});
  return it == c.end() ? Q(0) : it->second;
}

Q Poly2::eval(const Q& s, const Q& t) const {
  Q r = 0;
  for (auto& [k, a] : c) r += a * pow_q(s, k.first) * pow_q(t, k.second);
  return r;
}

std::string Poly2::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (!first) os << " + ";
    os << it->second.get_str();
    if (it->first.first) os << "·s^" << it->first.first;
    if (it->first.second) os << "·t^" << it->first.second;
    first = false;
  }
  return os.str();
}

Poly2 operator*(const Q& k, const Poly2& a) {
  Poly2 r;
  for (auto& [key, v] : a.c) r.add(key.first, key.second, k * v);
  return r;
}

}  // namespace sb
