#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sb/gamma.hpp"

namespace sb {

// c[i] is the coefficient of s^i
struct Poly1 {
  std::vector<Q> c;

  Poly1() = default;
  explicit Poly1(std::vector<Q> coeffs);
  static Poly1 monomial(int d, const Q& a = 1);

  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  Q at(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : Q(0); }
  Q eval(const Q& s) const;
  double eval(double s) const;
  void trim();
  bool operator==(const Poly1& o) const { return c == o.c; }
  std::string str(const char* var = "s") const;
};

Poly1 operator+(const Poly1& a, const Poly1& b);
Poly1 operator-(const Poly1& a, const Poly1& b);
Poly1 operator*(const Poly1& a, const Poly1& b);
Poly1 operator*(const Q& k, const Poly1& a);
Poly1 parse_poly1(const std::string& csv);

// key (i, j) = s^i t^j
struct Poly2 {
  std::map<std::pair<int, int>, Q> c;

  void add(int i, int j, const Q& a);
  Q at(int i, int j) const;
  bool operator==(const Poly2& o) const { return c == o.c; }
  Q eval(const Q& s, const Q& t) const;
  std::string str() const;
};

Poly2 operator*(const Q& k, const Poly2& a);

}  // namespace sb
