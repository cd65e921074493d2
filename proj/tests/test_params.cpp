#include <doctest.h>

#include <set>

#include "sb/params.hpp"

using namespace sb;

namespace {

ParamPoint P(int n, Q l, Q v) { return ParamPoint::make(n, l, v); }

}  // namespace

TEST_CASE("classification examples") {
  auto r = classify(P(3, 1, 3));
  CHECK(r.in_parallel);
  CHECK(r.l == 1);
  CHECK_FALSE(r.in_slashslash);

  r = classify(P(3, -2, 0));
  CHECK(r.in_Leven);
  CHECK(r.in_parallel);
  CHECK(r.l == 1);
  CHECK(r.in_slashslash);
  CHECK(r.k == 2);
  CHECK(r.in_X);

  r = classify(P(4, -2, 0));
  CHECK(r.in_Leven);
  CHECK_FALSE(r.in_slashslash);
}

TEST_CASE("L_even sits in X for n odd and avoids \\\\ for n even") {
  for (int n = 2; n <= 7; ++n)
    for (int l = -10; l <= 0; ++l)
      for (int v = -10; v <= 0; ++v) {
        auto p = P(n, l, v);
        if (!in_Leven(p)) continue;
        if (n % 2)
          CHECK(in_X(p));
        else {
          CHECK(classify(p).in_parallel);
          CHECK_FALSE(classify(p).in_slashslash);
        }
      }
}

TEST_CASE("L_even and L_odd are disjoint and membership is exact") {
  for (int n = 2; n <= 5; ++n)
    for (int l = -6; l <= 6; ++l)
      for (int v = -6; v <= 6; ++v) {
        auto p = P(n, l, v);
        CHECK_FALSE((in_Leven(p) && in_Lodd(p)));
        bool both = l <= 0 && v <= 0 && l <= v;
        CHECK((in_Leven(p) || in_Lodd(p)) == both);
      }
  CHECK_FALSE(in_Leven(P(3, frac(-1, 2), frac(-1, 2))));
}

TEST_CASE("principal multiplicity") {
  CHECK(multiplicity_principal(P(3, -2, 0)) == 2);
  CHECK(multiplicity_principal(P(3, -1, 0)) == 1);
  CHECK(multiplicity_principal(P(5, frac(1, 2), 17)) == 1);
  for (int n = 2; n <= 5; ++n)
    for (int l = -12; l <= 16; ++l)
      for (int v = -12; v <= 15; ++v) {
        auto p = P(n, l, v);
        CHECK(multiplicity_principal(p) == (in_Leven(p) ? 2 : 1));
      }
}

TEST_CASE("composition-factor multiplicities") {
  auto f = multiplicity_factors(4, 4, 2);
  CHECK((f.mTT == 1 && f.mTF == 0 && f.mFF == 1));
  f = multiplicity_factors(4, 3, 2);
  CHECK((f.mTT == 0 && f.mTF == 1 && f.mFF == 0));
  f = multiplicity_factors(4, 1, 5);
  CHECK((f.mTT == 0 && f.mTF == 1 && f.mFF == 0));

  CHECK(multiplicity_I_to_factor(3, frac(7, 2), 2, 'F') == 1);
  CHECK(multiplicity_I_to_factor(3, Q(-4), 2, 'T') == 1);
  CHECK(multiplicity_I_to_factor(3, Q(-3), 2, 'T') == 0);
}

TEST_CASE("bases of the space of symmetry breaking operators") {
  auto b = basis_of_H(P(3, -2, 0));
  CHECK(b.basis == std::vector<Kind>{Kind::BB, Kind::C});
  CHECK((b.dim_H == 2 && b.dim_H_sing == 2 && b.dim_H_diff == 1));

  b = basis_of_H(P(4, -2, 0));
  CHECK(b.basis == std::vector<Kind>{Kind::AA, Kind::C});
  CHECK((b.dim_H == 2 && b.dim_H_sing == 1 && b.dim_H_diff == 1));

  b = basis_of_H(P(3, frac(1, 3), -5));
  CHECK(b.basis == std::vector<Kind>{Kind::A});
  CHECK((b.dim_H == 1 && b.dim_H_sing == 0 && b.dim_H_diff == 0));

  // dim H always equals the principal multiplicity
  for (int n = 2; n <= 5; ++n)
    for (int l = -6; l <= 6; ++l)
      for (int v = -6; v <= 6; ++v) {
        auto p = P(n, l, v);
        auto r = basis_of_H(p);
        CHECK(r.dim_H == multiplicity_principal(p));
        CHECK(static_cast<int>(r.basis.size()) == r.dim_H);
        CHECK(r.dim_H_diff <= r.dim_H_sing);
        CHECK(r.dim_H_diff == (classify(p).in_parallel ? 1 : 0));
      }
}

TEST_CASE("weyl orbit classes") {
  CHECK(weyl_orbit_class(P(3, 5, 0)) == "L_even-orbit");
  CHECK(weyl_orbit_class(P(3, -1, 0)) == "L_odd-orbit");
  CHECK_THROWS_AS(weyl_orbit_class(P(3, 1, 1)), domain_error);
  // invariance under both reflections
  for (int n = 2; n <= 5; ++n)
    for (int l = -8; l <= 8 + n; ++l)
      for (int v = -8; v <= 8 + n; ++v) {
        auto p = P(n, l, v);
        if (!in_reducible_lattice(p)) continue;
        std::string c = weyl_orbit_class(p);
        CHECK(weyl_orbit_class(P(n, n - l, v)) == c);
        CHECK(weyl_orbit_class(P(n, l, n - 1 - v)) == c);
        if (in_Leven(p)) CHECK(c == "L_even-orbit");
      }
}

TEST_CASE("octants partition the doubly reducible points") {
  for (int n = 2; n <= 5; ++n) {
    std::set<std::string> seen;
    for (int l = -12; l <= 12 + n; ++l)
      for (int v = -12; v <= 12 + n; ++v) {
        auto p = P(n, l, v);
        auto o = octant(p);
        bool doubly = (l <= 0 || l >= n) && (v <= 0 || v >= n - 1);
        CHECK(o.has_value() == doubly);
        if (o) seen.insert(*o);
      }
    CHECK(seen.size() == 8);
  }
  CHECK(octant(P(3, -1, -3)) == "I.A");
  CHECK(octant(P(3, -2, 0)) == "I.B");
  CHECK(octant(P(3, -1, 5)) == "II.A");
  CHECK(octant(P(3, -1, 3)) == "II.B");
  CHECK(octant(P(3, 4, 5)) == "III.A");
  CHECK(octant(P(3, 4, 2)) == "III.B");
  CHECK(octant(P(3, 4, -2)) == "IV.A");
  CHECK(octant(P(3, 4, -1)) == "IV.B");
  CHECK_FALSE(octant(P(3, frac(1, 2), 0)).has_value());
}

TEST_CASE("numeric classification is tri-state") {
  auto p = ParamPoint::numeric(3, {-2.0, 0}, {1e-13, 0});
  auto r = classify_numeric(p);
  CHECK(r.in_Leven == Tri::within_tolerance);
  CHECK(classify_numeric(ParamPoint::numeric(3, {0.3, 0}, {0.25, 0})).in_Leven == Tri::out);
  CHECK_THROWS(classify(p));
}

TEST_CASE("parsing and validation") {
  auto s = parse_scalar("-7/3");
  CHECK(s.exact);
  CHECK(s.q == frac(-7, 3));
  CHECK_FALSE(parse_scalar("0.25").exact);
  CHECK_FALSE(parse_scalar("1.5+2i").exact);
  CHECK_THROWS(parse_scalar("abc"));
  CHECK_THROWS(validate(P(1, 0, 0)));
  CHECK(parse_point(3, "4/2", "0").lambda == 2);
}
