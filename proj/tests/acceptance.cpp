// one line per acceptance criterion, nonzero exit if any fails
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "sb/sbo.hpp"
#include "suites.hpp"

using namespace sb;

namespace {

// pinned tolerances
constexpr double kQuadTol = 1e-7;
constexpr double kConvTol = 1e-5;
constexpr double kPdeTol = 1e-6;
constexpr double kMultSeconds = 1.0;
constexpr double kQuadSeconds = 60.0;
constexpr double kFactorSeconds = 5.0;

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome summarize(const std::vector<CaseResult>& cs) {
  int bad = 0;
  std::string first;
  for (auto& c : cs)
    if (!c.pass) {
      ++bad;
      if (first.empty()) first = c.name + " (" + c.detail + ")";
    }
  std::string d = std::to_string(cs.size() - bad) + "/" + std::to_string(cs.size()) + " cases";
  if (!first.empty()) d += ", first failure: " + first;
  return {bad == 0 && !cs.empty(), d};
}

Outcome timed(double limit, const std::function<std::vector<CaseResult>()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  auto cs = f();
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Outcome o = summarize(cs);
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.3f s (limit %.0f s)", s, limit);
  o.detail += buf;
  if (s > limit) o.pass = false;
  return o;
}

std::string sweep_csv(const std::vector<std::string>& args, int& rc) {
  std::vector<std::string> a = {"sbtool", "sweep"};
  a.insert(a.end(), args.begin(), args.end());
  std::ostringstream out, err;
  rc = run_cli(a, out, err);
  return out.str();
}

std::vector<std::map<std::string, std::string>> parse_csv(const std::string& s) {
  std::istringstream in(s);
  std::string line;
  std::vector<std::string> head;
  std::getline(in, line);
  for (std::stringstream ss(line); std::getline(ss, line, ',');) head.push_back(line);
  std::vector<std::map<std::string, std::string>> rows;
  while (std::getline(in, line)) {
    std::map<std::string, std::string> r;
    std::stringstream ss(line);
    for (auto& h : head) std::getline(ss, r[h], ',');
    rows.push_back(r);
  }
  return rows;
}

// octant by the defining inequalities
std::string expected_octant(long n, long l, long v) {
  if (l <= 0) {
    if (v < l) return "I.A";
    if (l <= v && v <= 0) return "I.B";
    if (-l + n - 1 < v) return "II.A";
    if (n - 1 <= v && v <= -l + n - 1) return "II.B";
  }
  if (l >= n) {
    if (l - 1 < v) return "III.A";
    if (n - 1 <= v && v <= l - 1) return "III.B";
    if (v < -l + n) return "IV.A";
    if (-l + n <= v && v <= 0) return "IV.B";
  }
  return "-";
}

// A at (λ, -j) pairs to zero with every tested K-finite vector
bool A_vanishes(int n, long l, long j) {
  auto p = ParamPoint::make(n, l, -j);
  for (int N = 0; N <= 8; N += 2)
    if (!kfinite_A_zero_upto(p, N, 6)) return false;
  return true;
}

// image of A from vanishing of A_{λ,-j}: zero/F(j) for ν = -j, T(j)/J for ν = m+j (T∘A ∝ A_{λ,-j})
std::string expected_image_A(int n, long l, long v) {
  long m = n - 1;
  if (v <= 0) return A_vanishes(n, l, -v) ? "zero" : "F(" + std::to_string(-v) + ")";
  if (v >= m) {
    long j = v - m;
    return A_vanishes(n, l, j) ? "T(" + std::to_string(j) + ")" : "full_J";
  }
  return "-";
}

Outcome criterion11() {
  std::vector<std::string> fails;
  int rc1, rc2;
  // octants
  for (int n : {3, 4}) {
    std::vector<std::string> args = {
        "--n",       std::to_string(n), "--lambda-range=-10:14", "--nu-range=-10:14",
        "--outputs", "octant,image_A"};
    std::string a = sweep_csv(args, rc1), b = sweep_csv(args, rc2);
    if (rc1 || rc2) fails.push_back("sweep exit code");
    if (a != b) fails.push_back("octant/image sweep not byte-stable n=" + std::to_string(n));
    std::set<std::string> seen;
    int bad_oct = 0, bad_img = 0;
    for (auto& r : parse_csv(a)) {
      long l = std::stol(r["lambda"]), v = std::stol(r["nu"]);
      if (r["octant"] != expected_octant(n, l, v)) ++bad_oct;
      if (r["octant"] != "-") seen.insert(r["octant"]);
      std::string img = r["image_A"];
      if (img.rfind("full_J", 0) == 0) img = "full_J";
      if (img != expected_image_A(n, l, v)) ++bad_img;
    }
    if (bad_oct || seen.size() != 8)
      fails.push_back("octants n=" + std::to_string(n) + ": " + std::to_string(bad_oct) + " mismatches, " +
                      std::to_string(seen.size()) + " labels");
    if (bad_img)
      fails.push_back("image_A n=" + std::to_string(n) + ": " + std::to_string(bad_img) + " mismatches");
  }
  // Z_8 for n = 3
  {
    const int n = 3, N = 8;
    std::vector<std::string> args = {
        "--n", "3", "--lambda-range=-10:10", "--nu-range=-10:10", "--outputs", "zero_A", "--N", "8"};
    std::string a = sweep_csv(args, rc1), b = sweep_csv(args, rc2);
    if (rc1 || rc2) fails.push_back("Z_8 sweep exit code");
    if (a != b) fails.push_back("Z_8 sweep not byte-stable");
    int bad = 0, zeros = 0;
    std::set<long> lines_par, lines_ss;
    for (auto& r : parse_csv(a)) {
      long l = std::stol(r["lambda"]), v = std::stol(r["nu"]);
      bool z = r["zero_A"] == "1";
      zeros += z;
      bool on_line = false;
      for (long j = 0; j < N / 2; ++j) {
        if (l - v == -2 * j) {
          on_line = true;
          lines_par.insert(j);
        }
        if (l + v == n + 2 * j) {
          on_line = true;
          lines_ss.insert(j);
        }
      }
      long av = v < 0 ? -v : v;
      bool dot = l + N + av <= 0 && (l + N - v) % 2 == 0;
      if (z != (on_line || dot)) ++bad;
    }
    if (bad) fails.push_back("Z_8: " + std::to_string(bad) + " points off the predicted set");
    if (lines_par.size() != 4 || lines_ss.size() != 4) fails.push_back("Z_8: expected 4+4 lines");
    if (fails.empty())
      return {true, "octants and image_A for n=3,4 on [-10,14]^2, Z_8 n=3 on [-10,10]^2 (" +
                        std::to_string(zeros) + " zeros, 4+4 lines), all sweeps byte-stable"};
  }
  std::string d;
  for (auto& f : fails) d += (d.empty() ? "" : "; ") + f;
  return {false, d};
}

}  // namespace

int main() {
  SuiteOptions so;
  std::vector<std::pair<std::string, std::function<Outcome()>>> crits = {
      {"multiplicity table", [] { return timed(kMultSeconds, check_multiplicity_table); }},
      {"quadrature oracle vs closed form",
       [&] {
         SuiteOptions o = so;
         o.tol = kQuadTol;
         return timed(kQuadSeconds, [&] { return check_quadrature(o); });
       }},
      {"vanishing set", [] { return summarize(check_vanishing()); }},
      {"residue formulae", [] { return summarize(check_residues()); }},
      {"functional identities", [] { return summarize(check_functional()); }},
      {"operator factorizations", [] { return timed(kFactorSeconds, check_factorizations); }},
      {"juhl/taylor cross-check", [] { return summarize(check_juhl_taylor()); }},
      {"fourier identity", [] { return summarize(check_fourier()); }},
      {"knapp-stein",
       [&] {
         SuiteOptions o = so;
         o.tol = kConvTol;
         return summarize(check_knapp_stein(o));
       }},
      {"pde residual",
       [&] {
         SuiteOptions o = so;
         o.tol = kPdeTol;
         return summarize(check_pde(o));
       }},
      {"sweep regression", criterion11},
  };
  int failed = 0;
  for (size_t i = 0; i < crits.size(); ++i) {
    Outcome o;
    try {
      o = crits[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << crits[i].first << "  "
              << o.detail << "\n";
  }
  return failed ? 1 : 0;
}
