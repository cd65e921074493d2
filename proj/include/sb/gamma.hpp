#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sb {

using Q = mpq_class;

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Q parse_q(const std::string& s);
std::string q_str(const Q& q);
bool is_int(const Q& q);
long to_long(const Q& q);
Q floor_q(const Q& q);
Q factorial(long n);
Q binom_q(const Q& top, long k);  // generalized binomial
Q poch(const Q& x, long k);       // rising factorial
Q double_factorial_odd(long k);   // (2k-1)!!, with (-1)!! = 1
Q pow_q(const Q& x, long e);
Q frac(long a, long b);  // canonical a/b

// value x + rate*eps along a one-parameter path
struct Aff {
  Q x;
  Q rate{1};
};

// coeff * 2^two_frac * pi^(pi_half/2) * prod Gamma(num) / prod Gamma(den) * eps^(-order)
struct GammaMonomial {
  bool zero = false;
  Q coeff{1};
  int pi_half = 0;
  Q two_frac{0};
  std::vector<Q> num, den;
  int order = 0;

  bool same_fields(const GammaMonomial& o) const;
};

class GmBuilder {
 public:
  GmBuilder& q(const Q& c);
  GmBuilder& lin(const Aff& a);
  GmBuilder& lin(const Q& x) { return lin(Aff{x, 1}); }
  GmBuilder& gamma(const Aff& a);
  GmBuilder& gamma(const Q& x) { return gamma(Aff{x, 1}); }
  GmBuilder& inv_gamma(const Aff& a);
  GmBuilder& inv_gamma(const Q& x) { return inv_gamma(Aff{x, 1}); }
  GmBuilder& pi(int half_units);
  GmBuilder& pow2(const Q& e);
  GmBuilder& mul(const GammaMonomial& g);
  GammaMonomial done() const;

 private:
  void push(const Aff& a, bool inverse);
  bool zero_ = false;
  Q coeff_{1};
  int pi_ = 0;
  Q two_{0};
  int order_ = 0;
  std::vector<Q> num_, den_;
};

GammaMonomial gm_make(const Q& coeff, int pi_half, const std::vector<Q>& num, const std::vector<Q>& den);
GammaMonomial gm_rational(const Q& c);
GammaMonomial gm_zero();
GammaMonomial gm_mul(const GammaMonomial& a, const GammaMonomial& b);
GammaMonomial gm_div(const GammaMonomial& a, const GammaMonomial& b);
GammaMonomial gm_neg(const GammaMonomial& a);
bool gm_is_zero(const GammaMonomial& a);
bool gm_is_pole(const GammaMonomial& a);
bool gm_eq(const GammaMonomial& a, const GammaMonomial& b);
std::complex<double> gm_eval_f64(const GammaMonomial& a);
std::string gm_str(const GammaMonomial& a);

// finite sums of order-0 monomials grouped by their transcendental part
class GammaSum {
 public:
  struct Key {
    int pi_half;
    Q two_frac;
    std::vector<Q> num, den;
    bool operator<(const Key& o) const;
  };

  GammaSum() = default;
  GammaSum(const GammaMonomial& g) { add(g); }

  void add(const GammaMonomial& g);
  void add(const GammaSum& s);
  GammaSum scaled(const GammaMonomial& g) const;
  GammaSum times(const GammaSum& s) const;
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const GammaSum& o) const;
  bool operator!=(const GammaSum& o) const { return !(*this == o); }
  std::vector<GammaMonomial> terms() const;
  std::complex<double> eval_f64() const;
  std::string str() const;

 private:
  std::map<Key, Q> terms_;
};

GammaSum operator-(const GammaSum& a, const GammaSum& b);

}  // namespace sb
