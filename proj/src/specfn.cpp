#include "johnson/specfn.hpp"

#include <algorithm>
#include <cmath>

namespace johnson {

namespace {

// Product of integer factors kept as sign, log-magnitude and a count of exact
// zeros, so that zeros in numerator and denominator cancel as a limit would.
class FactorProduct {
 public:
  void multiply(long long f) { accumulate(f, +1); }
  void divide(long long f) { accumulate(f, -1); }

  // (a)_len
  void multiply_rising(long long a, long long len) {
    for (long long l = 0; l < len; ++l) multiply(a + l);
  }
  void divide_rising(long long a, long long len) {
    for (long long l = 0; l < len; ++l) divide(a + l);
  }
  void multiply_factorial(long long v) { multiply_rising(1, v); }
  void divide_factorial(long long v) { divide_rising(1, v); }

  int zeros() const { return zeros_; }
  int sign() const { return sign_; }
  long double log_abs() const { return log_abs_; }

 private:
  void accumulate(long long f, int power) {
    if (f == 0) {
      zeros_ += power;
      return;
    }
    if (f < 0) sign_ = -sign_;
    log_abs_ += power * std::log(static_cast<long double>(f < 0 ? -f : f));
  }

  int zeros_ = 0;
  int sign_ = 1;
  long double log_abs_ = 0.0L;
};

void validate_labels(HalfInt j, HalfInt m, HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
  auto check = [](HalfInt spin, HalfInt proj, const char* name) {
    if (spin.twice < 0) throw std::invalid_argument(std::string("negative spin ") + name);
    if ((spin.twice - proj.twice) % 2 != 0) {
      throw std::invalid_argument(std::string("parity mismatch between spin and projection for ") +
                                  name);
    }
  };
  check(j, m, "j");
  check(j1, m1, "j1");
  check(j2, m2, "j2");
  if ((j1.twice + j2.twice - j.twice) % 2 != 0) {
    throw std::invalid_argument("j1 + j2 - j must be an integer");
  }
}

bool selection_rules_hold(HalfInt j, HalfInt m, HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
  if (m != m1 + m2) return false;
  if (abs(m1) > j1 || abs(m2) > j2 || abs(m) > j) return false;
  if (j < abs(j1 - j2) || j > j1 + j2) return false;
  return true;
}

// Dual Hahn formula for j1 <= j2 and m >= 0. All parameters are integers here.
double dual_hahn_cg(HalfInt j, HalfInt m, HalfInt j1, HalfInt m1, HalfInt j2) {
  const long long i = integer_difference(j1, m1);
  const long long x = integer_difference(j1 - j2 + j, HalfInt{});
  const long long N = j1.twice;
  const long long delta = integer_difference(j2 - j1 - m, HalfInt{});
  const long long gamma = integer_difference(j2 - j1 + m, HalfInt{});

  FactorProduct w;
  // Weight w(x): N! (-N)_x (γ+1)_x (2x+γ+δ+1) / ((-1)^x x! (δ+1)_x (x+γ+δ+1)_{N+1}),
  // with (-N)_x / (-1)^x = N!/(N-x)! folded in so every factor is explicit.
  w.multiply_factorial(N);
  w.multiply_factorial(N);
  w.divide_factorial(N - x);
  w.multiply_rising(gamma + 1, x);
  w.multiply(2 * x + gamma + delta + 1);
  w.divide_factorial(x);
  w.divide_rising(delta + 1, x);
  w.divide_rising(x + gamma + delta + 1, N + 1);
  // binom(γ+i, i) = (γ+1)_i / i!
  w.multiply_rising(gamma + 1, i);
  w.divide_factorial(i);
  // binom(N+δ-i, N-i) = (δ+1)_{N-i} / (N-i)!
  w.multiply_rising(delta + 1, N - i);
  w.divide_factorial(N - i);

  if (w.zeros() > 0) return 0.0;
  if (w.zeros() < 0) throw PoleError("clebsch_gordan: weight has an uncancelled pole");
  long double radicand = w.sign() * std::exp(w.log_abs());
  if (radicand < 0.0L) {
    if (radicand < -1e-12L) throw NumericalError("clebsch_gordan: negative radicand");
    radicand = 0.0L;
  }

  const auto g = static_cast<long double>(gamma);
  const auto d = static_cast<long double>(delta);
  const auto xl = static_cast<long double>(x);
  const long double lambda = xl * (xl + g + d + 1.0L);
  const long double poly = dual_hahn_sum<long double>(static_cast<int>(i), lambda, g, d,
                                                      static_cast<int>(N));
  const long double parity = (i % 2 == 0) ? 1.0L : -1.0L;
  return static_cast<double>(parity * std::sqrt(radicand) * poly);
}

double raw_branch(HalfInt j, HalfInt m, HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                  bool swap) {
  if (m.twice < 0) {
    // <j1 m1; j2 m2 | j m> = (-1)^{j1+j2-j} <j1 -m1; j2 -m2 | j -m>
    const int phase = integer_difference(j1 + j2 - j, HalfInt{});
    const double s = (phase % 2 == 0) ? 1.0 : -1.0;
    return s * raw_branch(j, -m, j1, -m1, j2, -m2, swap);
  }
  if (swap) return dual_hahn_cg(j, m, j2, m2, j1);
  return dual_hahn_cg(j, m, j1, m1, j2);
}

}  // namespace

double hyp2f1_terminating(int a_neg, double b, double c, double z) {
  if (a_neg > 0) throw std::invalid_argument("hyp2f1_terminating: a must be a nonpositive integer");
  double term = 1.0;
  double total = 1.0;
  for (int m = 0; m < -a_neg; ++m) {
    const double num = (a_neg + m) * (b + m);
    if (num == 0.0) break;
    const double den = (c + m) * (m + 1);
    if (den == 0.0) throw PoleError("hyp2f1_terminating: (c)_m vanishes inside the sum");
    term *= num / den * z;
    total += term;
  }
  return total;
}

double dual_hahn(int i, double lambda, const DualHahnParams& p) {
  return static_cast<double>(dual_hahn_sum<long double>(i, lambda, p.gamma, p.delta, p.N));
}

double clebsch_gordan_branch(HalfInt j, HalfInt m, HalfInt j1, HalfInt m1, HalfInt j2,
                             HalfInt m2, bool swap) {
  validate_labels(j, m, j1, m1, j2, m2);
  if (!selection_rules_hold(j, m, j1, m1, j2, m2)) return 0.0;
  return raw_branch(j, m, j1, m1, j2, m2, swap);
}

double clebsch_gordan(HalfInt j, HalfInt m, HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
  validate_labels(j, m, j1, m1, j2, m2);
  if (!selection_rules_hold(j, m, j1, m1, j2, m2)) return 0.0;
  const bool swap = j1 > j2;
  const double value = raw_branch(j, m, j1, m1, j2, m2, swap);

  // Fix the column sign on the largest admissible m1 (never zero: a stretched entry).
  const HalfInt top = std::min(j1, m + j2);
  const double anchor = top == m1 ? value : raw_branch(j, m, j1, top, j2, m - top, swap);
  return anchor < 0.0 ? -value : value;
}

}  // namespace johnson
