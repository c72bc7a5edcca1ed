#pragma once

#include "johnson/common.hpp"

namespace johnson {

/// Rising factorial (a)_m = a (a+1) ... (a+m-1); (a)_0 = 1.
template <typename Scalar>
Scalar pochhammer(Scalar a, int m) {
  if (m < 0) throw std::invalid_argument("pochhammer: negative length");
  Scalar acc(1);
  for (int l = 0; l < m; ++l) acc *= a + Scalar(l);
  return acc;
}

/// 2F1(a, b; c; z) for a = -|a|, summed over its |a|+1 terms.
/// Throws PoleError when (c)_m vanishes at a term whose numerator does not.
double hyp2f1_terminating(int a_neg, double b, double c, double z);

struct DualHahnParams {
  double gamma = 0.0;
  double delta = 0.0;
  int N = 0;
};

/// Dual Hahn polynomial R_i(λ; γ, δ, N) evaluated at a given value of
/// λ = x(x + γ + δ + 1), as the terminating 3F2 sum
///   Σ_s (-i)_s Π_{l<s}(-λ + l(γ+δ+1) + l²) / ((γ+1)_s (-N)_s s!).
double dual_hahn(int i, double lambda, const DualHahnParams& p);

/// Same sum in the caller's scalar type. Requires 0 <= i <= N.
template <typename Scalar>
Scalar dual_hahn_sum(int i, Scalar lambda, Scalar gamma, Scalar delta, int N) {
  if (i < 0 || i > N) throw std::invalid_argument("dual_hahn: degree outside [0, N]");
  const Scalar shift = gamma + delta + Scalar(1);
  Scalar term(1);
  Scalar total(1);
  for (int s = 0; s < i; ++s) {
    const Scalar num = Scalar(s - i) * (-lambda + Scalar(s) * shift + Scalar(s) * Scalar(s));
    if (num == Scalar(0)) break;
    const Scalar den = (gamma + Scalar(1 + s)) * Scalar(s - N) * Scalar(s + 1);
    if (den == Scalar(0)) throw PoleError("dual_hahn: (gamma+1)_s vanishes");
    term *= num / den;
    total += term;
  }
  return total;
}

/// su(2) Clebsch–Gordan coefficient <j1 m1; j2 m2 | j m> from its dual Hahn
/// representation. Selection-rule violations return 0; malformed labels throw.
/// Column sign: the entry with the largest admissible m1 is positive.
double clebsch_gordan(HalfInt j, HalfInt m, HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2);

/// Unnormalised-sign value of the dual Hahn formula, evaluated on the branch
/// chosen by `swap` (false: j1 plays the smaller spin). Exposed so tests can
/// confirm that both branches agree when j1 == j2. Requires valid labels.
double clebsch_gordan_branch(HalfInt j, HalfInt m, HalfInt j1, HalfInt m1, HalfInt j2,
                             HalfInt m2, bool swap);

}  // namespace johnson
