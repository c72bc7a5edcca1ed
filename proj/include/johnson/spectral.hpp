#pragma once

#include <map>

#include "johnson/eigensolvers.hpp"
#include "johnson/scheme.hpp"
#include "johnson/specfn.hpp"
#include "johnson/types.hpp"

namespace johnson {

/// θ_j = j(j+1) - (n-2k)²/4 - n/2, the eigenvalue of A on level j.
double adjacency_eigenvalue(HalfInt j, const GraphSpec& spec);

/// θ_j, Ω_j = Σ α_i (-1)^i C(k,i) R_i(θ_j + k; 0, n-2k, k) and D_j for every level.
EnergyTable energy_table(const GraphSpec& spec, const HoppingProfile& hop);

/// Same table for α_i = e^{-ci}, with Ω_j from the generating-function closed form.
EnergyTable energy_exponential(const GraphSpec& spec, double c);

/// SE = { j : Ω_j < -tol }, or Ω_j <= tol when zero-energy levels are included.
FillingSpec fill_ground_state(const EnergyTable& table, const GraphSpec& spec, double tol = 1e-12,
                              bool include_zero = false);

/// Full eigendecomposition of a dense symmetric matrix (Jacobi), ascending.
SymmetricEigen<double> symmetric_eigen(const Matrix& m, Index cap = default_dense_cap());

/// (-1)^i C(k,i) R_i(A + k; 0, n-2k, k), evaluated on an arbitrary square matrix.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> dual_hahn_matrix(
    int i, const Eigen::MatrixBase<Derived>& a, const GraphSpec& spec) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const int k = spec.k();
  if (i < 0 || i > k) throw std::out_of_range("dual_hahn_matrix: degree outside [0, k]");
  const Scalar gamma(0);
  const auto shift = Scalar(spec.n() - 2 * k + 1);  // γ + δ + 1
  const Mat id = Mat::Identity(a.rows(), a.cols());
  const Mat lambda = a + Scalar(k) * id;
  Mat product = id;
  Mat total = id;
  Scalar coeff(1);
  for (int s = 0; s < i; ++s) {
    product = product * (-lambda + (Scalar(s) * shift + Scalar(s) * Scalar(s)) * id);
    coeff *= Scalar(s - i) / ((gamma + Scalar(1 + s)) * Scalar(s - k) * Scalar(s + 1));
    total += coeff * product;
  }
  const Scalar sign = (i % 2 == 0) ? Scalar(1) : Scalar(-1);
  return sign * Scalar(binomial(k, i)) * total;
}

/// Eigenprojectors E_j of A, keyed by j.
struct EigenProjectors {
  std::map<HalfInt, Matrix> by_level;
};

/// Diagonalizes A and assigns each eigenvalue to the unique θ_j within
/// 1e-6 of the spectral spread; throws NumericalError on ambiguity.
EigenProjectors eigenprojectors_oracle(const GraphSpec& spec, Index cap = default_dense_cap());

/// The |SV|×|SV| restriction of Σ_{j∈SE} E_j, rows in colex order.
Matrix chopped_correlation_oracle(const EigenProjectors& proj, const GraphSpec& spec,
                                  const FillingSpec& filling, const SubsystemSpec& sub);
Matrix chopped_correlation_oracle(const GraphSpec& spec, const FillingSpec& filling,
                                  const SubsystemSpec& sub, Index cap = default_dense_cap());

/// Eigenvalues of a correlation matrix, clamped and grouped.
CorrelationSpectrum spectrum_oracle(const Matrix& c, Index cap = default_dense_cap());

}  // namespace johnson
