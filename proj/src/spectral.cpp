#include "johnson/spectral.hpp"

#include <cmath>

#include "johnson/terwilliger.hpp"

namespace johnson {

double adjacency_eigenvalue(HalfInt j, const GraphSpec& spec) {
  const double jv = j.value();
  const double d = spec.n() - 2 * spec.k();
  return jv * (jv + 1.0) - d * d / 4.0 - spec.n() / 2.0;
}

namespace {

EnergyTable skeleton(const GraphSpec& spec) {
  EnergyTable table;
  for (HalfInt j : spec.levels()) {
    table.push_back({j, adjacency_eigenvalue(j, spec), 0.0, level_degeneracy(j, spec)});
  }
  return table;
}

}  // namespace

EnergyTable energy_table(const GraphSpec& spec, const HoppingProfile& hop) {
  if (static_cast<int>(hop.alphas.size()) != spec.k() + 1) {
    throw std::invalid_argument("hopping profile length does not match k+1");
  }
  EnergyTable table = skeleton(spec);
  const int k = spec.k();
  const auto delta = static_cast<long double>(spec.n() - 2 * k);
  for (auto& row : table) {
    const long double lambda = static_cast<long double>(row.theta) + k;
    long double omega = 0.0L;
    for (int i = 0; i <= k; ++i) {
      const long double alpha = hop.alphas[static_cast<std::size_t>(i)];
      if (alpha == 0.0L) continue;
      const long double r = dual_hahn_sum<long double>(i, lambda, 0.0L, delta, k);
      omega += alpha * ((i % 2 == 0) ? 1.0L : -1.0L) * static_cast<long double>(binomial(k, i)) * r;
    }
    row.omega = static_cast<double>(omega);
  }
  return table;
}

EnergyTable energy_exponential(const GraphSpec& spec, double c) {
  if (!(c >= 0.0)) throw std::invalid_argument("energy_exponential: c must be >= 0");
  EnergyTable table = skeleton(spec);
  const double z = std::exp(-c);
  const HalfInt m = spec.total_m();
  for (auto& row : table) {
    const int a = integer_difference(m - row.j, HalfInt{});      // n/2 - k - j <= 0
    const double b = -(m + row.j).value();                       // -n/2 + k - j
    const double exponent = spec.n() / 2.0 - row.j.value();
    const double prefactor = exponent == 0.0 ? 1.0 : std::pow(1.0 - z, exponent);
    row.omega = prefactor * hyp2f1_terminating(a, b, 1.0, z);
  }
  return table;
}

FillingSpec fill_ground_state(const EnergyTable& table, const GraphSpec& spec, double tol,
                              bool include_zero) {
  std::vector<HalfInt> occupied;
  for (const auto& row : table) {
    if (row.omega < -tol || (include_zero && row.omega <= tol)) occupied.push_back(row.j);
  }
  return FillingSpec(std::move(occupied), spec);
}

SymmetricEigen<double> symmetric_eigen(const Matrix& m, Index cap) {
  if (m.rows() > cap) throw CapacityError("symmetric_eigen: dimension exceeds dense cap");
  return jacobi_eigen(m);
}

EigenProjectors eigenprojectors_oracle(const GraphSpec& spec, Index cap) {
  const Matrix a = adjacency_matrix(1, spec, cap);
  const auto eig = symmetric_eigen(a, cap);
  const auto levels = spec.levels();
  const double spread = adjacency_eigenvalue(levels.back(), spec) - adjacency_eigenvalue(levels.front(), spec);
  const double tol = 1e-6 * std::max(spread, 1.0);

  EigenProjectors out;
  for (HalfInt j : levels) out.by_level[j] = Matrix::Zero(a.rows(), a.cols());
  for (Eigen::Index c = 0; c < eig.values.size(); ++c) {
    const double v = eig.values(c);
    const HalfInt* match = nullptr;
    for (const HalfInt& j : levels) {
      if (std::abs(v - adjacency_eigenvalue(j, spec)) <= tol) {
        if (match) throw NumericalError("eigenprojectors: eigenvalue matches two levels");
        match = &j;
      }
    }
    if (!match) throw NumericalError("eigenprojectors: eigenvalue " + std::to_string(v) + " matches no level");
    const Vector col = eig.vectors.col(c);
    out.by_level[*match] += col * col.transpose();
  }
  return out;
}

Matrix chopped_correlation_oracle(const EigenProjectors& proj, const GraphSpec& spec,
                                  const FillingSpec& filling, const SubsystemSpec& sub) {
  const auto dist = distances_from(sub.x0(), spec);
  std::vector<Eigen::Index> rows;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (sub.contains(dist[v])) rows.push_back(static_cast<Eigen::Index>(v));
  }
  const auto size = static_cast<Eigen::Index>(rows.size());
  Matrix c = Matrix::Zero(size, size);
  for (HalfInt j : filling.occupied()) {
    const Matrix& e = proj.by_level.at(j);
    for (Eigen::Index r = 0; r < size; ++r) {
      for (Eigen::Index s = 0; s < size; ++s) c(r, s) += e(rows[r], rows[s]);
    }
  }
  // Exact symmetry for the downstream Jacobi check.
  return (c + c.transpose()) / 2.0;
}

Matrix chopped_correlation_oracle(const GraphSpec& spec, const FillingSpec& filling,
                                  const SubsystemSpec& sub, Index cap) {
  return chopped_correlation_oracle(eigenprojectors_oracle(spec, cap), spec, filling, sub);
}

CorrelationSpectrum spectrum_oracle(const Matrix& c, Index cap) {
  if (c.rows() > cap) throw CapacityError("spectrum_oracle: dimension exceeds dense cap");
  const auto eig = jacobi_eigen(c, false);
  std::vector<SpectrumEntry> raw;
  raw.reserve(static_cast<std::size_t>(eig.values.size()));
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) raw.push_back({eig.values(i), 1});
  return group_spectrum(std::move(raw));
}

}  // namespace johnson
