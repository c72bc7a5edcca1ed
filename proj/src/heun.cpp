#include "johnson/heun.hpp"

#include <algorithm>
#include <cmath>

#include "johnson/spectral.hpp"

namespace johnson {

namespace {

double factor(const GraphSpec& spec) {
  const double n = spec.n(), k = spec.k();
  return n * (n - 1.0) / (k * (n - k));
}

// θ*(i) + θ*(i+1), shared by T and ν so the cut entry cancels exactly.
double dual_pair_sum(int i, const GraphSpec& spec) {
  return dual_eigenvalue_at(i, spec) + dual_eigenvalue_at(i + 1, spec);
}

// θ_j + θ_{j+1}, shared by T1 and μ.
double level_pair_sum(HalfInt j, const GraphSpec& spec) {
  return adjacency_eigenvalue(j, spec) + adjacency_eigenvalue(j + 1, spec);
}

// a_{m1} = sqrt((j1+m1)(j1-m1+1)(j2-m2)(j2+m2+1)), in doubled units.
double lowering_coefficient(const ModuleLabel& label, HalfInt m1, const GraphSpec& spec) {
  const HalfInt m2 = spec.total_m() - m1;
  const double p = static_cast<double>((label.j1 + m1).twice) * (label.j1 - m1 + 1).twice *
                   (label.j2 - m2).twice * (label.j2 + m2 + 1).twice / 16.0;
  return p > 0.0 ? std::sqrt(p) : 0.0;
}

bool in_subsystem(int i, const HeunSpec& hs) {
  return hs.subsystem_inner ? i <= hs.cutoff : i > hs.cutoff;
}

// Rows of the module that lie in SV; always a contiguous run.
std::pair<Eigen::Index, Eigen::Index> subsystem_rows(const ModuleLabel& label, const HeunSpec& hs,
                                                     const GraphSpec& spec) {
  const int first = label.first_distance(spec);
  Eigen::Index begin = -1, count = 0;
  for (int r = 0; r < label.dim; ++r) {
    if (in_subsystem(first + r, hs)) {
      if (begin < 0) begin = r;
      ++count;
    }
  }
  return {std::max<Eigen::Index>(begin, 0), count};
}

}  // namespace

double dual_eigenvalue(HalfInt m1, HalfInt m2, const GraphSpec& spec) {
  if (m1 + m2 != spec.total_m()) throw std::invalid_argument("dual_eigenvalue: m1 + m2 != n/2 - k");
  const double n = spec.n(), k = spec.k(), d = n - 2.0 * k;
  return -(n - 1.0) * d * d / (4.0 * k * (n - k)) + factor(spec) / 2.0 * (m1 - m2).value();
}

double dual_eigenvalue_at(double i, const GraphSpec& spec) {
  const double n = spec.n(), k = spec.k(), d = n - 2.0 * k;
  return -(n - 1.0) * d * d / (4.0 * k * (n - k)) + factor(spec) / 2.0 * (n / 2.0 - 2.0 * i);
}

TridiagonalCoefficients tridiagonal_A_coefficients(const ModuleLabel& label, HalfInt m1,
                                                   const GraphSpec& spec) {
  if (std::find(label.m1_range.begin(), label.m1_range.end(), m1) == label.m1_range.end()) {
    throw std::out_of_range("tridiagonal_A_coefficients: m1 outside the module");
  }
  const HalfInt m2 = spec.total_m() - m1;
  const double b = label.j1.value() * (label.j1.value() + 1.0) +
                   label.j2.value() * (label.j2.value() + 1.0) - m1.value() * m1.value() -
                   m2.value() * m2.value() - spec.n() / 2.0;
  return {lowering_coefficient(label, m1, spec), b};
}

TridiagonalCoefficients tridiagonal_Astar_coefficients(HalfInt j, const ModuleLabel& label,
                                                       const GraphSpec& spec) {
  const auto levels = label.levels(spec);
  if (std::find(levels.begin(), levels.end(), j) == levels.end()) {
    throw std::out_of_range("tridiagonal_Astar_coefficients: j outside the module");
  }
  const double n = spec.n(), k = spec.k(), d = n - 2.0 * k;
  const double jv = j.value(), j1 = label.j1.value(), j2 = label.j2.value();
  const double m = spec.total_m().value();

  double a = 0.0;
  if (j != levels.front()) {
    const double num = (jv * jv - m * m) * (jv * jv - (j1 - j2) * (j1 - j2)) *
                       ((j1 + j2 + 1.0) * (j1 + j2 + 1.0) - jv * jv);
    const double den = (4.0 * jv * jv - 1.0) * 4.0 * jv * jv;
    a = factor(spec) * std::sqrt(std::max(num / den, 0.0));
  }
  double b = -(n - 1.0) * d / (2.0 * k);
  if (j.twice != 0) {
    b += n * (n - 1.0) * d / (2.0 * k * (n - k)) *
         (0.5 + (j1 + j2 + 1.0) * (j1 - j2) / (2.0 * jv * (jv + 1.0)));
  }
  return {a, b};
}

Tridiagonal<double> module_A_action(const ModuleLabel& label, const GraphSpec& spec,
                                    AIndexConvention convention) {
  Tridiagonal<double> t;
  t.diagonal.resize(label.dim);
  t.offdiagonal.resize(std::max(label.dim - 1, 0));
  for (int r = 0; r < label.dim; ++r) {
    const HalfInt m1 = label.m1_range[static_cast<std::size_t>(r)];
    t.diagonal(r) = tridiagonal_A_coefficients(label, m1, spec).diagonal;
    if (r + 1 < label.dim) {
      const HalfInt at = convention == AIndexConvention::Lowering
                             ? m1
                             : label.m1_range[static_cast<std::size_t>(r + 1)];
      t.offdiagonal(r) = lowering_coefficient(label, at, spec);
    }
  }
  return t;
}

AIndexConvention resolve_a_convention() {
  static const AIndexConvention resolved = [] {
    auto reproduces = [](AIndexConvention c) {
      for (const GraphSpec spec : {GraphSpec(6, 3), GraphSpec(7, 2), GraphSpec(9, 4)}) {
        for (const auto& label : enumerate_modules(spec)) {
          const auto values = tridiagonal_eigen(module_A_action(label, spec, c), false).values;
          const auto levels = label.levels(spec);
          if (values.size() != static_cast<Eigen::Index>(levels.size())) return false;
          for (std::size_t l = 0; l < levels.size(); ++l) {
            const double expect = adjacency_eigenvalue(levels[l], spec);
            if (std::abs(values(static_cast<Eigen::Index>(l)) - expect) > 1e-9 * (1.0 + std::abs(expect))) {
              return false;
            }
          }
        }
      }
      return true;
    };
    if (reproduces(AIndexConvention::Lowering)) return AIndexConvention::Lowering;
    if (reproduces(AIndexConvention::Raising)) return AIndexConvention::Raising;
    throw NumericalError("no placement of a_{m1} reproduces the adjacency spectrum");
  }();
  return resolved;
}

Tridiagonal<double> module_A_action(const ModuleLabel& label, const GraphSpec& spec) {
  return module_A_action(label, spec, resolve_a_convention());
}

Tridiagonal<double> module_Astar_action(const ModuleLabel& label, const GraphSpec& spec) {
  const auto levels = label.levels(spec);
  const auto size = static_cast<Eigen::Index>(levels.size());
  Tridiagonal<double> t;
  t.diagonal.resize(size);
  t.offdiagonal.resize(std::max<Eigen::Index>(size - 1, 0));
  for (Eigen::Index c = 0; c < size; ++c) {
    const auto coeff = tridiagonal_Astar_coefficients(levels[static_cast<std::size_t>(c)], label, spec);
    t.diagonal(c) = coeff.diagonal;
    if (c > 0) t.offdiagonal(c - 1) = coeff.off;
  }
  return t;
}

HeunSpec make_heun_spec(const GraphSpec& spec, int cutoff, HalfInt j0, bool subsystem_inner,
                        bool filling_lower) {
  if (cutoff < 0 || cutoff > spec.k()) throw std::invalid_argument("heun: cutoff outside [0, k]");
  const auto levels = spec.levels();
  if (std::find(levels.begin(), levels.end(), j0) == levels.end()) {
    throw std::invalid_argument("heun: j0 = " + to_string(j0) + " is not a level");
  }
  if (!subsystem_inner && cutoff == spec.k()) {
    throw std::invalid_argument("heun: outer subsystem beyond cutoff k is empty");
  }
  HeunSpec hs;
  hs.cutoff = cutoff;
  hs.j0 = j0;
  hs.subsystem_inner = subsystem_inner;
  hs.filling_lower = filling_lower;
  hs.mu = -level_pair_sum(j0, spec);
  hs.nu = -dual_pair_sum(cutoff, spec);
  return hs;
}

FillingSpec heun_filling(const HeunSpec& hs, const GraphSpec& spec) {
  std::vector<HalfInt> occupied;
  for (HalfInt j : spec.levels()) {
    if ((j <= hs.j0) == hs.filling_lower) occupied.push_back(j);
  }
  return FillingSpec(std::move(occupied), spec);
}

SubsystemSpec heun_subsystem(const HeunSpec& hs, const GraphSpec& spec) {
  std::vector<int> d;
  for (int i = 0; i <= spec.k(); ++i) {
    if (in_subsystem(i, hs)) d.push_back(i);
  }
  return SubsystemSpec(std::move(d), spec);
}

Tridiagonal<double> build_T(const ModuleLabel& label, const HeunSpec& hs, const GraphSpec& spec) {
  Tridiagonal<double> t = module_A_action(label, spec);
  const int first = label.first_distance(spec);
  for (int r = 0; r < label.dim; ++r) {
    const double b = t.diagonal(r);
    const double ts = dual_eigenvalue_at(first + r, spec);
    t.diagonal(r) = hs.nu * b + hs.mu * ts + 2.0 * b * ts;
    if (r + 1 < label.dim) t.offdiagonal(r) *= dual_pair_sum(first + r, spec) + hs.nu;
  }
  return t;
}

Tridiagonal<double> build_T_jbasis(const ModuleLabel& label, const HeunSpec& hs,
                                   const GraphSpec& spec) {
  Tridiagonal<double> t = module_Astar_action(label, spec);
  const auto levels = label.levels(spec);
  for (Eigen::Index c = 0; c < t.size(); ++c) {
    const HalfInt j = levels[static_cast<std::size_t>(c)];
    const double bs = t.diagonal(c);
    const double theta = adjacency_eigenvalue(j, spec);
    t.diagonal(c) = hs.mu * bs + hs.nu * theta + 2.0 * bs * theta;
    if (c + 1 < t.size()) t.offdiagonal(c) *= level_pair_sum(j, spec) + hs.mu;
  }
  return t;
}

double commutant_residual(const ModuleBasis& basis, const HeunSpec& hs, const GraphSpec& spec,
                          double mu_shift) {
  HeunSpec shifted = hs;
  shifted.mu += mu_shift;
  const auto [begin, count] = subsystem_rows(basis.label, hs, spec);
  if (count == 0) return 0.0;
  const Matrix t = build_T(basis.label, shifted, spec).block(begin, count).dense();
  const Matrix c =
      module_correlation_block(basis, heun_filling(hs, spec), heun_subsystem(hs, spec), spec).entries;
  return (c * t - t * c).cwiseAbs().maxCoeff();
}

CorrelationSpectrum spectrum_via_heun(const std::vector<ModuleBasis>& bases, const GraphSpec& spec,
                                      const HeunSpec& hs) {
  const FillingSpec filling = heun_filling(hs, spec);
  const SubsystemSpec sub = heun_subsystem(hs, spec);
  std::vector<SpectrumEntry> raw;
  for (const auto& basis : bases) {
    const auto [begin, count] = subsystem_rows(basis.label, hs, spec);
    if (count == 0) continue;
    const auto eig = tridiagonal_eigen(build_T(basis.label, hs, spec).block(begin, count));
    const Matrix c = module_correlation_block(basis, filling, sub, spec).entries;
    const double scale = std::max(1.0, eig.values.cwiseAbs().maxCoeff());

    // Simple T eigenvalues give C eigenvectors directly; clusters are resolved locally.
    Eigen::Index start = 0;
    while (start < count) {
      Eigen::Index stop = start + 1;
      while (stop < count && eig.values(stop) - eig.values(stop - 1) < 1e-8 * scale) ++stop;
      const Matrix v = eig.vectors.middleCols(start, stop - start);
      if (stop - start == 1) {
        raw.push_back({v.col(0).dot(c * v.col(0)), basis.label.degeneracy});
      } else {
        Matrix projected = v.transpose() * c * v;
        projected = (projected + projected.transpose()) / 2.0;
        const auto local = jacobi_eigen(projected, false);
        for (Eigen::Index e = 0; e < local.values.size(); ++e) {
          raw.push_back({local.values(e), basis.label.degeneracy});
        }
      }
      start = stop;
    }
  }
  return group_spectrum(std::move(raw));
}

CorrelationSpectrum spectrum_via_heun(const GraphSpec& spec, const HeunSpec& hs) {
  return spectrum_via_heun(module_bases(spec), spec, hs);
}

}  // namespace johnson
