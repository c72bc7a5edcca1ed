#include "johnson/terwilliger.hpp"

#include <algorithm>

#include "johnson/eigensolvers.hpp"
#include "johnson/specfn.hpp"

namespace johnson {

namespace {

// Multiplicity of spin N/2 - l in the N-fold tensor power of spin 1/2.
Index spin_multiplicity(int N, int l) { return binomial(N, l) - binomial(N, l - 1); }

int distance_of(HalfInt m1, const GraphSpec& spec) { return integer_difference(spec.spin1(), m1); }

}  // namespace

int ModuleLabel::first_distance(const GraphSpec& spec) const {
  return distance_of(m1_range.front(), spec);
}

std::vector<HalfInt> ModuleLabel::levels(const GraphSpec& spec) const {
  std::vector<HalfInt> out;
  for (HalfInt j = std::max(abs(j1 - j2), spec.total_m()); j <= j1 + j2; j = j + 1) out.push_back(j);
  return out;
}

bool ModuleLabel::contains_distance(int i, const GraphSpec& spec) const {
  const int first = first_distance(spec);
  return i >= first && i < first + dim;
}

Index module_degeneracy(HalfInt j1, HalfInt j2, const GraphSpec& spec) {
  const int n = spec.n(), k = spec.k();
  const int l1 = integer_difference(spec.spin1(), j1);
  const int l2 = integer_difference(spec.spin2(), j2);
  if (l1 < 0 || l2 < 0 || j1.twice < 0 || j2.twice < 0) {
    throw std::invalid_argument("module_degeneracy: spins outside the admissible range");
  }
  Index d = 0;
  if (__builtin_mul_overflow(spin_multiplicity(n - k, l1), spin_multiplicity(k, l2), &d)) {
    throw std::overflow_error("module_degeneracy: overflow");
  }
  return d;
}

std::vector<ModuleLabel> enumerate_modules(const GraphSpec& spec) {
  std::vector<ModuleLabel> out;
  const HalfInt m = spec.total_m();
  for (HalfInt j1 = spec.spin1(); j1.twice >= 0; j1 = j1 - 1) {
    for (HalfInt j2 = spec.spin2(); j2.twice >= 0; j2 = j2 - 1) {
      ModuleLabel label{j1, j2, 0, module_degeneracy(j1, j2, spec), {}};
      for (int i = 0; i <= spec.k(); ++i) {
        const HalfInt m1 = spec.spin1() - i;
        const HalfInt m2 = m - m1;
        if (abs(m1) <= j1 && abs(m2) <= j2) label.m1_range.push_back(m1);
      }
      label.dim = static_cast<int>(label.m1_range.size());
      if (label.dim > 0 && label.degeneracy > 0) out.push_back(std::move(label));
    }
  }
  return out;
}

Index level_degeneracy(HalfInt j, const GraphSpec& spec) {
  const auto levels = spec.levels();
  if (std::find(levels.begin(), levels.end(), j) == levels.end()) {
    throw std::out_of_range("level_degeneracy: j = " + to_string(j) + " is not a level");
  }
  Index total = 0;
  for (const auto& label : enumerate_modules(spec)) {
    if (j >= abs(label.j1 - label.j2) && j <= label.j1 + label.j2) total += label.degeneracy;
  }
  return total;
}

Matrix cg_matrix(const ModuleLabel& label, const GraphSpec& spec) {
  const auto js = label.levels(spec);
  const HalfInt m = spec.total_m();
  Matrix g(label.dim, static_cast<Eigen::Index>(js.size()));
  for (int r = 0; r < label.dim; ++r) {
    const HalfInt m1 = label.m1_range[static_cast<std::size_t>(r)];
    for (std::size_t c = 0; c < js.size(); ++c) {
      g(r, static_cast<Eigen::Index>(c)) = clebsch_gordan(js[c], m, label.j1, m1, label.j2, m - m1);
    }
  }
  return g;
}

std::vector<ModuleBasis> module_bases(const GraphSpec& spec) {
  std::vector<ModuleBasis> out;
  for (auto& label : enumerate_modules(spec)) {
    auto levels = label.levels(spec);
    Matrix cg = cg_matrix(label, spec);
    out.push_back({std::move(label), std::move(levels), std::move(cg)});
  }
  return out;
}

ModuleBlock module_correlation_block(const ModuleBasis& basis, const FillingSpec& filling,
                                     const SubsystemSpec& sub, const GraphSpec& spec) {
  ModuleBlock block{basis.label, {}, {}};
  const int first = basis.label.first_distance(spec);
  std::vector<Eigen::Index> rows;
  for (int r = 0; r < basis.label.dim; ++r) {
    if (sub.contains(first + r)) {
      rows.push_back(r);
      block.distances.push_back(first + r);
    }
  }
  std::vector<Eigen::Index> cols;
  for (std::size_t c = 0; c < basis.levels.size(); ++c) {
    if (filling.contains(basis.levels[c])) cols.push_back(static_cast<Eigen::Index>(c));
  }
  const Matrix g = basis.cg(rows, cols);
  block.entries = g * g.transpose();
  return block;
}

ModuleBlock module_correlation_block(const ModuleLabel& label, const FillingSpec& filling,
                                     const SubsystemSpec& sub, const GraphSpec& spec) {
  const ModuleBasis basis{label, label.levels(spec), cg_matrix(label, spec)};
  return module_correlation_block(basis, filling, sub, spec);
}

double single_neighborhood_eigenvalue(const ModuleLabel& label, int i, const FillingSpec& filling,
                                      const GraphSpec& spec) {
  if (!label.contains_distance(i, spec)) {
    throw std::invalid_argument("single_neighborhood_eigenvalue: module does not reach distance " +
                                std::to_string(i));
  }
  const auto block = module_correlation_block(label, filling, SubsystemSpec({i}, spec), spec);
  return clamp_unit(block.entries(0, 0));
}

CorrelationSpectrum assemble_spectrum(const std::vector<ModuleBasis>& bases, const GraphSpec& spec,
                                      const FillingSpec& filling, const SubsystemSpec& sub) {
  std::vector<SpectrumEntry> raw;
  for (const auto& basis : bases) {
    const auto block = module_correlation_block(basis, filling, sub, spec);
    if (block.entries.rows() == 0) continue;
    const auto eig = jacobi_eigen(block.entries, false);
    for (Eigen::Index e = 0; e < eig.values.size(); ++e) {
      raw.push_back({eig.values(e), basis.label.degeneracy});
    }
  }
  return group_spectrum(std::move(raw));
}

CorrelationSpectrum assemble_spectrum(const GraphSpec& spec, const FillingSpec& filling,
                                      const SubsystemSpec& sub) {
  return assemble_spectrum(module_bases(spec), spec, filling, sub);
}

HahnConstants hahn_constants(HalfInt j1, HalfInt j2, const GraphSpec& spec) {
  const double n = spec.n();
  const double d = spec.n() - 2 * spec.k();
  const double cas1 = j1.value() * (j1.value() + 1.0);
  const double cas2 = j2.value() * (j2.value() + 1.0);
  HahnConstants h{};
  h.a = -2.0;
  h.b = -2.0 * d * d / n;
  h.c1 = -d * d - 2.0 * n;
  h.c2 = -4.0;
  h.d1 = -h.b * h.c1 / 4.0 + 2.0 * d * (cas1 - cas2);
  h.d2 = -2.0 * n + 4.0 * (cas1 + cas2) - h.b * h.b / 8.0 + h.b * n / 4.0;
  return h;
}

}  // namespace johnson
