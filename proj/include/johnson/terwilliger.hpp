#pragma once

#include <vector>

#include "johnson/scheme.hpp"
#include "johnson/types.hpp"

namespace johnson {

/// An irreducible submodule V_{j1,j2} of the vertex space, up to multiplicity.
struct ModuleLabel {
  HalfInt j1;
  HalfInt j2;
  int dim = 0;
  Index degeneracy = 0;
  std::vector<HalfInt> m1_range;  // ordered by ascending distance i = (n-k)/2 - m1

  /// Distance of the first row.
  int first_distance(const GraphSpec& spec) const;
  /// Levels j present in the module, ascending: max(|j1-j2|, n/2-k) .. j1+j2.
  std::vector<HalfInt> levels(const GraphSpec& spec) const;
  bool contains_distance(int i, const GraphSpec& spec) const;

  bool operator==(const ModuleLabel&) const = default;
};

/// D_{j1,j2}, the number of copies of V_{j1,j2}.
Index module_degeneracy(HalfInt j1, HalfInt j2, const GraphSpec& spec);

/// Every module with a nonempty row range; j1 and j2 descending.
std::vector<ModuleLabel> enumerate_modules(const GraphSpec& spec);

/// D_j = Σ D_{j1,j2} over the modules containing level j.
Index level_degeneracy(HalfInt j, const GraphSpec& spec);

/// Clebsch–Gordan change of basis of one module: rows follow m1_range,
/// columns follow label.levels(spec).
Matrix cg_matrix(const ModuleLabel& label, const GraphSpec& spec);

/// A module together with its change of basis, computed once per graph.
struct ModuleBasis {
  ModuleLabel label;
  std::vector<HalfInt> levels;
  Matrix cg;
};

std::vector<ModuleBasis> module_bases(const GraphSpec& spec);

/// Restriction of C to one module: rows are the distances of SD present in it.
struct ModuleBlock {
  ModuleLabel label;
  std::vector<int> distances;
  Matrix entries;
};

ModuleBlock module_correlation_block(const ModuleBasis& basis, const FillingSpec& filling,
                                     const SubsystemSpec& sub, const GraphSpec& spec);
ModuleBlock module_correlation_block(const ModuleLabel& label, const FillingSpec& filling,
                                     const SubsystemSpec& sub, const GraphSpec& spec);

/// λ_{j1,j2} = Σ_{j∈SE} c² for the single row at distance i; throws if the
/// module does not reach distance i.
double single_neighborhood_eigenvalue(const ModuleLabel& label, int i, const FillingSpec& filling,
                                      const GraphSpec& spec);

/// Spectrum of C from the per-module blocks, each weighted by D_{j1,j2}.
CorrelationSpectrum assemble_spectrum(const std::vector<ModuleBasis>& bases, const GraphSpec& spec,
                                      const FillingSpec& filling, const SubsystemSpec& sub);
CorrelationSpectrum assemble_spectrum(const GraphSpec& spec, const FillingSpec& filling,
                                      const SubsystemSpec& sub);

/// Structure constants of the commutation relations among K1 = 2k(n-k)/(n(n-1)) A*,
/// K2 = A and K3 = [K1, K2]; d1 and d2 are the values on V_{j1,j2}.
struct HahnConstants {
  double a, b, c1, c2, d1, d2;
};

HahnConstants hahn_constants(HalfInt j1, HalfInt j2, const GraphSpec& spec);

struct HahnResidual {
  ModuleLabel label;
  double first = 0.0;   // [K2,K3] - (a{K1,K2} + b K2 + c1 K1 + d1)
  double second = 0.0;  // [K3,K1] - (a K1² + b K1 + c2 K2 + d2)
};

/// Max-norm residuals of both relations on every module, using the module actions.
std::vector<HahnResidual> check_hahn_algebra(const GraphSpec& spec);

}  // namespace johnson
