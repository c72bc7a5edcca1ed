#pragma once

#include <string>
#include <utility>
#include <vector>

#include "johnson/scheme.hpp"
#include "johnson/types.hpp"

namespace johnson {

struct CheckResult {
  std::string name;
  int n = 0;
  int k = 0;
  double value = 0.0;      // worst observed deviation
  double threshold = 0.0;  // pass when value <= threshold
  bool passed = false;
  std::string detail;
};

// Individual checks. Each returns the worst deviation found.

/// Σ A_i = J, disjoint supports, regular A_1, Σ E*_i = 1.
double scheme_identity_deviation(const GraphSpec& spec);
/// max_i ‖A_i - (-1)^i C(k,i) R_i(A + k)‖_max, in extended precision.
double dual_hahn_identity_deviation(const GraphSpec& spec);
/// Number of vertex pairs with Hamming distance != 2 d.
double embedding_mismatches(const GraphSpec& spec);
/// max ‖GᵀG - 1‖, ‖GGᵀ - 1‖ over the modules.
double cg_orthonormality_deviation(const GraphSpec& spec);
/// |Σ dim D - C(n,k)|.
double module_completeness_deviation(const GraphSpec& spec);
/// max_j |trace E_j - D_j|.
double degeneracy_trace_deviation(const GraphSpec& spec);
/// Worst per-eigenvalue gap between oracle, modules and Heun readout over every
/// cutoff N and level j0; infinite when multiplicities differ.
double route_agreement_deviation(const GraphSpec& spec);
double hahn_algebra_deviation(const GraphSpec& spec);
/// Worst ‖[C, T]‖_max over modules, cutoffs and levels, with μ shifted by `mu_shift`.
double commutant_deviation(const GraphSpec& spec, double mu_shift = 0.0);

/// Enumerated (not random) pairs of arbitrary SE and SD with SD and its
/// complement both nonempty.
std::vector<std::pair<FillingSpec, SubsystemSpec>> duality_configurations(const GraphSpec& spec,
                                                                          int count);
/// Worst |S(SV) - S(X \ SV)| over the configurations, from oracle spectra.
double purity_duality_deviation(const GraphSpec& spec, int count = 20);
/// Worst relative |S(i) - S(k-i)| over single neighborhoods and lowest fillings; k = n/2 only.
double mirror_symmetry_deviation(const GraphSpec& spec);

struct BatteryOptions {
  bool quick = false;
  double perturb_mu = 0.0;
};

std::vector<CheckResult> run_battery(const GraphSpec& spec, const BatteryOptions& opt);

}  // namespace johnson
