#pragma once

#include <vector>

#include "johnson/common.hpp"
#include "johnson/scheme.hpp"

namespace johnson {

/// Hopping amplitudes α_0..α_k indexed by distance.
struct HoppingProfile {
  std::vector<double> alphas;

  /// Validates length k+1 and finiteness.
  static HoppingProfile make(std::vector<double> alphas, const GraphSpec& spec);
  static HoppingProfile nearest_neighbour(const GraphSpec& spec);
  static HoppingProfile exponential(double c, const GraphSpec& spec);
};

struct EnergyLevel {
  HalfInt j;
  double theta = 0.0;
  double omega = 0.0;
  Index degeneracy = 0;
};

/// One row per j = n/2-k, ..., n/2, ascending in j.
using EnergyTable = std::vector<EnergyLevel>;

/// The occupied single-particle levels SE, as j labels.
class FillingSpec {
 public:
  FillingSpec() = default;
  /// Validates every j against the level range of `spec`; sorts and deduplicates.
  FillingSpec(std::vector<HalfInt> occupied, const GraphSpec& spec);

  /// Lowest `count` levels j = n/2-k, ..., n/2-k+count-1.
  static FillingSpec lowest(int count, const GraphSpec& spec);
  static FillingSpec all(const GraphSpec& spec) { return lowest(spec.k() + 1, spec); }

  const std::vector<HalfInt>& occupied() const { return occupied_; }
  bool contains(HalfInt j) const;
  bool empty() const { return occupied_.empty(); }
  std::size_t size() const { return occupied_.size(); }
  /// Levels of `spec` not in this filling.
  FillingSpec complement(const GraphSpec& spec) const;

 private:
  std::vector<HalfInt> occupied_;
};

/// The distance set SD around a base vertex; SV is the union of those neighborhoods.
class SubsystemSpec {
 public:
  /// Validates nonempty, within [0, k]; sorts and deduplicates.
  SubsystemSpec(std::vector<int> distances, Vertex x0, const GraphSpec& spec);
  SubsystemSpec(std::vector<int> distances, const GraphSpec& spec);

  /// Ball {0..cutoff}.
  static SubsystemSpec ball(int cutoff, const GraphSpec& spec);

  const std::vector<int>& distances() const { return distances_; }
  const Vertex& x0() const { return x0_; }
  bool contains(int i) const;
  bool contiguous() const;
  /// |SV| = Σ_{i∈SD} C(k,i) C(n-k,i).
  Index site_count(const GraphSpec& spec) const;
  /// Distances of `spec` not in SD; throws if SD covers everything.
  SubsystemSpec complement(const GraphSpec& spec) const;

 private:
  std::vector<int> distances_;
  Vertex x0_;
};

struct SpectrumEntry {
  double lambda = 0.0;
  Index multiplicity = 0;
};

/// Eigenvalues of the chopped correlation matrix with multiplicities, ascending.
struct CorrelationSpectrum {
  std::vector<SpectrumEntry> entries;

  Index total_multiplicity() const;
  /// Every eigenvalue repeated by its multiplicity; throws above `limit` values.
  std::vector<double> expanded(Index limit = 10'000'000) const;
};

/// Clamping and grouping rules shared by every route.
inline constexpr double kClampSlack = 1e-6;
inline constexpr double kGroupingTolerance = 1e-8;

/// Clamps [-1e-6, 0) to 0 and (1, 1+1e-6] to 1; throws NumericalError beyond.
double clamp_unit(double lambda);

/// Sorts, clamps and merges weighted eigenvalues: consecutive values within
/// 1e-8 of the first member of their group merge; the group value is the
/// multiplicity-weighted mean.
CorrelationSpectrum group_spectrum(std::vector<SpectrumEntry> raw);

struct SpectrumComparison {
  double max_abs_difference = 0.0;  // per-eigenvalue, after expansion
  bool same_total = false;
  bool same_grouping = false;  // same groups with identical multiplicities
};

/// Compares two spectra eigenvalue by eigenvalue (expanded, sorted).
SpectrumComparison compare_spectra(const CorrelationSpectrum& a, const CorrelationSpectrum& b);

}  // namespace johnson
