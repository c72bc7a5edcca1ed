#include "johnson/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace johnson {

HoppingProfile HoppingProfile::make(std::vector<double> alphas, const GraphSpec& spec) {
  if (static_cast<int>(alphas.size()) != spec.k() + 1) {
    throw std::invalid_argument("hopping profile needs k+1 = " + std::to_string(spec.k() + 1) +
                                " coefficients, got " + std::to_string(alphas.size()));
  }
  for (double a : alphas) {
    if (!std::isfinite(a)) throw std::invalid_argument("hopping coefficient is not finite");
  }
  return HoppingProfile{std::move(alphas)};
}

HoppingProfile HoppingProfile::nearest_neighbour(const GraphSpec& spec) {
  std::vector<double> a(static_cast<std::size_t>(spec.k() + 1), 0.0);
  a[1] = 1.0;
  return HoppingProfile{std::move(a)};
}

HoppingProfile HoppingProfile::exponential(double c, const GraphSpec& spec) {
  if (!(c >= 0.0)) throw std::invalid_argument("exponential hopping needs c >= 0");
  std::vector<double> a(static_cast<std::size_t>(spec.k() + 1));
  for (int i = 0; i <= spec.k(); ++i) a[static_cast<std::size_t>(i)] = std::exp(-c * i);
  return HoppingProfile{std::move(a)};
}

FillingSpec::FillingSpec(std::vector<HalfInt> occupied, const GraphSpec& spec) {
  const auto levels = spec.levels();
  for (HalfInt j : occupied) {
    if (std::find(levels.begin(), levels.end(), j) == levels.end()) {
      throw std::invalid_argument("j = " + to_string(j) + " is not an energy level of J(" +
                                  std::to_string(spec.n()) + "," + std::to_string(spec.k()) + ")");
    }
  }
  std::sort(occupied.begin(), occupied.end());
  occupied.erase(std::unique(occupied.begin(), occupied.end()), occupied.end());
  occupied_ = std::move(occupied);
}

FillingSpec FillingSpec::lowest(int count, const GraphSpec& spec) {
  if (count < 0 || count > spec.k() + 1) {
    throw std::invalid_argument("level count must lie in [0, k+1]");
  }
  const auto levels = spec.levels();
  return FillingSpec(std::vector<HalfInt>(levels.begin(), levels.begin() + count), spec);
}

bool FillingSpec::contains(HalfInt j) const {
  return std::binary_search(occupied_.begin(), occupied_.end(), j);
}

FillingSpec FillingSpec::complement(const GraphSpec& spec) const {
  std::vector<HalfInt> rest;
  for (HalfInt j : spec.levels()) {
    if (!contains(j)) rest.push_back(j);
  }
  return FillingSpec(std::move(rest), spec);
}

SubsystemSpec::SubsystemSpec(std::vector<int> distances, Vertex x0, const GraphSpec& spec)
    : x0_(std::move(x0)) {
  if (distances.empty()) throw std::invalid_argument("subsystem distance set is empty");
  for (int i : distances) {
    if (i < 0 || i > spec.k()) {
      throw std::invalid_argument("distance " + std::to_string(i) + " outside [0, k]");
    }
  }
  std::sort(distances.begin(), distances.end());
  distances.erase(std::unique(distances.begin(), distances.end()), distances.end());
  distances_ = std::move(distances);
}

SubsystemSpec::SubsystemSpec(std::vector<int> distances, const GraphSpec& spec)
    : SubsystemSpec(std::move(distances), first_vertex(spec), spec) {}

SubsystemSpec SubsystemSpec::ball(int cutoff, const GraphSpec& spec) {
  if (cutoff < 0 || cutoff > spec.k()) throw std::invalid_argument("cutoff outside [0, k]");
  std::vector<int> d(static_cast<std::size_t>(cutoff + 1));
  for (int i = 0; i <= cutoff; ++i) d[static_cast<std::size_t>(i)] = i;
  return SubsystemSpec(std::move(d), spec);
}

bool SubsystemSpec::contains(int i) const {
  return std::binary_search(distances_.begin(), distances_.end(), i);
}

bool SubsystemSpec::contiguous() const {
  return distances_.back() - distances_.front() + 1 == static_cast<int>(distances_.size());
}

Index SubsystemSpec::site_count(const GraphSpec& spec) const {
  Index total = 0;
  for (int i : distances_) total += neighborhood_size(spec, i);
  return total;
}

SubsystemSpec SubsystemSpec::complement(const GraphSpec& spec) const {
  std::vector<int> rest;
  for (int i = 0; i <= spec.k(); ++i) {
    if (!contains(i)) rest.push_back(i);
  }
  return SubsystemSpec(std::move(rest), x0_, spec);
}

Index CorrelationSpectrum::total_multiplicity() const {
  Index total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

std::vector<double> CorrelationSpectrum::expanded(Index limit) const {
  if (total_multiplicity() > limit) throw CapacityError("spectrum too large to expand");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(total_multiplicity()));
  for (const auto& e : entries) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.lambda);
  return out;
}

double clamp_unit(double lambda) {
  if (lambda < -kClampSlack || lambda > 1.0 + kClampSlack || std::isnan(lambda)) {
    throw NumericalError("correlation eigenvalue " + std::to_string(lambda) +
                         " outside [0,1] beyond clamping slack");
  }
  return std::clamp(lambda, 0.0, 1.0);
}

CorrelationSpectrum group_spectrum(std::vector<SpectrumEntry> raw) {
  for (auto& e : raw) e.lambda = clamp_unit(e.lambda);
  std::stable_sort(raw.begin(), raw.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.lambda < b.lambda; });
  CorrelationSpectrum out;
  std::size_t i = 0;
  while (i < raw.size()) {
    const double anchor = raw[i].lambda;
    long double weighted = 0.0L;
    Index mult = 0;
    bool has_zero = false, has_one = false;
    for (; i < raw.size() && raw[i].lambda - anchor <= kGroupingTolerance; ++i) {
      if (raw[i].multiplicity <= 0) continue;
      weighted += static_cast<long double>(raw[i].lambda) * static_cast<long double>(raw[i].multiplicity);
      mult += raw[i].multiplicity;
      has_zero = has_zero || raw[i].lambda == 0.0;
      has_one = has_one || raw[i].lambda == 1.0;
    }
    if (mult == 0) continue;
    // Exact endpoints stay exact.
    double value = static_cast<double>(weighted / static_cast<long double>(mult));
    if (has_zero) value = 0.0;
    if (has_one) value = 1.0;
    out.entries.push_back({value, mult});
  }
  return out;
}

SpectrumComparison compare_spectra(const CorrelationSpectrum& a, const CorrelationSpectrum& b) {
  SpectrumComparison cmp;
  cmp.same_total = a.total_multiplicity() == b.total_multiplicity();
  cmp.same_grouping = a.entries.size() == b.entries.size();
  for (std::size_t i = 0; cmp.same_grouping && i < a.entries.size(); ++i) {
    cmp.same_grouping = a.entries[i].multiplicity == b.entries[i].multiplicity;
  }
  // Walk both weighted lists in lockstep without expanding them.
  std::size_t ia = 0, ib = 0;
  Index left_a = a.entries.empty() ? 0 : a.entries[0].multiplicity;
  Index left_b = b.entries.empty() ? 0 : b.entries[0].multiplicity;
  while (ia < a.entries.size() && ib < b.entries.size()) {
    cmp.max_abs_difference =
        std::max(cmp.max_abs_difference, std::abs(a.entries[ia].lambda - b.entries[ib].lambda));
    const Index step = std::min(left_a, left_b);
    left_a -= step;
    left_b -= step;
    if (left_a == 0 && ++ia < a.entries.size()) left_a = a.entries[ia].multiplicity;
    if (left_b == 0 && ++ib < b.entries.size()) left_b = b.entries[ib].multiplicity;
  }
  if (!cmp.same_total) cmp.max_abs_difference = std::max(cmp.max_abs_difference, 1.0);
  return cmp;
}

}  // namespace johnson
