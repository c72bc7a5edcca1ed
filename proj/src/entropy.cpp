#include "johnson/entropy.hpp"

#include <cmath>

namespace johnson {

namespace {

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -(p * std::log(p) + (1.0 - p) * std::log1p(-p));
}

}  // namespace

double von_neumann(const CorrelationSpectrum& spectrum) {
  long double total = 0.0L;
  for (const auto& e : spectrum.entries) {
    if (e.lambda < 0.0 || e.lambda > 1.0 || std::isnan(e.lambda)) {
      throw std::invalid_argument("von_neumann: eigenvalue outside [0, 1]");
    }
    total += static_cast<long double>(e.multiplicity) * binary_entropy(e.lambda);
  }
  return static_cast<double>(total);
}

EntropyReport report(const GraphSpec& spec, const SubsystemSpec& sub,
                     const CorrelationSpectrum& spectrum) {
  EntropyReport r;
  r.entropy = von_neumann(spectrum);
  r.subsystem_size = sub.site_count(spec);
  const auto& d = sub.distances();
  if (sub.contiguous() && d.front() == 0) {
    r.boundary_size = neighborhood_size(spec, d.back());
  } else if (sub.contiguous() && d.back() == spec.k()) {
    r.boundary_size = neighborhood_size(spec, d.front());
  } else {
    r.boundary_size = r.subsystem_size;
  }
  r.ratio_sv = r.subsystem_size > 0 ? r.entropy / static_cast<double>(r.subsystem_size) : 0.0;
  r.ratio_boundary = r.boundary_size > 0 ? r.entropy / static_cast<double>(r.boundary_size) : 0.0;
  return r;
}

}  // namespace johnson
