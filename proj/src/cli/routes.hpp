#pragma once

#include <optional>
#include <string>
#include <vector>

#include "johnson/heun.hpp"
#include "johnson/types.hpp"

namespace johnson::cli {

/// The Heun parameters realizing (SE, SD), when SD is {0..N} or {N+1..k}
/// and SE is a lowest or highest run of levels.
std::optional<HeunSpec> heun_spec_for(const GraphSpec& spec, const FillingSpec& filling,
                                      const SubsystemSpec& sub);

struct RouteResult {
  std::string route;
  CorrelationSpectrum spectrum;
  double entropy = 0.0;
};

/// Runs each named route (oracle, modules, heun) on the same inputs. Throws
/// std::invalid_argument when heun is requested on inputs it cannot express.
std::vector<RouteResult> run_routes(const std::vector<std::string>& routes, const GraphSpec& spec,
                                    const FillingSpec& filling, const SubsystemSpec& sub,
                                    const std::vector<ModuleBasis>& bases, Index dense_cap);

/// Largest per-eigenvalue gap of every route against the first; infinite
/// when multiplicities differ.
double max_discrepancy(const std::vector<RouteResult>& results);

}  // namespace johnson::cli
