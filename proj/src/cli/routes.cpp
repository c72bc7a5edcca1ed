#include "routes.hpp"

#include <algorithm>
#include <limits>

#include "johnson/entropy.hpp"
#include "johnson/spectral.hpp"

namespace johnson::cli {

std::optional<HeunSpec> heun_spec_for(const GraphSpec& spec, const FillingSpec& filling,
                                      const SubsystemSpec& sub) {
  if (!sub.contiguous()) return std::nullopt;
  const auto& d = sub.distances();
  int cutoff = 0;
  bool inner = true;
  if (d.front() == 0) {
    cutoff = d.back();
  } else if (d.back() == spec.k()) {
    cutoff = d.front() - 1;
    inner = false;
  } else {
    return std::nullopt;
  }

  const auto levels = spec.levels();
  const auto& occ = filling.occupied();
  HalfInt j0;
  bool lower = true;
  if (occ.empty()) {
    j0 = levels.back();
    lower = false;
  } else {
    const auto first = std::find(levels.begin(), levels.end(), occ.front()) - levels.begin();
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (levels[static_cast<std::size_t>(first) + i] != occ[i]) return std::nullopt;
    }
    if (occ.front() == levels.front()) {
      j0 = occ.back();
    } else if (occ.back() == levels.back()) {
      j0 = occ.front() - 1;
      lower = false;
    } else {
      return std::nullopt;
    }
  }
  return make_heun_spec(spec, cutoff, j0, inner, lower);
}

std::vector<RouteResult> run_routes(const std::vector<std::string>& routes, const GraphSpec& spec,
                                    const FillingSpec& filling, const SubsystemSpec& sub,
                                    const std::vector<ModuleBasis>& bases, Index dense_cap) {
  std::vector<RouteResult> out;
  for (const auto& route : routes) {
    RouteResult r{route, {}, 0.0};
    if (route == "oracle") {
      if (spec.vertex_count() > dense_cap) {
        throw CapacityError("oracle route needs C(n,k) = " + std::to_string(spec.vertex_count()) +
                            " <= dense cap " + std::to_string(dense_cap));
      }
      r.spectrum = spectrum_oracle(chopped_correlation_oracle(spec, filling, sub, dense_cap), dense_cap);
    } else if (route == "modules") {
      r.spectrum = assemble_spectrum(bases, spec, filling, sub);
    } else if (route == "heun") {
      const auto hs = heun_spec_for(spec, filling, sub);
      if (!hs) {
        throw std::invalid_argument(
            "heun route needs SD = {0..N} or {N+1..k} and SE a lowest or highest run of levels");
      }
      r.spectrum = spectrum_via_heun(bases, spec, *hs);
    } else {
      throw std::invalid_argument("unknown route '" + route + "'");
    }
    r.entropy = von_neumann(r.spectrum);
    out.push_back(std::move(r));
  }
  return out;
}

double max_discrepancy(const std::vector<RouteResult>& results) {
  double worst = 0.0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    const auto cmp = compare_spectra(results[0].spectrum, results[i].spectrum);
    if (!cmp.same_total || !cmp.same_grouping) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, cmp.max_abs_difference);
  }
  return worst;
}

}  // namespace johnson::cli
