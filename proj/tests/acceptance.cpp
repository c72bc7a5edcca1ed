// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "johnson/cli.hpp"
#include "johnson/entropy.hpp"
#include "johnson/heun.hpp"
#include "johnson/spectral.hpp"
#include "johnson/verify.hpp"

using namespace johnson;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool passed = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string sci(double v, int digits = 3) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

Verdict triple_agreement() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 3}, {8, 4}, {10, 5}}) {
    worst = std::max(worst, route_agreement_deviation(GraphSpec(n, k)));
  }
  const double t = seconds_since(start);
  return {worst <= 1e-8 && t < 60.0, "max deviation " + sci(worst) + ", " + sci(t) + " s"};
}

Verdict worked_value() {
  const GraphSpec spec(4, 2);
  const auto filling = fill_ground_state(energy_table(spec, HoppingProfile::make({0, 1, 0}, spec)), spec);
  const SubsystemSpec sub({0}, spec);
  const std::vector<CorrelationSpectrum> routes = {
      spectrum_oracle(chopped_correlation_oracle(spec, filling, sub)),
      assemble_spectrum(spec, filling, sub),
      spectrum_via_heun(spec, make_heun_spec(spec, 0, HalfInt::from_int(0))),
  };
  bool ok = filling.occupied() == std::vector<HalfInt>{HalfInt::from_int(0)};
  std::string detail = "S =";
  for (const auto& s : routes) {
    ok = ok && s.entries.size() == 1 && s.entries[0].multiplicity == 1 &&
         std::abs(s.entries[0].lambda - 1.0 / 3.0) <= 1e-10;
    const double entropy = von_neumann(s);
    ok = ok && std::abs(entropy - 0.636514) <= 1e-6;
    detail += " " + sci(entropy, 7);
  }
  return {ok, detail};
}

Verdict structural_commutation() {
  bool cuts = true;
  double residual = 0.0, perturbed = 0.0;
  for (const auto& spec : {GraphSpec(8, 4), GraphSpec(10, 5)}) {
    const auto levels = spec.levels();
    for (int cutoff = 0; cutoff < spec.k(); ++cutoff) {
      for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
        const auto hs = make_heun_spec(spec, cutoff, levels[l]);
        for (const auto& m : enumerate_modules(spec)) {
          const auto t = build_T(m, hs, spec);
          const int first = m.first_distance(spec);
          if (cutoff >= first && cutoff + 1 < first + m.dim) cuts = cuts && t.offdiagonal(cutoff - first) == 0.0;
          const auto tj = build_T_jbasis(m, hs, spec);
          const auto ml = m.levels(spec);
          for (std::size_t r = 0; r + 1 < ml.size(); ++r) {
            if (ml[r] == hs.j0) cuts = cuts && tj.offdiagonal(static_cast<Eigen::Index>(r)) == 0.0;
          }
        }
      }
    }
    residual = std::max(residual, commutant_deviation(spec));
    const auto bases = module_bases(spec);
    const auto hs = make_heun_spec(spec, 1, levels[1]);
    for (const auto& b : bases) perturbed = std::max(perturbed, commutant_residual(b, hs, spec, 1.0));
  }
  return {cuts && residual <= 1e-9 && perturbed > 1e-3,
          std::string(cuts ? "cuts exactly zero" : "nonzero cut") + ", max |[C,T]| " + sci(residual) +
              ", perturbed mu " + sci(perturbed)};
}

Verdict degeneracies() {
  bool ok = true;
  double worst = 0.0;
  for (int n = 2; n <= 10; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      const GraphSpec spec(n, k);
      for (const auto& [j, e] : eigenprojectors_oracle(spec).by_level) {
        const double trace = e.trace();
        worst = std::max(worst, std::abs(trace - double(level_degeneracy(j, spec))));
        ok = ok && std::llround(trace) == level_degeneracy(j, spec);
      }
    }
  }
  Index mismatched = 0;
  for (int n = 2; n <= 30; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      if (module_completeness_deviation(GraphSpec(n, k)) != 0.0) ++mismatched;
    }
  }
  return {ok && worst <= 1e-8 && mismatched == 0,
          "trace deviation " + sci(worst) + ", incomplete graphs " + std::to_string(mismatched)};
}

Verdict dual_hahn_identity() {
  double worst = 0.0;
  for (int n = 2; n <= 10; ++n) {
    for (int k = 1; 2 * k <= n; ++k) worst = std::max(worst, dual_hahn_identity_deviation(GraphSpec(n, k)));
  }
  return {worst <= 1e-8, "max |A_i - p_i(A)| " + sci(worst)};
}

Verdict energy_consistency() {
  double worst = 0.0;
  bool increasing = true;
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      const GraphSpec spec(n, k);
      for (double c : {0.1, 1.0, 5.0}) {
        const auto sum = energy_table(spec, HoppingProfile::exponential(c, spec));
        const auto closed = energy_exponential(spec, c);
        for (std::size_t j = 0; j < sum.size(); ++j) {
          const double scale = std::max(std::abs(sum[j].omega), 1e-300);
          worst = std::max(worst, std::abs(closed[j].omega - sum[j].omega) / scale);
          if (j > 0) increasing = increasing && closed[j].omega > closed[j - 1].omega;
        }
      }
    }
  }
  return {worst <= 1e-9 && increasing,
          "max relative gap " + sci(worst) + (increasing ? ", strictly increasing" : ", not monotone")};
}

Verdict hahn_algebra() {
  const double worst = std::max(hahn_algebra_deviation(GraphSpec(6, 3)), hahn_algebra_deviation(GraphSpec(8, 4)));
  return {worst <= 1e-8, "max residual " + sci(worst)};
}

Verdict purity_duality() {
  double worst = 0.0;
  std::size_t configs = 0;
  for (const auto& spec : {GraphSpec(8, 4), GraphSpec(10, 5)}) {
    configs += duality_configurations(spec, 20).size();
    worst = std::max(worst, purity_duality_deviation(spec, 20));
  }
  return {worst <= 1e-7 && configs == 40, std::to_string(configs) + " configurations, max |dS| " + sci(worst)};
}

nlohmann::ordered_json rows_of(const cli::SweepResult& r) { return r.table.to_json(); }

Verdict full_scale() {
  const auto start = Clock::now();
  cli::SweepOptions opt;
  opt.n = 30;
  opt.dense_cap = 1000;
  opt.figure = "fig2b";
  const auto fig2b = cli::run_sweep(opt);
  opt.figure = "fig3b";
  const auto fig3b = cli::run_sweep(opt);
  opt.figure = "fig3a";
  const auto fig3a = cli::run_sweep(opt);
  const double t = seconds_since(start);
  const bool bound = fig2b.bound_ok && fig3a.bound_ok && fig3b.bound_ok;

  // S(i) against S(k - i) at each filling.
  std::map<std::pair<int, int>, double> s2;
  for (const auto& row : rows_of(fig2b)) s2[{row["se_levels"].get<int>(), row["i"].get<int>()}] = row["entropy"];
  double mirror = 0.0;
  for (const auto& [key, s] : s2) {
    const double t2 = s2.at({key.first, 15 - key.second});
    mirror = std::max(mirror, std::abs(s - t2) / std::max({1.0, std::abs(s), std::abs(t2)}));
  }

  // Where each S / |boundary| curve peaks over the cutoff N.
  int curves = 0, interior = 0;
  auto scan = [&](const nlohmann::ordered_json& rows, const char* key) {
    std::map<int, std::vector<double>> curve;
    for (const auto& row : rows) curve[row[key].get<int>()].push_back(row["ratio_boundary"].get<double>());
    for (const auto& [_, ratios] : curve) {
      if (ratios.size() < 3) continue;
      const auto arg = std::max_element(ratios.begin(), ratios.end()) - ratios.begin();
      ++curves;
      if (arg > 0 && arg + 1 < static_cast<std::ptrdiff_t>(ratios.size())) ++interior;
    }
  };
  scan(rows_of(fig3b), "se_levels");
  scan(rows_of(fig3a), "k");

  const bool ok = t < 600.0 && bound && mirror <= 1e-8 && interior == curves;
  return {ok, sci(t) + " s, bound " + (bound ? "ok" : "violated") + ", mirror " + sci(mirror) +
                  ", interior maximum in " + std::to_string(interior) + "/" + std::to_string(curves) + " fig3 curves"};
}

Verdict determinism() {
  const std::vector<std::vector<std::string>> commands = {
      {"energies", "--n", "12", "--k", "5", "--exp-hopping", "0.7", "--format", "json"},
      {"entropy", "--n", "8", "--k", "4", "--cutoff", "2", "--fill-levels", "2", "--route", "all"},
      {"entropy", "--n", "30", "--k", "15", "--distances", "3..9", "--se", "0,2,5", "--format", "json"},
      {"sweep", "--figure", "fig2b", "--n", "16"},
      {"sweep", "--figure", "fig4", "--format", "json"},
      {"verify", "--quick"},
  };
  int identical = 0;
  for (const auto& args : commands) {
    std::ostringstream a, b, ea, eb;
    const int ca = cli::run(args, a, ea);
    const int cb = cli::run(args, b, eb);
    if (ca == cli::kOk && ca == cb && a.str() == b.str() && !a.str().empty()) ++identical;
  }
  return {identical == static_cast<int>(commands.size()),
          std::to_string(identical) + "/" + std::to_string(commands.size()) + " commands byte-identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"oracle, module and Heun routes agree", triple_agreement},
      {"worked value on J(4,2)", worked_value},
      {"structural commutation of the Heun operator", structural_commutation},
      {"closed-form degeneracies and module completeness", degeneracies},
      {"dual Hahn expansion of distance matrices", dual_hahn_identity},
      {"exponential hopping energies", energy_consistency},
      {"Hahn algebra relations", hahn_algebra},
      {"purity duality", purity_duality},
      {"full-scale sweeps at n = 30", full_scale},
      {"deterministic output", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    if (!v.passed) ++failures;
    std::printf("%s %2zu %s: %s\n", v.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
