#include <cmath>
#include <limits>

#include "johnson/cli.hpp"
#include "johnson/entropy.hpp"
#include "routes.hpp"

namespace johnson::cli {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

// Extra columns appended when every route is run on a grid point.
const std::vector<std::string> kRouteColumns = {"entropy_oracle", "entropy_modules", "entropy_heun",
                                                "max_discrepancy"};

class SweepRunner {
 public:
  explicit SweepRunner(const SweepOptions& opt) : opt_(opt), all_(opt.route == "all") {
    if (opt.route != "default" && opt.route != "all") {
      throw std::invalid_argument("sweep --route must be default or all");
    }
  }

  std::vector<std::string> columns(std::vector<std::string> base) const {
    if (all_) base.insert(base.end(), kRouteColumns.begin(), kRouteColumns.end());
    return base;
  }

  // Entropy on the figure's own route, plus the cross-route cells when requested.
  double evaluate(const std::string& route, const GraphSpec& spec, const FillingSpec& filling,
                  const SubsystemSpec& sub, const std::vector<ModuleBasis>& bases,
                  std::vector<Cell>& row, SweepResult& result) const {
    const auto primary = run_routes({route}, spec, filling, sub, bases, opt_.dense_cap).front();
    const auto sv = sub.site_count(spec);
    if (primary.entropy > static_cast<double>(sv) * kLn2 * (1.0 + 1e-12)) result.bound_ok = false;
    if (all_) {
      std::vector<std::string> names = {"oracle", "modules"};
      if (heun_spec_for(spec, filling, sub)) names.push_back("heun");
      const auto results = run_routes(names, spec, filling, sub, bases, opt_.dense_cap);
      const double gap = max_discrepancy(results);
      result.max_discrepancy = std::max(result.max_discrepancy, gap);
      for (const char* name : {"oracle", "modules", "heun"}) {
        auto it = std::find_if(results.begin(), results.end(), [&](const RouteResult& r) { return r.route == name; });
        row.push_back(it == results.end() ? Cell{std::string("")} : Cell{it->entropy});
      }
      row.push_back(gap);
    }
    return primary.entropy;
  }

  FillingSpec filling(const GraphSpec& spec) const {
    FillingOptions f = opt_.fill;
    if (f.se.empty() && !f.levels && !f.fraction) f.fraction = 0.1;
    return resolve_filling(f, EnergyTable{}, spec);
  }

 private:
  const SweepOptions& opt_;
  bool all_;
};

std::vector<Cell> half_int_cells(HalfInt h) { return {Index{h.twice}, h.value()}; }

template <typename... Parts>
std::vector<Cell> cat(Parts&&... parts) {
  std::vector<Cell> row;
  (row.insert(row.end(), parts.begin(), parts.end()), ...);
  return row;
}

SweepResult fig2a(const SweepOptions& opt, const SweepRunner& run) {
  SweepResult result{Table(run.columns({"n", "k", "i", "i_label", "fill_levels", "entropy",
                                        "subsystem_size", "ratio_sv"})),
                     0.0, true};
  if (opt.n_min < 2 || opt.n_max < opt.n_min) throw std::invalid_argument("bad --n-min/--n-max");
  for (int n = opt.n_min + (opt.n_min % 2); n <= opt.n_max; n += 2) {
    const GraphSpec spec(n, n / 2);
    const auto bases = module_bases(spec);
    const auto filling = run.filling(spec);
    const int k = spec.k();
    for (const auto& [i, label] : std::vector<std::pair<int, std::string>>{{k / 2, "k/2"}, {k / 4, "k/4"}, {k / 8, "k/8"}}) {
      const SubsystemSpec sub({i}, spec);
      std::vector<Cell> extra;
      const double s = run.evaluate("modules", spec, filling, sub, bases, extra, result);
      const auto sv = sub.site_count(spec);
      result.table.add_row(cat(std::vector<Cell>{Index{n}, Index{k}, Index{i}, label,
                                                 Index(filling.size()), s, sv, s / static_cast<double>(sv)},
                               extra));
    }
  }
  return result;
}

SweepResult fig2b(const SweepOptions& opt, const SweepRunner& run) {
  const GraphSpec spec(opt.n, opt.k.value_or(opt.n / 2));
  const auto bases = module_bases(spec);
  SweepResult result{Table(run.columns({"n", "k", "i", "se_levels", "j0_x2", "j0", "entropy",
                                        "subsystem_size", "ratio_sv"})),
                     0.0, true};
  const auto levels = spec.levels();
  for (int i = 0; i <= spec.k(); ++i) {
    const SubsystemSpec sub({i}, spec);
    const auto sv = sub.site_count(spec);
    for (int l = 1; l <= spec.k() + 1; ++l) {
      const auto filling = FillingSpec::lowest(l, spec);
      std::vector<Cell> extra;
      const double s = run.evaluate("modules", spec, filling, sub, bases, extra, result);
      result.table.add_row(cat(std::vector<Cell>{Index{spec.n()}, Index{spec.k()}, Index{i}, Index{l}},
                               half_int_cells(levels[static_cast<std::size_t>(l - 1)]),
                               std::vector<Cell>{s, sv, s / static_cast<double>(sv)}, extra));
    }
  }
  return result;
}

void fig3_rows(const GraphSpec& spec, const std::vector<ModuleBasis>& bases, const FillingSpec& filling,
               const SweepRunner& run, SweepResult& result) {
  for (int cutoff = 0; cutoff < spec.k(); ++cutoff) {
    const auto sub = SubsystemSpec::ball(cutoff, spec);
    std::vector<Cell> extra;
    const double s = run.evaluate("heun", spec, filling, sub, bases, extra, result);
    const auto sv = sub.site_count(spec);
    const auto boundary = neighborhood_size(spec, cutoff);
    const HalfInt j0 = filling.empty() ? spec.levels().front() - 1 : filling.occupied().back();
    result.table.add_row(cat(std::vector<Cell>{Index{spec.n()}, Index{spec.k()}, Index{cutoff},
                                               Index(filling.size())},
                             half_int_cells(j0),
                             std::vector<Cell>{s, sv, boundary, s / static_cast<double>(boundary)}, extra));
  }
}

const std::vector<std::string> kFig3Columns = {"n", "k", "cutoff", "se_levels", "j0_x2", "j0",
                                               "entropy", "subsystem_size", "boundary_size",
                                               "ratio_boundary"};

SweepResult fig3a(const SweepOptions& opt, const SweepRunner& run) {
  SweepResult result{Table(run.columns(kFig3Columns)), 0.0, true};
  std::vector<int> ks;
  if (opt.k_list.empty()) {
    for (int k = 1; k <= opt.n / 2; ++k) ks.push_back(k);
  } else {
    ks = parse_int_list(opt.k_list);
  }
  for (int k : ks) {
    const GraphSpec spec(opt.n, k);
    fig3_rows(spec, module_bases(spec), run.filling(spec), run, result);
  }
  return result;
}

SweepResult fig3b(const SweepOptions& opt, const SweepRunner& run) {
  const GraphSpec spec(opt.n, opt.k.value_or(opt.n / 2));
  const auto bases = module_bases(spec);
  SweepResult result{Table(run.columns(kFig3Columns)), 0.0, true};
  for (int l = 1; l <= spec.k(); ++l) fig3_rows(spec, bases, FillingSpec::lowest(l, spec), run, result);
  return result;
}

// Entropy of a single chain: one copy of one module, no degeneracy.
double chain_entropy(const Matrix& block) {
  if (block.rows() == 0) return 0.0;
  const auto eig = jacobi_eigen(block, false);
  std::vector<SpectrumEntry> raw;
  for (Eigen::Index e = 0; e < eig.values.size(); ++e) raw.push_back({eig.values(e), 1});
  return von_neumann(group_spectrum(std::move(raw)));
}

SweepResult fig4(const SweepOptions& opt, const SweepRunner& run) {
  const GraphSpec spec(opt.n, opt.k.value_or(opt.n / 2));
  if (opt.route == "all") throw std::invalid_argument("fig4 has a single route");
  SweepResult result{Table({"n", "k", "j1_x2", "j1", "j2_x2", "j2", "fill_levels", "length",
                            "first_distance", "entropy_chain", "entropy_boundary"}),
                     0.0, true};
  std::vector<std::pair<HalfInt, HalfInt>> labels;
  if (opt.j1.empty() != opt.j2.empty()) throw std::invalid_argument("fig4 needs both --j1 and --j2");
  if (opt.j1.empty()) {
    labels = {{spec.spin1() - 1, spec.spin2()}, {spec.spin1(), spec.spin2()}};
  } else {
    labels = {{parse_half_int(opt.j1), parse_half_int(opt.j2)}};
  }
  const auto filling = run.filling(spec);
  const auto modules = module_bases(spec);
  for (const auto& [j1, j2] : labels) {
    const auto it = std::find_if(modules.begin(), modules.end(), [&](const ModuleBasis& b) {
      return b.label.j1 == j1 && b.label.j2 == j2;
    });
    if (it == modules.end()) {
      throw std::invalid_argument("no module (" + to_string(j1) + ", " + to_string(j2) + ") in J(" +
                                  std::to_string(spec.n()) + "," + std::to_string(spec.k()) + ")");
    }
    const int first = it->label.first_distance(spec);
    for (int length = 1; length <= it->label.dim; ++length) {
      std::vector<int> rows;
      for (int r = 0; r < length; ++r) rows.push_back(first + r);
      const double chain = chain_entropy(module_correlation_block(*it, filling, SubsystemSpec(rows, spec), spec).entries);
      const double edge = chain_entropy(
          module_correlation_block(*it, filling, SubsystemSpec({first + length - 1}, spec), spec).entries);
      result.table.add_row(cat(std::vector<Cell>{Index{spec.n()}, Index{spec.k()}}, half_int_cells(j1),
                               half_int_cells(j2),
                               std::vector<Cell>{Index(filling.size()), Index{length}, Index{first}, chain, edge}));
    }
  }
  return result;
}

}  // namespace

SweepResult run_sweep(const SweepOptions& opt) {
  const SweepRunner run(opt);
  if (opt.figure == "fig2a") return fig2a(opt, run);
  if (opt.figure == "fig2b") return fig2b(opt, run);
  if (opt.figure == "fig3a") return fig3a(opt, run);
  if (opt.figure == "fig3b") return fig3b(opt, run);
  if (opt.figure == "fig4") return fig4(opt, run);
  throw std::invalid_argument("unknown figure '" + opt.figure + "' (fig2a, fig2b, fig3a, fig3b, fig4)");
}

}  // namespace johnson::cli
