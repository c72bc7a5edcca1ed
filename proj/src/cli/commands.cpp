#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>

#include <CLI11.hpp>

#include "johnson/cli.hpp"
#include "johnson/entropy.hpp"
#include "johnson/spectral.hpp"
#include "johnson/verify.hpp"
#include "routes.hpp"

namespace johnson::cli {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kAgreement = 1e-6;

struct Common {
  int n = 0;
  int k = 0;
  std::string format = "csv";
  std::string output;
  Index dense_cap = default_dense_cap();
};

struct EntropyOptions {
  std::string distances;
  std::optional<int> cutoff;
  std::string x0;
  std::string route = "modules";
  bool bits = false;
  bool diagnostics = false;
  std::string spectrum_output;
};

struct VerifyOptions {
  bool quick = false;
  double perturb_mu = 0.0;
};

void add_common(CLI::App* cmd, Common& c, bool graph_required = true) {
  auto* n = cmd->add_option("--n", c.n, "Ground set size n");
  auto* k = cmd->add_option("--k", c.k, "Subset size k <= n/2");
  if (graph_required) {
    n->required();
    k->required();
  }
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", c.output, "Write results here instead of stdout");
  cmd->add_option("--dense-cap", c.dense_cap, "Largest C(n,k) for dense constructions");
}

void add_hopping(CLI::App* cmd, HoppingOptions& h) {
  cmd->add_option("--alpha", h.alpha, "Hopping amplitudes a0,a1,... (zero-padded to k+1)");
  cmd->add_option("--exp-hopping", h.exp_hopping, "Exponential hopping a_i = exp(-c i)");
}

void add_filling(CLI::App* cmd, FillingOptions& f) {
  cmd->add_option("--se", f.se, "Occupied levels j, e.g. 0,1 or 0.5,1.5");
  cmd->add_option("--fill-levels", f.levels, "Occupy the lowest L levels");
  cmd->add_option("--fill-fraction", f.fraction, "Occupy the lowest max(1, round(f(k+1))) levels");
  cmd->add_flag("--fill-weighted", f.weighted, "Fraction counts degenerate states instead of levels");
  cmd->add_flag("--include-zero", f.include_zero, "Ground state also fills zero-energy levels");
}

// Writes to the --output file when given, else to `out`.
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
  write(file);
}

void write_table(const Common& c, std::ostream& out, const Table& table, nlohmann::ordered_json meta) {
  emit(c.output, out, [&](std::ostream& os) {
    if (c.format == "json") {
      meta["rows"] = table.to_json();
      os << meta.dump(2) << '\n';
    } else {
      table.write_csv(os);
    }
  });
}

nlohmann::ordered_json graph_meta(const char* command, const GraphSpec& spec) {
  nlohmann::ordered_json meta;
  meta["command"] = command;
  meta["n"] = spec.n();
  meta["k"] = spec.k();
  return meta;
}

EnergyTable energies_for(const GraphSpec& spec, const HoppingOptions& hop) {
  if (hop.exp_hopping && hop.alpha.empty()) return energy_exponential(spec, *hop.exp_hopping);
  return energy_table(spec, resolve_hopping(hop, spec));
}

int cmd_energies(const Common& c, const HoppingOptions& hop, const FillingOptions& fill,
                 std::ostream& out) {
  const GraphSpec spec(c.n, c.k);
  const auto table = energies_for(spec, hop);
  const auto filling = resolve_filling(fill, table, spec);
  Table t({"j_x2", "j", "theta", "omega", "degeneracy", "occupied"});
  for (const auto& row : table) {
    t.add_row({Index{row.j.twice}, row.j.value(), row.theta, row.omega, row.degeneracy,
               Index{filling.contains(row.j) ? 1 : 0}});
  }
  auto meta = graph_meta("energies", spec);
  meta["se"] = join_half_ints(filling.occupied());
  write_table(c, out, t, meta);
  return kOk;
}

SubsystemSpec subsystem_for(const EntropyOptions& e, const GraphSpec& spec) {
  if (e.distances.empty() == !e.cutoff.has_value()) {
    throw std::invalid_argument("give exactly one of --distances and --cutoff");
  }
  const Vertex x0 = e.x0.empty() ? first_vertex(spec) : make_vertex(parse_int_list(e.x0), spec);
  if (e.cutoff) {
    const auto ball = SubsystemSpec::ball(*e.cutoff, spec);
    return SubsystemSpec(ball.distances(), x0, spec);
  }
  return SubsystemSpec(parse_int_list(e.distances), x0, spec);
}

int cmd_entropy(const Common& c, const HoppingOptions& hop, const FillingOptions& fill,
                const EntropyOptions& e, std::ostream& out, std::ostream& err) {
  const GraphSpec spec(c.n, c.k);
  const auto filling = resolve_filling(fill, energies_for(spec, hop), spec);
  const auto sub = subsystem_for(e, spec);
  std::vector<std::string> routes;
  if (e.route == "all") {
    routes = {"oracle", "modules", "heun"};
  } else {
    routes = {e.route};
  }
  if (e.diagnostics) {
    if (const auto hs = heun_spec_for(spec, filling, sub)) {
      err << "heun: mu=" << format_double(hs->mu) << " nu=" << format_double(hs->nu)
          << " cutoff=" << hs->cutoff << " j0=" << to_string(hs->j0) << '\n';
    } else {
      err << "heun: inputs are not contiguous cuts\n";
    }
  }

  const auto bases = module_bases(spec);
  const auto results = run_routes(routes, spec, filling, sub, bases, c.dense_cap);
  const double scale = e.bits ? 1.0 / kLn2 : 1.0;
  Table t({"route", "n", "k", "distances", "se", "unit", "entropy", "subsystem_size", "boundary_size",
           "ratio_sv", "ratio_boundary", "eigen_groups", "max_discrepancy"});
  double worst = 0.0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const auto rep = report(spec, sub, r.spectrum);
    double gap = 0.0;
    if (i > 0) gap = max_discrepancy({results[0], r});
    worst = std::max(worst, gap);
    t.add_row({r.route, Index{spec.n()}, Index{spec.k()}, join_ints(sub.distances()),
               join_half_ints(filling.occupied()), std::string(e.bits ? "bits" : "nats"),
               rep.entropy * scale, rep.subsystem_size, rep.boundary_size, rep.ratio_sv * scale,
               rep.ratio_boundary * scale, Index(r.spectrum.entries.size()), gap});
  }
  auto meta = graph_meta("entropy", spec);
  meta["routes_agree"] = worst <= kAgreement;
  write_table(c, out, t, meta);

  if (!e.spectrum_output.empty()) {
    Table s({"route", "lambda", "multiplicity"});
    for (const auto& r : results) {
      for (const auto& entry : r.spectrum.entries) s.add_row({r.route, entry.lambda, entry.multiplicity});
    }
    Common sc = c;
    sc.output = e.spectrum_output;
    write_table(sc, out, s, graph_meta("spectrum", spec));
  }
  if (worst > kAgreement) {
    err << "routes disagree: max eigenvalue discrepancy " << format_double(worst) << '\n';
    return kFailure;
  }
  return kOk;
}

int cmd_sweep(const Common& c, SweepOptions opt, std::ostream& out, std::ostream& err) {
  if (c.n > 0) opt.n = c.n;
  if (c.k > 0) opt.k = c.k;
  opt.dense_cap = c.dense_cap;
  const auto result = run_sweep(opt);
  nlohmann::ordered_json meta;
  meta["command"] = "sweep";
  meta["figure"] = opt.figure;
  meta["entropy_bound_ok"] = result.bound_ok;
  if (opt.route == "all") meta["max_discrepancy"] = std::stod(format_double(result.max_discrepancy));
  write_table(c, out, result.table, meta);
  if (!result.bound_ok) {
    err << "entropy exceeded |SV| ln 2 on some row\n";
    return kFailure;
  }
  if (result.max_discrepancy > kAgreement) {
    err << "routes disagree: max eigenvalue discrepancy " << format_double(result.max_discrepancy) << '\n';
    return kFailure;
  }
  return kOk;
}

int cmd_verify(const Common& c, const VerifyOptions& v, std::ostream& out) {
  std::vector<GraphSpec> graphs;
  if (c.n > 0 || c.k > 0) {
    graphs.emplace_back(c.n, c.k);
  } else if (v.quick) {
    graphs = {GraphSpec(4, 2), GraphSpec(6, 3)};
  } else {
    graphs = {GraphSpec(4, 2), GraphSpec(6, 3), GraphSpec(8, 4)};
  }
  Table t({"n", "k", "check", "value", "threshold", "passed", "detail"});
  bool all = true;
  for (const auto& spec : graphs) {
    if (spec.vertex_count() > c.dense_cap) throw CapacityError("verify needs C(n,k) <= dense cap");
    for (const auto& r : run_battery(spec, {v.quick, v.perturb_mu})) {
      all = all && r.passed;
      t.add_row({Index{r.n}, Index{r.k}, r.name, r.value, r.threshold, std::string(r.passed ? "true" : "false"),
                 r.detail});
    }
  }
  nlohmann::ordered_json meta;
  meta["command"] = "verify";
  meta["passed"] = all;
  meta["perturb_mu"] = v.perturb_mu;
  write_table(c, out, t, meta);
  return all ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free-fermion entanglement entropy on Johnson graphs J(n,k)"};
  app.require_subcommand(1);

  Common energies_common, entropy_common, sweep_common, verify_common;
  verify_common.format = "json";
  HoppingOptions energies_hop, entropy_hop;
  FillingOptions energies_fill, entropy_fill;
  EntropyOptions entropy_opt;
  SweepOptions sweep_opt;
  VerifyOptions verify_opt;

  auto* energies = app.add_subcommand("energies", "Energy table: j, theta_j, Omega_j, D_j and the filling");
  add_common(energies, energies_common);
  add_hopping(energies, energies_hop);
  add_filling(energies, energies_fill);

  auto* entropy = app.add_subcommand("entropy", "Entanglement entropy of a set of neighborhoods");
  add_common(entropy, entropy_common);
  add_hopping(entropy, entropy_hop);
  add_filling(entropy, entropy_fill);
  entropy->add_option("--distances", entropy_opt.distances, "SD as a list, e.g. 0,2..4");
  entropy->add_option("--cutoff", entropy_opt.cutoff, "SD = {0..N}");
  entropy->add_option("--x0", entropy_opt.x0, "Base vertex as a subset, e.g. 4,5");
  entropy->add_option("--route", entropy_opt.route, "oracle | modules | heun | all")
      ->check(CLI::IsMember({"oracle", "modules", "heun", "all"}));
  entropy->add_flag("--bits", entropy_opt.bits, "Report entropies in bits");
  entropy->add_flag("--diagnostics", entropy_opt.diagnostics, "Print mu and nu of the Heun operator");
  entropy->add_option("--spectrum-output", entropy_opt.spectrum_output, "Also write the spectra here");

  auto* sweep = app.add_subcommand("sweep", "Figure data as CSV");
  add_common(sweep, sweep_common, false);
  add_filling(sweep, sweep_opt.fill);
  sweep->add_option("--figure", sweep_opt.figure, "fig2a | fig2b | fig3a | fig3b | fig4")->required();
  sweep->add_option("--n-min", sweep_opt.n_min, "fig2a: smallest n");
  sweep->add_option("--n-max", sweep_opt.n_max, "fig2a: largest n");
  sweep->add_option("--k-list", sweep_opt.k_list, "fig3a: values of k");
  sweep->add_option("--j1", sweep_opt.j1, "fig4: module spin j1");
  sweep->add_option("--j2", sweep_opt.j2, "fig4: module spin j2");
  sweep->add_option("--route", sweep_opt.route, "default | all")->check(CLI::IsMember({"default", "all"}));

  auto* verify = app.add_subcommand("verify", "Run the invariant battery");
  add_common(verify, verify_common, false);
  verify->add_flag("--quick", verify_opt.quick, "Fast subset");
  verify->add_option("--perturb-mu", verify_opt.perturb_mu, "Shift mu in the commutation check");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kBadConfig;
  }

  try {
    if (energies->parsed()) return cmd_energies(energies_common, energies_hop, energies_fill, out);
    if (entropy->parsed()) return cmd_entropy(entropy_common, entropy_hop, entropy_fill, entropy_opt, out, err);
    if (sweep->parsed()) return cmd_sweep(sweep_common, sweep_opt, out, err);
    if (verify->parsed()) return cmd_verify(verify_common, verify_opt, out);
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::invalid_argument& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kBadConfig;
  } catch (const std::out_of_range& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kBadConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kBadConfig;
}

}  // namespace johnson::cli
