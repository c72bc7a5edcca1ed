#include "johnson/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "johnson/entropy.hpp"
#include "johnson/heun.hpp"
#include "johnson/spectral.hpp"
#include "johnson/terwilliger.hpp"

namespace johnson {

double scheme_identity_deviation(const GraphSpec& spec) {
  const int k = spec.k();
  const Index size = spec.vertex_count();
  std::vector<Matrix> a;
  Matrix sum = Matrix::Zero(size, size);
  for (int i = 0; i <= k; ++i) {
    a.push_back(adjacency_matrix(i, spec));
    sum += a.back();
  }
  double worst = (sum - Matrix::Ones(size, size)).cwiseAbs().maxCoeff();
  for (int i = 0; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) worst = std::max(worst, a[i].cwiseProduct(a[j]).cwiseAbs().maxCoeff());
  }
  if (k >= 1) {
    const double degree = static_cast<double>(k) * (spec.n() - k);
    worst = std::max(worst, (a[1].rowwise().sum().array() - degree).abs().maxCoeff());
  }
  const Vertex x0 = first_vertex(spec);
  Matrix resolution = Matrix::Zero(size, size);
  for (int i = 0; i <= k; ++i) resolution += neighborhood_projector(x0, i, spec);
  worst = std::max(worst, (resolution - Matrix::Identity(size, size)).cwiseAbs().maxCoeff());
  return worst;
}

double dual_hahn_identity_deviation(const GraphSpec& spec) {
  using Wide = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const Wide a = adjacency_matrix(1, spec).cast<long double>();
  double worst = 0.0;
  for (int i = 0; i <= spec.k(); ++i) {
    const Wide poly = dual_hahn_matrix(i, a, spec);
    const Wide exact = adjacency_matrix(i, spec).cast<long double>();
    worst = std::max(worst, static_cast<double>((poly - exact).cwiseAbs().maxCoeff()));
  }
  return worst;
}

double embedding_mismatches(const GraphSpec& spec) {
  const auto vs = enumerate_vertices(spec);
  std::vector<std::vector<int>> bits;
  for (const auto& v : vs) bits.push_back(embed_in_hypercube(v, spec));
  double bad = 0;
  for (std::size_t x = 0; x < vs.size(); ++x) {
    for (std::size_t y = x; y < vs.size(); ++y) {
      if (hamming_distance(bits[x], bits[y]) != 2 * distance(vs[x], vs[y], spec)) bad += 1;
    }
  }
  return bad;
}

double cg_orthonormality_deviation(const GraphSpec& spec) {
  double worst = 0.0;
  for (const auto& b : module_bases(spec)) {
    const auto id_cols = Matrix::Identity(b.cg.cols(), b.cg.cols());
    const auto id_rows = Matrix::Identity(b.cg.rows(), b.cg.rows());
    worst = std::max(worst, (b.cg.transpose() * b.cg - id_cols).cwiseAbs().maxCoeff());
    worst = std::max(worst, (b.cg * b.cg.transpose() - id_rows).cwiseAbs().maxCoeff());
  }
  return worst;
}

double module_completeness_deviation(const GraphSpec& spec) {
  Index total = 0;
  for (const auto& m : enumerate_modules(spec)) total += m.dim * m.degeneracy;
  return std::abs(static_cast<double>(total - spec.vertex_count()));
}

double degeneracy_trace_deviation(const GraphSpec& spec) {
  const auto proj = eigenprojectors_oracle(spec);
  double worst = 0.0;
  for (const auto& [j, e] : proj.by_level) {
    worst = std::max(worst, std::abs(e.trace() - static_cast<double>(level_degeneracy(j, spec))));
  }
  return worst;
}

double route_agreement_deviation(const GraphSpec& spec) {
  const auto proj = eigenprojectors_oracle(spec);
  const auto bases = module_bases(spec);
  double worst = 0.0;
  for (int cutoff = 0; cutoff <= spec.k(); ++cutoff) {
    for (HalfInt j0 : spec.levels()) {
      const auto hs = make_heun_spec(spec, cutoff, j0);
      const auto filling = heun_filling(hs, spec);
      const auto sub = heun_subsystem(hs, spec);
      const auto oracle = spectrum_oracle(chopped_correlation_oracle(proj, spec, filling, sub));
      const auto modules = assemble_spectrum(bases, spec, filling, sub);
      const auto heun = spectrum_via_heun(bases, spec, hs);
      for (const auto& other : {modules, heun}) {
        const auto cmp = compare_spectra(oracle, other);
        if (!cmp.same_total || !cmp.same_grouping) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, cmp.max_abs_difference);
      }
    }
  }
  return worst;
}

double hahn_algebra_deviation(const GraphSpec& spec) {
  double worst = 0.0;
  for (const auto& r : check_hahn_algebra(spec)) worst = std::max({worst, r.first, r.second});
  return worst;
}

double commutant_deviation(const GraphSpec& spec, double mu_shift) {
  const auto bases = module_bases(spec);
  double worst = 0.0;
  for (int cutoff = 0; cutoff < spec.k(); ++cutoff) {
    for (HalfInt j0 : spec.levels()) {
      if (j0 == spec.levels().back()) continue;
      const auto hs = make_heun_spec(spec, cutoff, j0);
      for (const auto& b : bases) worst = std::max(worst, commutant_residual(b, hs, spec, mu_shift));
    }
  }
  return worst;
}

std::vector<std::pair<FillingSpec, SubsystemSpec>> duality_configurations(const GraphSpec& spec,
                                                                          int count) {
  const int k = spec.k();
  const unsigned full = (1u << (k + 1)) - 1u;
  const auto levels = spec.levels();
  std::vector<std::pair<FillingSpec, SubsystemSpec>> out;
  // Walk two coprime strides through the subset masks of distances and levels.
  for (unsigned t = 0; static_cast<int>(out.size()) < count && t < 64u * (full + 1); ++t) {
    const unsigned sd_mask = (t * 5u + 1u) % (full + 1);
    const unsigned se_mask = (t * 7u + 3u) % (full + 1);
    if (sd_mask == 0 || sd_mask == full) continue;
    std::vector<int> sd;
    std::vector<HalfInt> se;
    for (int i = 0; i <= k; ++i) {
      if (sd_mask >> i & 1u) sd.push_back(i);
      if (se_mask >> i & 1u) se.push_back(levels[static_cast<std::size_t>(i)]);
    }
    out.emplace_back(FillingSpec(se, spec), SubsystemSpec(sd, spec));
  }
  return out;
}

double purity_duality_deviation(const GraphSpec& spec, int count) {
  const auto proj = eigenprojectors_oracle(spec);
  double worst = 0.0;
  for (const auto& [filling, sub] : duality_configurations(spec, count)) {
    const double inside = von_neumann(spectrum_oracle(chopped_correlation_oracle(proj, spec, filling, sub)));
    const double outside =
        von_neumann(spectrum_oracle(chopped_correlation_oracle(proj, spec, filling, sub.complement(spec))));
    worst = std::max(worst, std::abs(inside - outside));
  }
  return worst;
}

double mirror_symmetry_deviation(const GraphSpec& spec) {
  if (2 * spec.k() != spec.n()) throw std::invalid_argument("mirror symmetry needs k = n/2");
  const auto bases = module_bases(spec);
  double worst = 0.0;
  for (int levels = 1; levels <= spec.k() + 1; ++levels) {
    const auto filling = FillingSpec::lowest(levels, spec);
    for (int i = 0; 2 * i < spec.k(); ++i) {
      const double s = von_neumann(assemble_spectrum(bases, spec, filling, SubsystemSpec({i}, spec)));
      const double t =
          von_neumann(assemble_spectrum(bases, spec, filling, SubsystemSpec({spec.k() - i}, spec)));
      worst = std::max(worst, std::abs(s - t) / std::max({1.0, std::abs(s), std::abs(t)}));
    }
  }
  return worst;
}

std::vector<CheckResult> run_battery(const GraphSpec& spec, const BatteryOptions& opt) {
  std::vector<CheckResult> out;
  auto add = [&](std::string name, double threshold, auto&& fn) {
    CheckResult r{std::move(name), spec.n(), spec.k(), 0.0, threshold, false, ""};
    try {
      r.value = fn();
      r.passed = r.value <= threshold;
    } catch (const std::exception& e) {
      r.value = std::numeric_limits<double>::infinity();
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  };
  add("scheme_identities", 0.0, [&] { return scheme_identity_deviation(spec); });
  add("dual_hahn_identity", 1e-8, [&] { return dual_hahn_identity_deviation(spec); });
  add("hypercube_embedding", 0.0, [&] { return embedding_mismatches(spec); });
  add("cg_orthonormality", 1e-12, [&] { return cg_orthonormality_deviation(spec); });
  add("module_completeness", 0.0, [&] { return module_completeness_deviation(spec); });
  add("degeneracy_trace", 1e-8, [&] { return degeneracy_trace_deviation(spec); });
  if (!opt.quick) add("route_agreement", 1e-8, [&] { return route_agreement_deviation(spec); });
  add("hahn_algebra", 1e-8, [&] { return hahn_algebra_deviation(spec); });
  add("commutant", 1e-9, [&] { return commutant_deviation(spec, opt.perturb_mu); });
  if (!opt.quick) add("purity_duality", 1e-7, [&] { return purity_duality_deviation(spec); });
  if (2 * spec.k() == spec.n()) add("mirror_symmetry", 1e-8, [&] { return mirror_symmetry_deviation(spec); });
  return out;
}

}  // namespace johnson
