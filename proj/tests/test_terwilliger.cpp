#include <algorithm>

#include <doctest.h>

#include "johnson/spectral.hpp"
#include "johnson/terwilliger.hpp"

using namespace johnson;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

const ModuleLabel& find(const std::vector<ModuleLabel>& mods, HalfInt j1, HalfInt j2) {
  const auto it = std::find_if(mods.begin(), mods.end(), [&](const ModuleLabel& m) { return m.j1 == j1 && m.j2 == j2; });
  REQUIRE(it != mods.end());
  return *it;
}

}  // namespace

TEST_CASE("modules of the octahedron") {
  const GraphSpec spec(4, 2);
  const auto mods = enumerate_modules(spec);
  CHECK(find(mods, h(2), h(2)).dim == 3);
  CHECK(find(mods, h(2), h(0)).dim == 1);
  CHECK(find(mods, h(0), h(2)).dim == 1);
  Index total = 0;
  for (const auto& m : mods) {
    CHECK(m.degeneracy == 1);
    total += m.dim * m.degeneracy;
  }
  CHECK(total == 6);
}

TEST_CASE("module completeness up to n = 30") {
  for (int n = 2; n <= 30; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      const GraphSpec spec(n, k);
      Index total = 0;
      for (const auto& m : enumerate_modules(spec)) total += m.dim * m.degeneracy;
      CHECK(total == spec.vertex_count());
    }
  }
}

TEST_CASE("level degeneracies sum to the vertex count") {
  const GraphSpec spec(12, 5);
  Index total = 0;
  for (HalfInt j : spec.levels()) total += level_degeneracy(j, spec);
  CHECK(total == spec.vertex_count());
  CHECK_THROWS_AS(level_degeneracy(h(0), GraphSpec(7, 3)), std::out_of_range);
}

TEST_CASE("CG matrices are orthonormal") {
  const GraphSpec spec(30, 15);
  for (const auto& b : module_bases(spec)) {
    const Matrix gram = b.cg.transpose() * b.cg;
    CHECK((gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("single-neighborhood eigenvalues") {
  const GraphSpec spec(4, 2);
  const auto mods = enumerate_modules(spec);
  const auto& m11 = find(mods, h(2), h(2));
  CHECK(single_neighborhood_eigenvalue(m11, 0, FillingSpec({h(0)}, spec), spec) == doctest::Approx(1.0 / 3.0));
  CHECK(single_neighborhood_eigenvalue(m11, 1, FillingSpec::all(spec), spec) == doctest::Approx(1.0));
  const GraphSpec big(12, 6);
  const FillingSpec f({h(0), h(4), h(6)}, big);
  for (const auto& m : enumerate_modules(big)) {
    for (int i = m.first_distance(big); i < m.first_distance(big) + m.dim; ++i) {
      CHECK(single_neighborhood_eigenvalue(m, i, f, big) + single_neighborhood_eigenvalue(m, i, f.complement(big), big) ==
            doctest::Approx(1.0));
    }
  }
}

TEST_CASE("module correlation blocks") {
  const GraphSpec spec(4, 2);
  const auto bases = module_bases(spec);
  const auto& b = *std::find_if(bases.begin(), bases.end(), [](const ModuleBasis& x) { return x.label.dim == 3; });
  const auto block = module_correlation_block(b, FillingSpec({h(0)}, spec), SubsystemSpec({0}, spec), spec);
  REQUIRE(block.entries.rows() == 1);
  CHECK(block.entries(0, 0) == doctest::Approx(1.0 / 3.0));
  const auto all = module_correlation_block(b, FillingSpec::all(spec), SubsystemSpec::ball(2, spec), spec);
  CHECK(all.entries.isIdentity(1e-12));
  CHECK(module_correlation_block(b, FillingSpec(), SubsystemSpec::ball(2, spec), spec).entries.isZero());
}

TEST_CASE("assembled spectrum matches the oracle") {
  for (const auto& spec : {GraphSpec(4, 2), GraphSpec(6, 2), GraphSpec(7, 3), GraphSpec(8, 4)}) {
    const auto proj = eigenprojectors_oracle(spec);
    const auto levels = spec.levels();
    for (std::size_t mask = 1; mask < (1u << levels.size()); mask += 3) {
      std::vector<HalfInt> occ;
      for (std::size_t l = 0; l < levels.size(); ++l)
        if (mask & (1u << l)) occ.push_back(levels[l]);
      const FillingSpec f(occ, spec);
      for (const auto& d : std::vector<std::vector<int>>{{0}, {1}, {0, 2}, {1, 2}}) {
        const SubsystemSpec sub(d, spec);
        const auto cmp = compare_spectra(spectrum_oracle(chopped_correlation_oracle(proj, spec, f, sub)),
                                         assemble_spectrum(spec, f, sub));
        CHECK(cmp.same_grouping);
        CHECK(cmp.max_abs_difference < 1e-8);
      }
    }
  }
}

TEST_CASE("whole graph gives a projector spectrum") {
  const GraphSpec spec(9, 4);
  const FillingSpec f = FillingSpec::lowest(2, spec);
  const auto s = assemble_spectrum(spec, f, SubsystemSpec::ball(4, spec));
  REQUIRE(s.entries.size() == 2);
  CHECK(s.entries[0].lambda == 0.0);
  CHECK(s.entries[1].lambda == 1.0);
  CHECK(s.entries[1].multiplicity == level_degeneracy(spec.levels()[0], spec) + level_degeneracy(spec.levels()[1], spec));
}

TEST_CASE("Hahn algebra relations") {
  for (const auto& spec : {GraphSpec(4, 2), GraphSpec(6, 3), GraphSpec(8, 4), GraphSpec(9, 3)}) {
    for (const auto& r : check_hahn_algebra(spec)) {
      CHECK(r.first <= 1e-8);
      CHECK(r.second <= 1e-8);
    }
  }
}
