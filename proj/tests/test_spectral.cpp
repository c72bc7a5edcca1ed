#include <cmath>

#include <doctest.h>

#include "johnson/spectral.hpp"
#include "johnson/terwilliger.hpp"

using namespace johnson;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

std::vector<double> omegas(const EnergyTable& t) {
  std::vector<double> out;
  for (const auto& row : t) out.push_back(row.omega);
  return out;
}

}  // namespace

TEST_CASE("adjacency eigenvalues of the octahedron") {
  const GraphSpec spec(4, 2);
  const auto t = energy_table(spec, HoppingProfile::nearest_neighbour(spec));
  REQUIRE(t.size() == 3);
  CHECK(t[0].j == h(0));
  CHECK(t[0].omega == doctest::Approx(-2.0));
  CHECK(t[1].omega == doctest::Approx(0.0));
  CHECK(t[2].omega == doctest::Approx(4.0));
  CHECK(t[0].degeneracy == 2);
  CHECK(t[1].degeneracy == 3);
  CHECK(t[2].degeneracy == 1);
  CHECK(adjacency_eigenvalue(h(4), spec) == doctest::Approx(4.0));
}

TEST_CASE("constant hopping gives constant energies") {
  const GraphSpec spec(7, 3);
  for (double w : omegas(energy_table(spec, HoppingProfile::make({2.5, 0, 0, 0}, spec)))) {
    CHECK(w == doctest::Approx(2.5));
  }
  CHECK_THROWS(HoppingProfile::make({1.0, 2.0}, spec));
}

TEST_CASE("exponential hopping closed form") {
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      const GraphSpec spec(n, k);
      for (double c : {0.1, 1.0, 5.0, 20.0}) {
        const auto sum = omegas(energy_table(spec, HoppingProfile::exponential(c, spec)));
        const auto closed = omegas(energy_exponential(spec, c));
        for (std::size_t j = 0; j < sum.size(); ++j) {
          CHECK(closed[j] == doctest::Approx(sum[j]).epsilon(1e-9));
          if (j > 0) CHECK(closed[j] > closed[j - 1]);
        }
      }
      // c = 0: all-ones matrix, so only the top level has nonzero energy.
      const auto flat = omegas(energy_table(spec, HoppingProfile::exponential(0.0, spec)));
      CHECK(flat.back() == doctest::Approx(double(binomial(n, k))));
      for (std::size_t j = 0; j + 1 < flat.size(); ++j) CHECK(std::abs(flat[j]) < 1e-9);
    }
  }
}

TEST_CASE("ground state filling") {
  const GraphSpec spec(4, 2);
  const auto nn = energy_table(spec, HoppingProfile::make({0, 1, 0}, spec));
  CHECK(fill_ground_state(nn, spec).occupied() == std::vector<HalfInt>{h(0)});
  CHECK(fill_ground_state(nn, spec, 1e-12, true).size() == 2);
  CHECK(fill_ground_state(energy_table(spec, HoppingProfile::make({0, 0, 0}, spec)), spec).empty());
  CHECK(fill_ground_state(energy_table(spec, HoppingProfile::make({-100, 1, 0}, spec)), spec).size() == 3);
}

TEST_CASE("dual Hahn expansion of distance matrices") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      const GraphSpec spec(n, k);
      const Matrix a = adjacency_matrix(1, spec);
      for (int i = 0; i <= k; ++i) {
        CHECK((dual_hahn_matrix(i, a, spec) - adjacency_matrix(i, spec)).cwiseAbs().maxCoeff() < 1e-8);
      }
    }
  }
}

TEST_CASE("eigenprojectors have the closed-form ranks") {
  for (const auto& spec : {GraphSpec(4, 2), GraphSpec(7, 3), GraphSpec(8, 4)}) {
    const auto proj = eigenprojectors_oracle(spec);
    CHECK(proj.by_level.size() == static_cast<std::size_t>(spec.k() + 1));
    Matrix sum = Matrix::Zero(spec.vertex_count(), spec.vertex_count());
    for (const auto& [j, e] : proj.by_level) {
      CHECK(e.trace() == doctest::Approx(double(level_degeneracy(j, spec))));
      sum += e;
    }
    CHECK(sum.isIdentity(1e-10));
  }
}

TEST_CASE("chopped correlation oracle") {
  const GraphSpec spec(4, 2);
  const SubsystemSpec sub({0}, spec);
  const Matrix c = chopped_correlation_oracle(spec, FillingSpec({h(0)}, spec), sub);
  REQUIRE(c.rows() == 1);
  CHECK(c(0, 0) == doctest::Approx(1.0 / 3.0));
  const auto spectrum = spectrum_oracle(c);
  REQUIRE(spectrum.entries.size() == 1);
  CHECK(spectrum.entries[0].lambda == doctest::Approx(1.0 / 3.0));
  CHECK(spectrum.entries[0].multiplicity == 1);

  const SubsystemSpec ball = SubsystemSpec::ball(1, spec);
  CHECK(chopped_correlation_oracle(spec, FillingSpec::all(spec), ball).isIdentity(1e-10));
  CHECK(chopped_correlation_oracle(spec, FillingSpec(), ball).isZero(1e-10));
}

TEST_CASE("oracle spectrum of simple matrices") {
  const auto id = spectrum_oracle(Matrix::Identity(5, 5));
  REQUIRE(id.entries.size() == 1);
  CHECK(id.entries[0].lambda == 1.0);
  CHECK(id.entries[0].multiplicity == 5);
  const auto zero = spectrum_oracle(Matrix::Zero(3, 3));
  REQUIRE(zero.entries.size() == 1);
  CHECK(zero.entries[0].multiplicity == 3);
  CHECK_THROWS_AS(spectrum_oracle(Matrix::Zero(3, 3), 2), CapacityError);
}
