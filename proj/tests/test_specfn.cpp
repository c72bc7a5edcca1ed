#include <cmath>
#include <map>

#include <doctest.h>

#include "johnson/specfn.hpp"

using namespace johnson;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

// |j1 m1> ⊗ |j2 m2> coefficients of every |j m>, built from the highest-weight
// state of each j by repeated lowering and orthogonalization.
class LadderOracle {
 public:
  LadderOracle(HalfInt j1, HalfInt j2) : j1_(j1), j2_(j2) {
    const int d1 = j1.twice + 1, d2 = j2.twice + 1;
    for (int jt = j1.twice + j2.twice; jt >= std::abs(j1.twice - j2.twice); jt -= 2) {
      // Highest state: the largest residual of a product state with m = j after
      // projecting out the already-built states of larger j.
      Eigen::VectorXd top = Eigen::VectorXd::Zero(d1 * d2);
      for (int a = 0; a < d1; ++a) {
        const int m2t = jt - (j1.twice - 2 * a);
        if (std::abs(m2t) > j2.twice || (j2.twice - m2t) % 2 != 0) continue;
        Eigen::VectorXd e = Eigen::VectorXd::Zero(d1 * d2);
        e(index(a, (j2.twice - m2t) / 2)) = 1.0;
        for (const auto& [key, vec] : states_) {
          if (key.second == jt) e -= vec.dot(e) * vec;
        }
        if (e.norm() > top.norm()) top = e;
      }
      top.normalize();
      int mt = jt;
      states_[{jt, mt}] = top;
      while (mt > -jt) {
        Eigen::VectorXd next = lower(states_[{jt, mt}]);
        const double jj = 0.5 * jt, m = 0.5 * mt;
        next /= std::sqrt(jj * (jj + 1) - m * (m - 1));
        mt -= 2;
        states_[{jt, mt}] = next;
      }
    }
  }

  double coefficient(HalfInt j, HalfInt m, HalfInt m1, HalfInt m2) const {
    const auto it = states_.find({j.twice, m.twice});
    if (it == states_.end()) return 0.0;
    return it->second(index((j1_.twice - m1.twice) / 2, (j2_.twice - m2.twice) / 2));
  }

 private:
  int index(int a, int b) const { return a * (j2_.twice + 1) + b; }

  Eigen::VectorXd lower(const Eigen::VectorXd& v) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
    const int d1 = j1_.twice + 1, d2 = j2_.twice + 1;
    const double s1 = j1_.value(), s2 = j2_.value();
    for (int a = 0; a < d1; ++a) {
      for (int b = 0; b < d2; ++b) {
        const double c = v(index(a, b));
        if (c == 0.0) continue;
        const double m1 = s1 - a, m2 = s2 - b;
        if (a + 1 < d1) out(index(a + 1, b)) += c * std::sqrt(s1 * (s1 + 1) - m1 * (m1 - 1));
        if (b + 1 < d2) out(index(a, b + 1)) += c * std::sqrt(s2 * (s2 + 1) - m2 * (m2 - 1));
      }
    }
    return out;
  }

  HalfInt j1_, j2_;
  // Keyed by (2j, 2m).
  std::map<std::pair<int, int>, Eigen::VectorXd> states_;
};

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.0, 0) == 1.0);
  CHECK(pochhammer(1.0, 4) == 24.0);
  CHECK(pochhammer(-2.0, 3) == 0.0);
  CHECK_THROWS(pochhammer(1.0, -1));
}

TEST_CASE("terminating hypergeometric") {
  CHECK(hyp2f1_terminating(0, 2.5, 1.5, 0.3) == 1.0);
  CHECK(hyp2f1_terminating(-1, 2.5, 1.5, 0.3) == doctest::Approx(1.0 - 2.5 * 0.3 / 1.5));
  CHECK(hyp2f1_terminating(-2, 1.0, 1.0, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("dual Hahn polynomials") {
  const DualHahnParams p{0.0, 2.0, 3};
  CHECK(dual_hahn(0, 5.0, p) == 1.0);
  CHECK(dual_hahn(1, 0.0, p) == 1.0);
  CHECK(dual_hahn(2, 0.0, p) == 1.0);
  // R_1(λ) = 1 - λ / ((γ+1) N)
  CHECK(dual_hahn(1, 4.0, p) == doctest::Approx(1.0 - 4.0 / 3.0));
  CHECK_THROWS(dual_hahn(4, 0.0, p));
  CHECK(dual_hahn_sum<long double>(1, 4.0L, 0.0L, 2.0L, 3) == doctest::Approx(1.0 - 4.0 / 3.0));
}

TEST_CASE("Clebsch-Gordan special values") {
  CHECK(clebsch_gordan(h(4), h(4), h(2), h(2), h(2), h(2)) == doctest::Approx(1.0));
  const double up = clebsch_gordan(h(0), h(0), h(1), h(1), h(1), h(-1));
  const double down = clebsch_gordan(h(0), h(0), h(1), h(-1), h(1), h(1));
  CHECK(std::abs(up) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(up * down < 0.0);
  CHECK(std::abs(clebsch_gordan(h(0), h(0), h(2), h(2), h(2), h(-2))) == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(clebsch_gordan(h(2), h(0), h(2), h(2), h(2), h(2)) == 0.0);
}

TEST_CASE("Clebsch-Gordan magnitudes match the ladder construction") {
  for (int t1 = 0; t1 <= 8; ++t1) {
    for (int t2 = 0; t2 <= 8; ++t2) {
      const LadderOracle oracle(h(t1), h(t2));
      for (int jt = std::abs(t1 - t2); jt <= t1 + t2; jt += 2) {
        for (int mt = -jt; mt <= jt; mt += 2) {
          for (int m1 = -t1; m1 <= t1; m1 += 2) {
            const int m2 = mt - m1;
            if (std::abs(m2) > t2) continue;
            const double got = clebsch_gordan(h(jt), h(mt), h(t1), h(m1), h(t2), h(m2));
            const double want = oracle.coefficient(h(jt), h(mt), h(m1), h(m2));
            CAPTURE(t1);
            CAPTURE(t2);
            CAPTURE(jt);
            CAPTURE(mt);
            CAPTURE(m1);
            CHECK(std::abs(got) == doctest::Approx(std::abs(want)).epsilon(1e-10));
          }
        }
      }
    }
  }
}

TEST_CASE("Clebsch-Gordan columns are orthonormal and both branches agree at j1 = j2") {
  const HalfInt j1 = h(5), j2 = h(7), m = h(2);
  for (int ja = 2; ja <= 12; ja += 2) {
    for (int jb = 2; jb <= 12; jb += 2) {
      double dot = 0.0;
      for (int m1 = -5; m1 <= 5; m1 += 2) {
        const HalfInt m2 = m - h(m1);
        if (abs(m2) > j2) continue;
        dot += clebsch_gordan(h(ja), m, j1, h(m1), j2, m2) * clebsch_gordan(h(jb), m, j1, h(m1), j2, m2);
      }
      CHECK(dot == doctest::Approx(ja == jb ? 1.0 : 0.0).epsilon(1e-12));
    }
  }
  for (int jt = 0; jt <= 8; jt += 2) {
    for (int m1 = -4; m1 <= 4; m1 += 2) {
      const double a = clebsch_gordan_branch(h(jt), h(0), h(4), h(m1), h(4), h(-m1), false);
      const double b = clebsch_gordan_branch(h(jt), h(0), h(4), h(m1), h(4), h(-m1), true);
      CHECK(std::abs(a) == doctest::Approx(std::abs(b)).epsilon(1e-12));
    }
  }
}
