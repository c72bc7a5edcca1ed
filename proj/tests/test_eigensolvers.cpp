#include <doctest.h>

#include "johnson/eigensolvers.hpp"
#include "johnson/scheme.hpp"

using namespace johnson;

TEST_CASE("Jacobi on small matrices") {
  const auto id = jacobi_eigen(Matrix::Identity(4, 4));
  CHECK(id.values.isApproxToConstant(1.0));
  const Vector d = Eigen::Vector3d(3.0, 1.0, 2.0);
  const auto diag = jacobi_eigen(Matrix(d.asDiagonal()));
  CHECK(diag.values(0) == 1.0);
  CHECK(diag.values(2) == 3.0);
  CHECK_THROWS(jacobi_eigen(Matrix{{1.0, 2.0}, {0.0, 1.0}}));
}

TEST_CASE("Jacobi reproduces the octahedron spectrum") {
  const auto eig = jacobi_eigen(adjacency_matrix(1, GraphSpec(4, 2)));
  const std::vector<double> want = {-2, -2, 0, 0, 0, 4};
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(eig.values(static_cast<Eigen::Index>(i)) == doctest::Approx(want[i]).epsilon(1e-12));
  }
  const Matrix a = adjacency_matrix(1, GraphSpec(4, 2));
  const Matrix back = eig.vectors * eig.values.asDiagonal() * eig.vectors.transpose();
  CHECK((back - a).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("tridiagonal QL matches Jacobi") {
  Tridiagonal<double> t;
  t.diagonal = Vector::LinSpaced(9, -3.0, 5.0);
  t.offdiagonal = Vector::Constant(8, 0.7);
  t.offdiagonal(4) = 0.0;
  const auto ql = tridiagonal_eigen(t);
  const auto jac = jacobi_eigen(t.dense());
  CHECK((ql.values - jac.values).cwiseAbs().maxCoeff() < 1e-12);
  const Matrix residual = t.dense() * ql.vectors - ql.vectors * ql.values.asDiagonal();
  CHECK(residual.cwiseAbs().maxCoeff() < 1e-12);
  const auto bis = bisection_eigen(t);
  CHECK((bis.values - jac.values).cwiseAbs().maxCoeff() < 1e-10);
}
