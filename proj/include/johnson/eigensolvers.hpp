#pragma once

// Dense and tridiagonal symmetric eigensolvers, templated on the scalar type.
//
// Both return eigenvalues in ascending order with eigenvectors as matching
// columns. The Jacobi kernel serves the dense oracle and the small per-module
// blocks; the QL kernel serves the tridiagonal Heun operator.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "johnson/common.hpp"

namespace johnson {

template <typename Scalar>
struct SymmetricEigen {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vectors;  // empty when not requested
};

template <typename Scalar>
struct Tridiagonal {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> diagonal;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> offdiagonal;  // size = diagonal.size() - 1, or 0

  Eigen::Index size() const { return diagonal.size(); }

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dense() const {
    const Eigen::Index n = size();
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      m(i, i) = diagonal(i);
      if (i + 1 < n) {
        m(i, i + 1) = offdiagonal(i);
        m(i + 1, i) = offdiagonal(i);
      }
    }
    return m;
  }

  /// Contiguous principal sub-block [first, first+count).
  Tridiagonal block(Eigen::Index first, Eigen::Index count) const {
    Tridiagonal out;
    out.diagonal = diagonal.segment(first, count);
    out.offdiagonal = count > 1 ? Eigen::Matrix<Scalar, Eigen::Dynamic, 1>(
                                      offdiagonal.segment(first, count - 1))
                                : Eigen::Matrix<Scalar, Eigen::Dynamic, 1>();
    return out;
  }
};

namespace detail {

template <typename Scalar>
void sort_eigenpairs(SymmetricEigen<Scalar>& e) {
  const Eigen::Index n = e.values.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return e.values(a) < e.values(b); });
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values(n);
  for (Eigen::Index i = 0; i < n; ++i) values(i) = e.values(order[static_cast<std::size_t>(i)]);
  e.values = values;
  if (e.vectors.size() > 0) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vecs(e.vectors.rows(), n);
    for (Eigen::Index i = 0; i < n; ++i) vecs.col(i) = e.vectors.col(order[static_cast<std::size_t>(i)]);
    e.vectors = vecs;
  }
}

}  // namespace detail

/// Cyclic Jacobi eigensolver for a symmetric matrix. Converged when the
/// off-diagonal Frobenius norm drops below 1e-12 * ||M||_F.
/// Throws std::invalid_argument on a non-square or non-symmetric input.
template <typename Derived>
SymmetricEigen<typename Derived::Scalar> jacobi_eigen(const Eigen::MatrixBase<Derived>& input,
                                                      bool want_vectors = true,
                                                      int max_sweeps = 100) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using std::abs;
  using std::sqrt;

  if (input.rows() != input.cols()) throw std::invalid_argument("jacobi_eigen: matrix not square");
  Mat a = input;
  const Eigen::Index n = a.rows();
  const Scalar norm = a.norm();
  const Scalar max_abs = n > 0 ? a.cwiseAbs().maxCoeff() : Scalar(0);
  if (n > 0 && (a - a.transpose()).cwiseAbs().maxCoeff() > Scalar(1e-12) * max_abs) {
    throw std::invalid_argument("jacobi_eigen: matrix is not symmetric");
  }

  SymmetricEigen<Scalar> out;
  if (want_vectors) out.vectors = Mat::Identity(n, n);
  const Scalar tol = Scalar(1e-12) * norm;

  auto off_norm = [&]() {
    Scalar s(0);
    for (Eigen::Index q = 1; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) s += a(p, q) * a(p, q);
    return sqrt(Scalar(2) * s);
  };

  int sweep = 0;
  while (off_norm() > tol) {
    if (++sweep > max_sweeps) throw NumericalError("jacobi_eigen: no convergence");
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        const Scalar t = (theta >= Scalar(0) ? Scalar(1) : Scalar(-1)) /
                         (abs(theta) + sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Scalar arp = a(r, p);
          const Scalar arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
        if (want_vectors) {
          for (Eigen::Index r = 0; r < n; ++r) {
            const Scalar vrp = out.vectors(r, p);
            const Scalar vrq = out.vectors(r, q);
            out.vectors(r, p) = c * vrp - s * vrq;
            out.vectors(r, q) = s * vrp + c * vrq;
          }
        }
      }
    }
  }
  out.values = a.diagonal();
  detail::sort_eigenpairs(out);
  return out;
}

/// Sturm-sequence bisection for every eigenvalue followed by inverse iteration
/// (with re-orthogonalisation inside near-degenerate clusters).
template <typename Scalar>
SymmetricEigen<Scalar> bisection_eigen(const Tridiagonal<Scalar>& t, bool want_vectors = true) {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using std::abs;
  const Eigen::Index n = t.size();
  SymmetricEigen<Scalar> out;
  out.values = Vec::Zero(n);
  if (n == 0) return out;

  Scalar lo = t.diagonal(0), hi = t.diagonal(0);
  Scalar scale(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    Scalar r(0);
    if (i > 0) r += abs(t.offdiagonal(i - 1));
    if (i + 1 < n) r += abs(t.offdiagonal(i));
    lo = std::min(lo, t.diagonal(i) - r);
    hi = std::max(hi, t.diagonal(i) + r);
    scale = std::max(scale, abs(t.diagonal(i)) + r);
  }
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Scalar pivmin = std::max(eps * scale * eps, std::numeric_limits<Scalar>::min());

  // Number of eigenvalues strictly below x.
  auto count_below = [&](Scalar x) {
    Eigen::Index count = 0;
    Scalar q = t.diagonal(0) - x;
    if (abs(q) < pivmin) q = -pivmin;
    if (q < 0) ++count;
    for (Eigen::Index i = 1; i < n; ++i) {
      const Scalar e = t.offdiagonal(i - 1);
      q = t.diagonal(i) - x - e * e / q;
      if (abs(q) < pivmin) q = -pivmin;
      if (q < 0) ++count;
    }
    return count;
  };

  for (Eigen::Index idx = 0; idx < n; ++idx) {
    Scalar a = lo - eps * scale, b = hi + eps * scale;
    for (int it = 0; it < 200 && b - a > Scalar(2) * eps * std::max(abs(a), abs(b)) + pivmin; ++it) {
      const Scalar mid = (a + b) / Scalar(2);
      if (count_below(mid) > idx) b = mid;
      else a = mid;
    }
    out.values(idx) = (a + b) / Scalar(2);
  }
  if (!want_vectors) return out;

  out.vectors = Mat::Zero(n, n);
  const Scalar cluster_gap = Scalar(1e-3) * std::max(scale, Scalar(1));
  Eigen::Index cluster_start = 0;
  for (Eigen::Index idx = 0; idx < n; ++idx) {
    if (idx > 0 && out.values(idx) - out.values(idx - 1) > cluster_gap) cluster_start = idx;
    // Perturb the shift slightly so (T - λ) is not exactly singular.
    const Scalar shift = out.values(idx) + Scalar(10) * eps * std::max(scale, Scalar(1));
    Vec x = Vec::Constant(n, Scalar(1)) + Vec::LinSpaced(n, Scalar(0), Scalar(1)) * Scalar(1e-3) *
                                               Scalar(idx + 1);
    for (int it = 0; it < 4; ++it) {
      // Tridiagonal solve with partial pivoting (stores up to two super-diagonals).
      Vec d = t.diagonal.array() - shift;
      Vec up = n > 1 ? Vec(t.offdiagonal) : Vec();
      Vec lowr = n > 1 ? Vec(t.offdiagonal) : Vec();
      Vec up2 = Vec::Zero(std::max<Eigen::Index>(n - 2, 0));
      Vec rhs = x;
      for (Eigen::Index i = 0; i + 1 < n; ++i) {
        if (abs(lowr(i)) > abs(d(i))) {
          // swap rows i and i+1
          std::swap(d(i), lowr(i));
          std::swap(up(i), d(i + 1));
          if (i + 2 < n) {
            up2(i) = up(i + 1);
            up(i + 1) = Scalar(0);
          }
          std::swap(rhs(i), rhs(i + 1));
        }
        if (d(i) == Scalar(0)) d(i) = pivmin;
        const Scalar f = lowr(i) / d(i);
        d(i + 1) -= f * up(i);
        if (i + 2 < n) up(i + 1) -= f * up2(i);
        rhs(i + 1) -= f * rhs(i);
      }
      if (d(n - 1) == Scalar(0)) d(n - 1) = pivmin;
      Vec y(n);
      for (Eigen::Index i = n - 1; i >= 0; --i) {
        Scalar s = rhs(i);
        if (i + 1 < n) s -= up(i) * y(i + 1);
        if (i + 2 < n) s -= up2(i) * y(i + 2);
        y(i) = s / d(i);
      }
      for (Eigen::Index prev = cluster_start; prev < idx; ++prev) {
        y -= out.vectors.col(prev).dot(y) * out.vectors.col(prev);
      }
      x = y / y.norm();
    }
    out.vectors.col(idx) = x;
  }
  return out;
}

/// Implicit-shift QL on a symmetric tridiagonal matrix. Falls back to
/// bisection + inverse iteration when a sweep budget of 30 * dim is exhausted.
template <typename Scalar>
SymmetricEigen<Scalar> tridiagonal_eigen(const Tridiagonal<Scalar>& t, bool want_vectors = true,
                                         int sweeps_per_dim = 30) {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using std::abs;
  using std::hypot;
  const Eigen::Index n = t.size();
  SymmetricEigen<Scalar> out;
  Vec d = t.diagonal;
  Vec e = Vec::Zero(n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) e(i) = t.offdiagonal(i);
  Mat z;
  if (want_vectors) z = Mat::Identity(n, n);

  const long budget = static_cast<long>(sweeps_per_dim) * static_cast<long>(std::max<Eigen::Index>(n, 1));
  long iterations = 0;
  for (Eigen::Index l = 0; l < n; ++l) {
    for (;;) {
      Eigen::Index m = l;
      for (; m + 1 < n; ++m) {
        const Scalar dd = abs(d(m)) + abs(d(m + 1));
        if (abs(e(m)) <= std::numeric_limits<Scalar>::epsilon() * dd) break;
      }
      if (m == l) break;
      if (++iterations > budget) return bisection_eigen(t, want_vectors);
      Scalar g = (d(l + 1) - d(l)) / (Scalar(2) * e(l));
      Scalar r = hypot(g, Scalar(1));
      g = d(m) - d(l) + e(l) / (g + (g >= Scalar(0) ? abs(r) : -abs(r)));
      Scalar s(1), c(1), p(0);
      Eigen::Index i = m - 1;
      bool underflow = false;
      for (; i >= l; --i) {
        Scalar f = s * e(i);
        const Scalar b = c * e(i);
        r = hypot(f, g);
        e(i + 1) = r;
        if (r == Scalar(0)) {
          d(i + 1) -= p;
          e(m) = Scalar(0);
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d(i + 1) - p;
        r = (d(i) - g) * s + Scalar(2) * c * b;
        p = s * r;
        d(i + 1) = g + p;
        g = c * r - b;
        if (want_vectors) {
          for (Eigen::Index k = 0; k < n; ++k) {
            f = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * f;
            z(k, i) = c * z(k, i) - s * f;
          }
        }
        if (i == 0) {
          --i;
          break;
        }
      }
      if (underflow) continue;
      d(l) -= p;
      e(l) = g;
      e(m) = Scalar(0);
    }
  }
  out.values = d;
  if (want_vectors) out.vectors = z;
  detail::sort_eigenpairs(out);
  return out;
}

}  // namespace johnson
