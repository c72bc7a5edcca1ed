#pragma once

#include <cstdint>
#include <vector>

#include "johnson/common.hpp"

namespace johnson {

/// The Johnson graph J(n, k): k-subsets of {1..n}, adjacent when they share k-1 elements.
class GraphSpec {
 public:
  /// Throws std::invalid_argument unless 1 <= k <= n/2 and n <= 62.
  GraphSpec(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int diameter() const { return k_; }
  Index vertex_count() const { return binomial(n_, k_); }

  /// Magnetic quantum number shared by every vertex, n/2 - k.
  HalfInt total_m() const { return HalfInt::from_twice(n_ - 2 * k_); }
  /// Spin of the first hypercube factor, (n-k)/2.
  HalfInt spin1() const { return HalfInt::from_twice(n_ - k_); }
  /// Spin of the second hypercube factor, k/2.
  HalfInt spin2() const { return HalfInt::from_twice(k_); }

  /// Energy labels j = n/2 - k, ..., n/2 in ascending order.
  std::vector<HalfInt> levels() const;

  bool operator==(const GraphSpec&) const = default;

 private:
  int n_;
  int k_;
};

/// A vertex of J(n, k) together with its colex rank.
struct Vertex {
  std::vector<int> subset;  // strictly increasing, elements in [1, n]
  Index index = 0;

  /// Bit (e-1) set for each element e.
  std::uint64_t mask() const;
};

/// Vertex for a subset; validates it and computes its colex rank.
Vertex make_vertex(std::vector<int> subset, const GraphSpec& spec);

/// The colex-first vertex {1, ..., k}.
Vertex first_vertex(const GraphSpec& spec);

Index colex_rank(const std::vector<int>& subset);
Vertex colex_unrank(Index rank, const GraphSpec& spec);

/// All C(n,k) vertices in colexicographic order. Throws CapacityError above `cap`.
std::vector<Vertex> enumerate_vertices(const GraphSpec& spec, Index cap = default_dense_cap());

/// d(x, y) = k - |x ∩ y|.
int distance(const Vertex& x, const Vertex& y, const GraphSpec& spec);

/// |Γ_i(x0)| = C(k,i) C(n-k,i), the size of the i-th neighborhood of any vertex.
Index neighborhood_size(const GraphSpec& spec, int i);

/// 0/1 distance-i matrix A_i in colex order.
Matrix adjacency_matrix(int i, const GraphSpec& spec, Index cap = default_dense_cap());

/// Diagonal A* relative to x0: entry n-1 - n(n-1)/(k(n-k)) d(x0, x).
Matrix dual_adjacency_matrix(const Vertex& x0, const GraphSpec& spec,
                             Index cap = default_dense_cap());

/// Diagonal 0/1 projector E*_i onto the vertices at distance i from x0.
Matrix neighborhood_projector(const Vertex& x0, int i, const GraphSpec& spec,
                              Index cap = default_dense_cap());

/// Distance to x0 of every vertex, in colex order.
std::vector<int> distances_from(const Vertex& x0, const GraphSpec& spec,
                                Index cap = default_dense_cap());

/// Indicator tuple v(x) in {0,1}^n of the hypercube embedding.
std::vector<int> embed_in_hypercube(const Vertex& x, const GraphSpec& spec);

int hamming_distance(const std::vector<int>& u, const std::vector<int>& v);

}  // namespace johnson
