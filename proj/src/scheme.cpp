#include "johnson/scheme.hpp"

#include <bit>
#include <string>

namespace johnson {

namespace {

void check_cap(const GraphSpec& spec, Index cap) {
  const Index count = spec.vertex_count();
  if (count > cap) {
    throw CapacityError("J(" + std::to_string(spec.n()) + "," + std::to_string(spec.k()) +
                        ") has " + std::to_string(count) + " vertices, above the dense cap of " +
                        std::to_string(cap));
  }
}

std::vector<std::uint64_t> vertex_masks(const GraphSpec& spec, Index cap) {
  check_cap(spec, cap);
  std::vector<std::uint64_t> masks;
  masks.reserve(static_cast<std::size_t>(spec.vertex_count()));
  // Gosper's hack walks k-bit masks in increasing numeric order, which is colex order.
  const std::uint64_t limit = std::uint64_t{1} << spec.n();
  std::uint64_t v = (std::uint64_t{1} << spec.k()) - 1;
  while (v < limit) {
    masks.push_back(v);
    const std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
  }
  return masks;
}

int mask_distance(std::uint64_t a, std::uint64_t b, int k) {
  return k - std::popcount(a & b);
}

}  // namespace

GraphSpec::GraphSpec(int n, int k) : n_(n), k_(k) {
  if (k < 1 || 2 * k > n) {
    throw std::invalid_argument("J(n,k) requires 1 <= k <= n/2, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  }
  if (n > 62) throw std::invalid_argument("n > 62 is not supported");
}

std::vector<HalfInt> GraphSpec::levels() const {
  std::vector<HalfInt> out;
  for (int u = k_; u >= 0; --u) out.push_back(HalfInt::from_twice(n_ - 2 * u));
  return out;
}

std::uint64_t Vertex::mask() const {
  std::uint64_t m = 0;
  for (int e : subset) m |= std::uint64_t{1} << (e - 1);
  return m;
}

Index colex_rank(const std::vector<int>& subset) {
  Index r = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    r += binomial(subset[i] - 1, static_cast<int>(i) + 1);
  }
  return r;
}

Vertex colex_unrank(Index rank, const GraphSpec& spec) {
  if (rank < 0 || rank >= spec.vertex_count()) {
    throw std::out_of_range("vertex rank out of range: " + std::to_string(rank));
  }
  std::vector<int> subset(static_cast<std::size_t>(spec.k()));
  Index rest = rank;
  int hi = spec.n();
  for (int i = spec.k(); i >= 1; --i) {
    // Largest c with C(c-1, i) <= rest.
    int c = hi;
    while (binomial(c - 1, i) > rest) --c;
    subset[static_cast<std::size_t>(i - 1)] = c;
    rest -= binomial(c - 1, i);
    hi = c - 1;
  }
  return Vertex{std::move(subset), rank};
}

Vertex make_vertex(std::vector<int> subset, const GraphSpec& spec) {
  if (static_cast<int>(subset.size()) != spec.k()) {
    throw std::invalid_argument("vertex must have exactly k elements");
  }
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 1 || subset[i] > spec.n() || (i > 0 && subset[i] <= subset[i - 1])) {
      throw std::invalid_argument("vertex elements must be strictly increasing in [1, n]");
    }
  }
  const Index r = colex_rank(subset);
  return Vertex{std::move(subset), r};
}

Vertex first_vertex(const GraphSpec& spec) {
  std::vector<int> s(static_cast<std::size_t>(spec.k()));
  for (int i = 0; i < spec.k(); ++i) s[static_cast<std::size_t>(i)] = i + 1;
  return Vertex{std::move(s), 0};
}

std::vector<Vertex> enumerate_vertices(const GraphSpec& spec, Index cap) {
  const auto masks = vertex_masks(spec, cap);
  std::vector<Vertex> out;
  out.reserve(masks.size());
  for (std::size_t r = 0; r < masks.size(); ++r) {
    Vertex v;
    v.index = static_cast<Index>(r);
    for (int e = 0; e < spec.n(); ++e) {
      if ((masks[r] >> e) & 1U) v.subset.push_back(e + 1);
    }
    out.push_back(std::move(v));
  }
  return out;
}

int distance(const Vertex& x, const Vertex& y, const GraphSpec& spec) {
  return mask_distance(x.mask(), y.mask(), spec.k());
}

Index neighborhood_size(const GraphSpec& spec, int i) {
  if (i < 0 || i > spec.k()) return 0;
  return binomial(spec.k(), i) * binomial(spec.n() - spec.k(), i);
}

Matrix adjacency_matrix(int i, const GraphSpec& spec, Index cap) {
  if (i < 0 || i > spec.k()) {
    throw std::out_of_range("adjacency index out of range: " + std::to_string(i));
  }
  const auto masks = vertex_masks(spec, cap);
  const auto size = static_cast<Eigen::Index>(masks.size());
  Matrix a = Matrix::Zero(size, size);
  for (Eigen::Index r = 0; r < size; ++r) {
    for (Eigen::Index c = r; c < size; ++c) {
      if (mask_distance(masks[r], masks[c], spec.k()) == i) {
        a(r, c) = 1.0;
        a(c, r) = 1.0;
      }
    }
  }
  return a;
}

std::vector<int> distances_from(const Vertex& x0, const GraphSpec& spec, Index cap) {
  const auto masks = vertex_masks(spec, cap);
  const std::uint64_t m0 = x0.mask();
  std::vector<int> d(masks.size());
  for (std::size_t r = 0; r < masks.size(); ++r) d[r] = mask_distance(m0, masks[r], spec.k());
  return d;
}

Matrix dual_adjacency_matrix(const Vertex& x0, const GraphSpec& spec, Index cap) {
  const auto d = distances_from(x0, spec, cap);
  const double n = spec.n();
  const double k = spec.k();
  const double slope = n * (n - 1.0) / (k * (n - k));
  Vector diag(static_cast<Eigen::Index>(d.size()));
  for (std::size_t r = 0; r < d.size(); ++r) diag(static_cast<Eigen::Index>(r)) = n - 1.0 - slope * d[r];
  return diag.asDiagonal();
}

Matrix neighborhood_projector(const Vertex& x0, int i, const GraphSpec& spec, Index cap) {
  if (i < 0 || i > spec.k()) {
    throw std::out_of_range("neighborhood index out of range: " + std::to_string(i));
  }
  const auto d = distances_from(x0, spec, cap);
  Vector diag(static_cast<Eigen::Index>(d.size()));
  for (std::size_t r = 0; r < d.size(); ++r) diag(static_cast<Eigen::Index>(r)) = d[r] == i ? 1.0 : 0.0;
  return diag.asDiagonal();
}

std::vector<int> embed_in_hypercube(const Vertex& x, const GraphSpec& spec) {
  std::vector<int> v(static_cast<std::size_t>(spec.n()), 0);
  for (int e : x.subset) v[static_cast<std::size_t>(e - 1)] = 1;
  return v;
}

int hamming_distance(const std::vector<int>& u, const std::vector<int>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("tuples of different length");
  int d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i] ? 1 : 0;
  return d;
}

}  // namespace johnson
