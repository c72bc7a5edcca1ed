#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace johnson {

using Index = std::int64_t;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Error taxonomy. Invalid arguments use std::invalid_argument directly.

/// Raised when a dense construction would exceed the configured vertex cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A terminating series hit a vanishing denominator Pochhammer.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Numerical post-condition failure (grouping ambiguity, spectrum out of range).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Half-integer stored as twice its value, so parity checks stay exact.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
  static constexpr HalfInt from_int(int v) { return HalfInt{2 * v}; }

  constexpr double value() const { return 0.5 * twice; }
  constexpr bool is_integer() const { return twice % 2 == 0; }

  constexpr HalfInt operator+(HalfInt o) const { return {twice + o.twice}; }
  constexpr HalfInt operator-(HalfInt o) const { return {twice - o.twice}; }
  constexpr HalfInt operator-() const { return {-twice}; }
  constexpr HalfInt operator+(int v) const { return {twice + 2 * v}; }
  constexpr HalfInt operator-(int v) const { return {twice - 2 * v}; }

  constexpr auto operator<=>(const HalfInt&) const = default;
};

/// |a|, as a HalfInt.
constexpr HalfInt abs(HalfInt h) { return {h.twice < 0 ? -h.twice : h.twice}; }

/// Integer distance between two half-integers of equal parity; throws otherwise.
int integer_difference(HalfInt a, HalfInt b);

/// Decimal rendering: "3", "-1.5".
std::string to_string(HalfInt h);

/// Exact binomial coefficient C(n, r); 0 outside 0 <= r <= n. Throws on int64 overflow.
Index binomial(int n, int r);

/// Vertex cap for dense (oracle) constructions: JE_DENSE_CAP or 20,000.
Index default_dense_cap();

}  // namespace johnson
