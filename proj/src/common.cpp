#include "johnson/common.hpp"

#include <cstdlib>
#include <limits>

namespace johnson {

int integer_difference(HalfInt a, HalfInt b) {
  const int d = a.twice - b.twice;
  if (d % 2 != 0) {
    throw std::invalid_argument("half-integers of different parity: " + to_string(a) + ", " +
                                to_string(b));
  }
  return d / 2;
}

std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  std::string s = h.twice < 0 ? "-" : "";
  s += std::to_string(std::abs(h.twice) / 2) + ".5";
  return s;
}

Index binomial(int n, int r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  // C(n, i+1) = C(n, i) * (n - i) / (i + 1); the division is exact at every step.
  __int128 acc = 1;
  for (int i = 0; i < r; ++i) {
    acc = acc * (n - i) / (i + 1);
    if (acc > std::numeric_limits<Index>::max()) {
      throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(r) +
                                ") overflows int64");
    }
  }
  return static_cast<Index>(acc);
}

Index default_dense_cap() {
  if (const char* env = std::getenv("JE_DENSE_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return static_cast<Index>(v);
    throw std::invalid_argument(std::string("JE_DENSE_CAP is not a positive integer: ") + env);
  }
  return 20000;
}

}  // namespace johnson
