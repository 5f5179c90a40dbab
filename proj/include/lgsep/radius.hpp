#pragma once

#include <cmath>
#include <cstdint>

#include "lgsep/errors.hpp"

namespace lgsep {

using i128 = __int128;

/// floor(sqrt(x)) for x >= 0, exact.
inline std::int64_t isqrt(std::int64_t x) {
  if (x < 0) throw ParameterError("isqrt of negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && static_cast<i128>(r) * r > x) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

/// A nonnegative real r held exactly through its square r^2 = sq_num / sq_den.
/// Covers both rational radii and the square-root radii used by the engine.
struct Radius {
  std::int64_t sq_num = 1;
  std::int64_t sq_den = 1;

  static Radius of_integer(std::int64_t r) { return {r * r, 1}; }
  static Radius of_ratio(std::int64_t a, std::int64_t b) {
    if (a < 0 || b <= 0) throw ParameterError("radius ratio must be nonnegative");
    return {a * a, b * b};
  }
  static Radius sqrt_of(std::int64_t num, std::int64_t den) {
    if (num < 0 || den <= 0) throw ParameterError("radius square must be nonnegative");
    return {num, den};
  }

  std::int64_t floor() const { return isqrt(sq_num / sq_den); }
  double value() const {
    return std::sqrt(static_cast<double>(sq_num) / static_cast<double>(sq_den));
  }
  bool at_least_one() const { return sq_num >= sq_den; }
  /// k <= r
  bool admits(std::int64_t k) const {
    return k >= 0 && static_cast<i128>(k) * k * sq_den <= static_cast<i128>(sq_num);
  }
  /// size <= numerator / r
  bool within_quotient(std::int64_t size, std::int64_t numerator) const {
    return static_cast<i128>(size) * size * sq_num <=
           static_cast<i128>(numerator) * numerator * sq_den;
  }
};

}  // namespace lgsep
