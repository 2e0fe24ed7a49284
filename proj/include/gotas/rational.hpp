#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gotas {

/// Exact non-negative rational. Accuracies are cardinality ratios, so exact
/// comparison matters and the magnitudes stay tiny.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
    if (num < 0) throw std::invalid_argument("rational numerator must be non-negative");
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
  bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace gotas
