#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fashion {

/// Exact decimal number: digits * 10^exponent. Parameter grids (r, p, q) are
/// expanded with integer arithmetic so that values like 0.85 round-trip to
/// text without floating drift.
class Decimal {
 public:
  Decimal() = default;
  Decimal(std::int64_t digits, std::int32_t exponent);

  /// Parse "0.85", "1", ".5", "0.805". Throws ParameterError on junk.
  static Decimal parse(const std::string& text);

  static Decimal from_int(std::int64_t value) { return Decimal(value, 0); }

  double to_double() const;
  std::string to_string() const;

  Decimal operator+(const Decimal& other) const;
  bool operator==(const Decimal& other) const;
  bool operator<(const Decimal& other) const;
  bool operator<=(const Decimal& other) const { return *this < other || *this == other; }

  std::int64_t digits() const { return digits_; }
  std::int32_t exponent() const { return exponent_; }

 private:
  void normalize();

  std::int64_t digits_ = 0;
  std::int32_t exponent_ = 0;  // canonical form: digits not divisible by 10, or digits == 0
};

/// Expand "a:b:step" (inclusive), "x,y,z", or a single value into a sorted,
/// deduplicated grid.
std::vector<Decimal> parse_decimal_list(const std::string& text);

}  // namespace fashion
