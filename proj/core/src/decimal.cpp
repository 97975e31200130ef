#include "fashion/decimal.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

#include "fashion/errors.hpp"

namespace fashion {

namespace {

std::int64_t pow10_i64(std::int32_t k) {
  std::int64_t v = 1;
  for (std::int32_t i = 0; i < k; ++i) {
    if (v > INT64_MAX / 10) throw ParameterError("decimal overflow");
    v *= 10;
  }
  return v;
}

// rescale both to a common exponent
void align(const Decimal& a, const Decimal& b, std::int64_t& da, std::int64_t& db) {
  std::int32_t e = std::min(a.exponent(), b.exponent());
  da = a.digits() * pow10_i64(a.exponent() - e);
  db = b.digits() * pow10_i64(b.exponent() - e);
}

}  // namespace

Decimal::Decimal(std::int64_t digits, std::int32_t exponent)
    : digits_(digits), exponent_(exponent) {
  normalize();
}

void Decimal::normalize() {
  if (digits_ == 0) {
    exponent_ = 0;
    return;
  }
  while (digits_ % 10 == 0) {
    digits_ /= 10;
    ++exponent_;
  }
}

Decimal Decimal::parse(const std::string& text) {
  if (text.empty()) throw ParameterError("empty decimal value");
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  std::int64_t digits = 0;
  std::int32_t frac_digits = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_point) throw ParameterError("malformed decimal: " + text);
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParameterError("malformed decimal: " + text);
    if (digits > (INT64_MAX - 9) / 10) throw ParameterError("decimal overflow: " + text);
    digits = digits * 10 + (c - '0');
    seen_digit = true;
    if (seen_point) ++frac_digits;
  }
  if (!seen_digit) throw ParameterError("malformed decimal: " + text);
  if (negative) digits = -digits;
  return Decimal(digits, -frac_digits);
}

double Decimal::to_double() const {
  // digits < 2^53 and |exponent| small in practice; both factors exact
  if (exponent_ >= 0) return static_cast<double>(digits_) * std::pow(10.0, exponent_);
  return static_cast<double>(digits_) / std::pow(10.0, -exponent_);
}

std::string Decimal::to_string() const {
  std::int64_t d = digits_;
  bool negative = d < 0;
  std::string body = std::to_string(negative ? -d : d);
  std::string out;
  if (exponent_ >= 0) {
    out = body + std::string(exponent_, '0');
  } else {
    std::int32_t frac = -exponent_;
    if (static_cast<std::int32_t>(body.size()) <= frac)
      body.insert(0, frac - body.size() + 1, '0');
    out = body.substr(0, body.size() - frac) + "." + body.substr(body.size() - frac);
  }
  return negative ? "-" + out : out;
}

Decimal Decimal::operator+(const Decimal& other) const {
  std::int64_t da, db;
  align(*this, other, da, db);
  return Decimal(da + db, std::min(exponent_, other.exponent_));
}

bool Decimal::operator==(const Decimal& other) const {
  return digits_ == other.digits_ && exponent_ == other.exponent_;
}

bool Decimal::operator<(const Decimal& other) const {
  std::int64_t da, db;
  align(*this, other, da, db);
  return da < db;
}

std::vector<Decimal> parse_decimal_list(const std::string& text) {
  std::vector<Decimal> values;
  if (text.find(':') != std::string::npos) {
    // inclusive range a:b:step
    auto p1 = text.find(':');
    auto p2 = text.find(':', p1 + 1);
    if (p2 == std::string::npos) throw ParameterError("range needs a:b:step, got: " + text);
    Decimal a = Decimal::parse(text.substr(0, p1));
    Decimal b = Decimal::parse(text.substr(p1 + 1, p2 - p1 - 1));
    Decimal step = Decimal::parse(text.substr(p2 + 1));
    if (!(Decimal::from_int(0) < step)) throw ParameterError("range step must be > 0: " + text);
    for (Decimal v = a; v <= b; v = v + step) values.push_back(v);
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto comma = text.find(',', start);
      auto end = comma == std::string::npos ? text.size() : comma;
      values.push_back(Decimal::parse(text.substr(start, end - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  std::sort(values.begin(), values.end(),
            [](const Decimal& x, const Decimal& y) { return x < y; });
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty()) throw ParameterError("empty value list: " + text);
  return values;
}

}  // namespace fashion
