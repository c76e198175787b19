#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace pmsched {

/// Exact rational with 64-bit numerator and denominator, always normalized
/// (den > 0, gcd(|num|, den) == 1).  Intermediates use 128-bit arithmetic;
/// construction throws std::overflow_error if a reduced value no longer fits.
/// Rate vectors configured as decimal strings stay exact through sums and
/// comparisons, which is what the region checks and the priority assignment
/// need to agree with exhaustive search to the last bit.
class Rational {
public:
  constexpr Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);

  /// Parses "0.165", ".5", "2", "-0.25" into the exact value.
  static Rational from_decimal(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const Rational& o) const;

  /// "33/200"; integral values render without the slash.
  std::string str() const;

private:
  long long num_ = 0;
  long long den_ = 1;
};

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.to_double(); }

}  // namespace pmsched
