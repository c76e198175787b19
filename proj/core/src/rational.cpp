#include "pmsched/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "pmsched/errors.hpp"

namespace pmsched {

namespace {

using i128 = __int128;

long long checked_narrow(i128 v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("Rational: value out of 64-bit range");
  }
  return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Reduced {
  long long num;
  long long den;
};

Reduced reduce(i128 num, i128 den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {checked_narrow(num), checked_narrow(den)};
}

Rational make_reduced(i128 num, i128 den) {
  const Reduced r = reduce(num, den);
  return Rational(r.num, r.den);
}

}  // namespace

Rational::Rational(long long num, long long den) {
  const Reduced r = reduce(num, den);
  num_ = r.num;
  den_ = r.den;
}

Rational Rational::from_decimal(std::string_view text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  long long num = 0;
  long long den = 1;
  bool any_digit = false;
  bool seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (seen_dot) throw ParseError("bad rate literal: " + std::string(text));
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("bad rate literal: " + std::string(text));
    }
    any_digit = true;
    i128 n = i128(num) * 10 + (c - '0');
    num = checked_narrow(n);
    if (seen_dot) den = checked_narrow(i128(den) * 10);
  }
  if (!any_digit) throw ParseError("bad rate literal: " + std::string(text));
  return Rational(neg ? -num : num, den);
}

Rational Rational::operator+(const Rational& o) const {
  return make_reduced(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return make_reduced(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return make_reduced(i128(num_) * o.num_, i128(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
  return make_reduced(i128(num_) * o.den_, i128(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  i128 lhs = i128(num_) * o.den_;
  i128 rhs = i128(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace pmsched
