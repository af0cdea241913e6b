#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace templink {

/// Thrown when an intermediate value leaves the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace checked {

inline std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_add_overflow(x, y, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_sub_overflow(x, y, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_mul_overflow(x, y, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

}  // namespace checked

/// Exact rational in lowest terms with positive denominator. Arithmetic is
/// checked and throws OverflowError instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  /// "n/d", or "n" when d = 1.
  std::string str() const;
  static Rational parse(const std::string& text);

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational operator-() const { return Rational(checked::sub(0, num_), den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace templink
