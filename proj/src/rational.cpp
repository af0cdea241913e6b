#include "templink/rational.hpp"

#include <charconv>
#include <numeric>

namespace templink {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = checked::sub(0, n);
    d = checked::sub(0, d);
  }
  const std::int64_t g = std::gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
    return v;
  };
  const std::string_view sv(text);
  const auto slash = sv.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(sv));
  return Rational(parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1)));
}

Rational operator+(const Rational& x, const Rational& y) {
  const std::int64_t g = std::gcd(x.den_, y.den_);
  const std::int64_t yd = y.den_ / g;
  return Rational(checked::add(checked::mul(x.num_, yd), checked::mul(y.num_, x.den_ / g)),
                  checked::mul(x.den_, yd));
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
  const std::int64_t g1 = std::gcd(x.num_, y.den_);
  const std::int64_t g2 = std::gcd(y.num_, x.den_);
  return Rational(checked::mul(x.num_ / g1, y.num_ / g2), checked::mul(x.den_ / g2, y.den_ / g1));
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) throw std::domain_error("division by zero rational");
  return x * Rational(y.den_, y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  return checked::mul(x.num_, y.den_) <=> checked::mul(y.num_, x.den_);
}

}  // namespace templink
