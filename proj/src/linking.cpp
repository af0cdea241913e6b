#include "templink/linking.hpp"

#include "templink/crossing.hpp"

namespace templink {

using checked::add;
using checked::mul;
using checked::sub;

std::int64_t delta(const Triple& t) { return t.delta(); }

std::int64_t q_form(const Triple& t, LetterCounts x, LetterCounts y) {
  const std::int64_t p = t.p(), q = t.q(), r = t.r();
  const std::int64_t aa = mul(mul(q * r - q - r, x.a), y.a);
  const std::int64_t ab = mul(mul(r, x.a), y.b);
  const std::int64_t ba = mul(mul(r, x.b), y.a);
  const std::int64_t bb = mul(mul(p * r - p - r, x.b), y.b);
  return add(sub(sub(aa, ab), ba), bb);
}

Matrix3 qprime_matrix(const Triple& t) {
  const std::int64_t p = t.p(), q = t.q(), r = t.r();
  return Matrix3{{{q * r - q - r, r, q}, {r, p * r - p - r, p}, {q, p, p * q - p - q}}};
}

std::int64_t qprime_form(const Triple& t, const HopfLinkingVector& x, const HopfLinkingVector& y) {
  const Matrix3 m = qprime_matrix(t);
  const std::array<std::int64_t, 3> xv{x.l1, x.l2, x.l3}, yv{y.l1, y.l2, y.l3};
  std::int64_t sum = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sum = add(sum, mul(mul(xv[i], m[i][j]), yv[j]));
  return sum;
}

Rational surgery_linking(const Triple& t, const Rational& lk_s3, const HopfLinkingVector& x,
                         const HopfLinkingVector& y) {
  return lk_s3 + Rational(qprime_form(t, x, y), t.delta());
}

HopfLinkingVector hopf_vector(LetterCounts counts) { return {-counts.a, counts.b, 0}; }

Rational template_linking(const Triple& t, long long crossings, LetterCounts x, LetterCounts y) {
  return Rational(-crossings, 2) + Rational(q_form(t, x, y), t.delta());
}

Rational template_linking(const Triple& t, const CyclicWord& w, const CyclicWord& w2) {
  return template_linking(t, pair_crossing(w, w2), letter_counts(w), letter_counts(w2));
}

Rational word_linking(const Triple& t, std::span<const Letter> x, std::span<const Letter> y) {
  return template_linking(t, word_crossing(x, y), letter_counts(x), letter_counts(y));
}

std::int64_t homology_order(std::span<const std::int64_t> cone_orders) {
  const std::size_t n = cone_orders.size();
  if (n < 3) throw DomainError("homology order needs at least 3 cone points");
  for (auto p : cone_orders) {
    if (p < 2) throw DomainError("cone orders must be >= 2");
  }
  std::int64_t product = 1;
  for (auto p : cone_orders) product = mul(product, p);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t partial = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) partial = mul(partial, cone_orders[j]);
    sum = add(sum, partial);
  }
  const std::int64_t value = sub(mul(static_cast<std::int64_t>(n) - 2, product), sum);
  return value < 0 ? -value : value;
}

Rational fiber_linking(const Triple& t) {
  const std::int64_t pqr = mul(mul(t.p(), t.q()), t.r());
  return Rational(pqr, t.delta());
}

}  // namespace templink
