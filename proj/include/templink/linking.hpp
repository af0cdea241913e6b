#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "templink/kneading.hpp"
#include "templink/rational.hpp"
#include "templink/symbolic.hpp"

namespace templink {

/// Linking numbers of a link with the components H1, H2, H3 of the positive
/// Hopf link in S³.
struct HopfLinkingVector {
  std::int64_t l1 = 0;
  std::int64_t l2 = 0;
  std::int64_t l3 = 0;
};

using Matrix3 = std::array<std::array<std::int64_t, 3>, 3>;

/// Order of H1 of the unit tangent bundle: pqr - pq - qr - pr.
std::int64_t delta(const Triple& t);

/// (qr-q-r)uu' - r uv' - r vu' + (pr-p-r)vv'.
std::int64_t q_form(const Triple& t, LetterCounts x, LetterCounts y);

/// Symmetric matrix of the surgery correction form:
///   [qr-q-r, r, q; r, pr-p-r, p; q, p, pq-p-q].
Matrix3 qprime_matrix(const Triple& t);

std::int64_t qprime_form(const Triple& t, const HopfLinkingVector& x, const HopfLinkingVector& y);

/// Linking number in the unit tangent bundle of two links of S³ that avoid
/// the Hopf link: lk_S3 + Q'(x, y) / Δ.
Rational surgery_linking(const Triple& t, const Rational& lk_s3, const HopfLinkingVector& x,
                         const HopfLinkingVector& y);

/// Linking vector of a template orbit: (-#a, #b, 0).
HopfLinkingVector hopf_vector(LetterCounts counts);

/// Linking number of two template orbits: -cr/2 + Q(counts, counts')/Δ.
/// Equal words use the translated-copy convention for cr. Words need not be
/// admissible.
Rational template_linking(const Triple& t, const CyclicWord& w, const CyclicWord& w2);

/// Same formula from precomputed ingredients.
Rational template_linking(const Triple& t, long long crossings, LetterCounts x, LetterCounts y);

/// Word-level variant for formal words (powers allowed), using word_crossing.
Rational word_linking(const Triple& t, std::span<const Letter> x, std::span<const Letter> y);

/// |(n-2) Π p_i - Σ_i Π_{j≠i} p_j|. Throws DomainError for n < 3 or orders < 2.
std::int64_t homology_order(std::span<const std::int64_t> cone_orders);

/// Linking number of two regular fibers, -1/χ = pqr/Δ.
Rational fiber_linking(const Triple& t);

}  // namespace templink
