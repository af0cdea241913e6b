#pragma once

#include <stdexcept>
#include <string>

#include "templink/symbolic.hpp"

namespace templink {

/// Raised when surgery parameters violate a precondition (ordering,
/// hyperbolicity, or the domain covered by the kneading table).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cone orders (p, q, r) of a hyperbolic 3-conic sphere, with
/// 2 <= p <= q <= r and 1/p + 1/q + 1/r < 1.
class Triple {
 public:
  Triple(int p, int q, int r);

  int p() const { return p_; }
  int q() const { return q_; }
  int r() const { return r_; }

  /// pqr - pq - qr - pr, always >= 1.
  long long delta() const;
  std::string str() const;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;

 private:
  int p_, q_, r_;
};

bool is_hyperbolic(int p, int q, int r);

/// Boundary sequences of the two ribbons: u_L, u_R bound the a-ribbon and
/// v_L, v_R bound the b-ribbon.
struct KneadingData {
  PeriodicSequence u_left;
  PeriodicSequence u_right;
  PeriodicSequence v_left;
  PeriodicSequence v_right;
};

/// True when the kneading table covers t: p >= 3, or p = 2 with q > 2 and r > 4.
bool in_table_domain(const Triple& t);

/// Throws DomainError outside the table domain.
KneadingData kneading(const Triple& t);

/// Bounds of the full Lorenz template (a^∞, ab^∞, ba^∞, b^∞): every word is
/// admissible.
KneadingData lorenz_kneading();

/// Kneading data for the open manifold (r infinite). Not usable for linking.
KneadingData kneading_open(int p, int q);

/// Every shift starting with a lies in [u_L, u_R] and every shift starting
/// with b in [v_L, v_R]; bounds inclusive.
bool is_admissible(const CyclicWord& w, const KneadingData& k);

/// Word-level variant: admissibility of the orbit coded by word^∞.
bool is_admissible(std::span<const Letter> word, const KneadingData& k);

struct BlockConstraints {
  int max_run_a;
  int max_run_b;
  int max_syllable_repeat;
  friend bool operator==(const BlockConstraints&, const BlockConstraints&) = default;
};

/// (p-1, q-1, floor((r-2)/2)): necessary conditions on admissible words.
BlockConstraints max_block_constraints(const Triple& t);

/// Longest cyclic run of `l` in `word` (word.size() when the word is all `l`).
std::size_t longest_cyclic_run(std::span<const Letter> word, Letter l);

}  // namespace templink
