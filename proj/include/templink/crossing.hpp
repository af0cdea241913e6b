#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "templink/kneading.hpp"
#include "templink/symbolic.hpp"

namespace templink {

/// Crossings of the orbits coded by x^∞ and y^∞ in the standard projection
/// of a Lorenz-type template, over the positions of the finite words.
///
/// Counts ordered pairs (i, j), 0 <= i < |x|, 0 <= j < |y|, for which the
/// order of σ^i(x^∞) and σ^j(y^∞) differs from the order of their images
/// under σ. Positions carrying the same sequence are parallel copies of one
/// strand and are skipped, so word_crossing(w, w) is twice the number of
/// double points of w and a proper power u^k contributes k copies of u.
long long word_crossing(std::span<const Letter> x, std::span<const Letter> y);

/// Crossing number of two distinct orbits. Throws std::invalid_argument
/// when w == w2 (use self_crossing).
long long crossing_number(const CyclicWord& w, const CyclicWord& w2);

/// Twice the number of double points of w (crossings with a translated copy).
long long self_crossing(const CyclicWord& w);

/// crossing_number for distinct words, self_crossing otherwise.
long long pair_crossing(const CyclicWord& w, const CyclicWord& w2);

/// Pairwise crossing numbers of a fixed set of distinct orbits. All shifts
/// are ranked once, after which each pair costs |w|·|w2| integer compares.
class CrossingTable {
 public:
  explicit CrossingTable(std::vector<CyclicWord> words);

  const std::vector<CyclicWord>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }

  /// pair_crossing(words()[i], words()[j]).
  long long crossing(std::size_t i, std::size_t j) const;

 private:
  std::vector<CyclicWord> words_;
  std::vector<std::size_t> offset_;  // start of word i's ranks in rank_
  std::vector<std::size_t> rank_;
};

/// A cut (u, v) of a cyclic word w: uv is the rotation of w starting at
/// `rotation`, split after `split` letters.
struct Cut {
  Word u;  // ends with a
  Word v;  // ends with b
  std::size_t rotation;
  std::size_t split;
};

/// All cuts of w: u ends with a, v ends with b, u^∞ < v^∞, and no shift of
/// u^∞ or v^∞ lies strictly between u^∞ and v^∞.
std::vector<Cut> enumerate_cuts(const CyclicWord& w);

/// True when (u, v) satisfies the three cut conditions.
bool is_cut(std::span<const Letter> u, std::span<const Letter> v);

/// Both factors code orbits of the template with kneading data k.
bool is_admissible_cut(const Cut& c, const KneadingData& k);

}  // namespace templink
