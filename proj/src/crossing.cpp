#include "templink/crossing.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace templink {

namespace {

// A position in one of several words; denotes σ^offset(word^∞).
struct Strand {
  std::span<const Letter> word;
  std::size_t offset;
};

int compare_strands(const Strand& s, const Strand& t) {
  const std::size_t n = s.word.size(), m = t.word.size();
  for (std::size_t k = 0; k < n + m; ++k) {
    const Letter x = s.word[(s.offset + k) % n];
    const Letter y = t.word[(t.offset + k) % m];
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

// Dense ranks; equal sequences share a rank.
std::vector<std::size_t> rank_strands(const std::vector<Strand>& strands) {
  std::vector<std::size_t> order(strands.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return compare_strands(strands[i], strands[j]) < 0;
  });
  std::vector<std::size_t> rank(strands.size());
  std::size_t current = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && compare_strands(strands[order[k - 1]], strands[order[k]]) != 0) ++current;
    rank[order[k]] = current;
  }
  return rank;
}

int sign(std::size_t x, std::size_t y) { return x < y ? -1 : (x > y ? 1 : 0); }

// Swap count between two rank blocks of lengths n and m.
long long count_swaps(const std::size_t* rx, std::size_t n, const std::size_t* ry, std::size_t m,
                      bool strict) {
  long long count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t i1 = i + 1 == n ? 0 : i + 1;
    for (std::size_t j = 0; j < m; ++j) {
      const int before = sign(rx[i], ry[j]);
      if (before == 0) {
        if (strict) throw std::logic_error("distinct orbits share a shift");
        continue;
      }
      const std::size_t j1 = j + 1 == m ? 0 : j + 1;
      if (before != sign(rx[i1], ry[j1])) ++count;
    }
  }
  return count;
}

long long crossing_impl(std::span<const Letter> x, std::span<const Letter> y, bool strict) {
  std::vector<Strand> strands;
  strands.reserve(x.size() + y.size());
  for (std::size_t i = 0; i < x.size(); ++i) strands.push_back({x, i});
  for (std::size_t j = 0; j < y.size(); ++j) strands.push_back({y, j});
  const auto rank = rank_strands(strands);
  return count_swaps(rank.data(), x.size(), rank.data() + x.size(), y.size(), strict);
}

}  // namespace

long long word_crossing(std::span<const Letter> x, std::span<const Letter> y) {
  if (x.empty() || y.empty()) throw WordError("crossing of an empty word");
  return crossing_impl(x, y, false);
}

long long crossing_number(const CyclicWord& w, const CyclicWord& w2) {
  if (w == w2) {
    throw std::invalid_argument("crossing_number needs distinct orbits; '" + w.str() +
                                "' given twice (use self_crossing)");
  }
  return crossing_impl(w.letters(), w2.letters(), true);
}

long long self_crossing(const CyclicWord& w) { return crossing_impl(w.letters(), w.letters(), false); }

long long pair_crossing(const CyclicWord& w, const CyclicWord& w2) {
  return w == w2 ? self_crossing(w) : crossing_number(w, w2);
}

CrossingTable::CrossingTable(std::vector<CyclicWord> words) : words_(std::move(words)) {
  if (std::set<CyclicWord>(words_.begin(), words_.end()).size() != words_.size()) {
    throw std::invalid_argument("CrossingTable needs distinct orbits");
  }
  std::vector<Strand> strands;
  offset_.reserve(words_.size() + 1);
  for (const auto& w : words_) {
    offset_.push_back(strands.size());
    for (std::size_t i = 0; i < w.size(); ++i) strands.push_back({w.letters(), i});
  }
  offset_.push_back(strands.size());
  rank_ = rank_strands(strands);
}

long long CrossingTable::crossing(std::size_t i, std::size_t j) const {
  const std::size_t* ri = rank_.data() + offset_.at(i);
  const std::size_t* rj = rank_.data() + offset_.at(j);
  return count_swaps(ri, words_[i].size(), rj, words_[j].size(), i != j);
}

bool is_cut(std::span<const Letter> u, std::span<const Letter> v) {
  if (u.empty() || v.empty() || u.back() != Letter::a || v.back() != Letter::b) return false;
  const PeriodicSequence lo{Word(u.begin(), u.end())};
  const PeriodicSequence hi{Word(v.begin(), v.end())};
  if (!(lo < hi)) return false;
  auto strictly_between = [&](std::span<const Letter> f) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      const PeriodicSequence s(rotate(f, k));
      if (lo < s && s < hi) return true;
    }
    return false;
  };
  return !strictly_between(u) && !strictly_between(v);
}

std::vector<Cut> enumerate_cuts(const CyclicWord& w) {
  std::vector<Cut> cuts;
  const std::size_t n = w.size();
  for (std::size_t rot = 0; rot < n; ++rot) {
    const Word z = rotate(w.letters(), rot);
    for (std::size_t k = 1; k < n; ++k) {
      const std::span<const Letter> u(z.data(), k);
      const std::span<const Letter> v(z.data() + k, n - k);
      if (is_cut(u, v)) cuts.push_back(Cut{Word(u.begin(), u.end()), Word(v.begin(), v.end()), rot, k});
    }
  }
  return cuts;
}

bool is_admissible_cut(const Cut& c, const KneadingData& k) {
  return is_admissible(c.u, k) && is_admissible(c.v, k);
}

}  // namespace templink
