#include "templink/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <set>
#include <thread>

namespace templink {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void append(Word& w, Letter l, int times) {
  for (int n = 0; n < times; ++n) w.push_back(l);
}

void append(Word& w, const Word& block, int times) {
  for (int n = 0; n < times; ++n) w.insert(w.end(), block.begin(), block.end());
}

Word power_syllable(int i, int j) {
  Word w;
  append(w, Letter::a, i);
  append(w, Letter::b, j);
  return w;
}

// Longest run of consecutive maximal `first`-syllables x^{n}y^{1}, where x
// is `first` and y the other letter, read cyclically.
std::size_t block_run(std::span<const Letter> word, Letter first, std::size_t n) {
  const Letter other = first == Letter::a ? Letter::b : Letter::a;
  const std::size_t len = word.size();
  std::size_t start = len;
  for (std::size_t s = 0; s < len; ++s) {
    if (word[s] == first && word[(s + len - 1) % len] == other) {
      start = s;
      break;
    }
  }
  if (start == len) return 0;  // single-letter word
  // syllables x^i y^j starting at `start`
  std::vector<std::pair<std::size_t, std::size_t>> syllables;
  std::size_t pos = 0;
  while (pos < len) {
    std::size_t i = 0, j = 0;
    while (pos < len && word[(start + pos) % len] == first) ++i, ++pos;
    while (pos < len && word[(start + pos) % len] == other) ++j, ++pos;
    syllables.emplace_back(i, j);
  }
  const auto is_block = [&](const auto& s) { return s.first == n && s.second == 1; };
  if (std::all_of(syllables.begin(), syllables.end(), is_block)) {
    return std::numeric_limits<std::size_t>::max();
  }
  std::size_t best = 0, run = 0;
  for (std::size_t k = 0; k < 2 * syllables.size(); ++k) {
    run = is_block(syllables[k % syllables.size()]) ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

// True when the finite prefix already places the sequence below lo or above hi.
bool prefix_violates(std::span<const Letter> partial, const PeriodicSequence& lo,
                     const PeriodicSequence& hi) {
  for (std::size_t k = 0; k < partial.size(); ++k) {
    const Letter x = partial[k], y = lo.at(k);
    if (x != y) {
      if (x < y) return true;
      break;
    }
  }
  for (std::size_t k = 0; k < partial.size(); ++k) {
    const Letter x = partial[k], y = hi.at(k);
    if (x != y) return x > y;
  }
  return false;
}

struct Enumerator {
  const Triple& t;
  const KneadingData& kd;
  std::size_t max_len;
  std::vector<CyclicWord>& out;
  Word w;

  bool prefix_ok() const {
    const std::size_t n = w.size();
    // linear run lengths
    std::size_t run = 1;
    for (std::size_t i = n - 1; i > 0 && w[i - 1] == w[n - 1]; --i) ++run;
    const std::size_t limit = w[n - 1] == Letter::a ? t.p() - 1 : t.q() - 1;
    if (run > limit) return false;
    for (std::size_t s = 0; s < n; ++s) {
      const std::span<const Letter> partial(w.data() + s, n - s);
      const bool bad = partial[0] == Letter::a ? prefix_violates(partial, kd.u_left, kd.u_right)
                                               : prefix_violates(partial, kd.v_left, kd.v_right);
      if (bad) return false;
    }
    return true;
  }

  void emit() {
    if (w.size() < 2 || std::find(w.begin(), w.end(), Letter::b) == w.end()) return;
    const Canonical c = canonicalize(w);
    if (c.power != 1 || c.root.letters() != w) return;
    if (!satisfies_block_constraints(w, t)) return;
    if (is_admissible(w, kd)) out.push_back(c.root);
  }

  void run() {
    emit();
    if (w.size() == max_len) return;
    for (Letter l : {Letter::a, Letter::b}) {
      w.push_back(l);
      if (prefix_ok()) run();
      w.pop_back();
    }
  }
};

}  // namespace

std::size_t max_block_repeat(std::span<const Letter> word, int p, int q) {
  return std::max(block_run(word, Letter::a, static_cast<std::size_t>(p - 1)),
                  block_run(word, Letter::b, static_cast<std::size_t>(q - 1)));
}

bool satisfies_block_constraints(std::span<const Letter> word, const Triple& t) {
  const BlockConstraints c = max_block_constraints(t);
  return longest_cyclic_run(word, Letter::a) <= static_cast<std::size_t>(c.max_run_a) &&
         longest_cyclic_run(word, Letter::b) <= static_cast<std::size_t>(c.max_run_b) &&
         max_block_repeat(word, t.p(), t.q()) <= static_cast<std::size_t>(c.max_syllable_repeat);
}

std::vector<CyclicWord> enumerate_admissible(const Triple& t, std::size_t max_len) {
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  const KneadingData kd = kneading(t);
  std::vector<CyclicWord> out;
  Enumerator e{t, kd, max_len, out, Word{Letter::a}};
  if (e.prefix_ok()) e.run();
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::rot_p: return "rotP";
    case FamilyTag::rot_q: return "rotQ";
    case FamilyTag::mixed: return "mixed";
  }
  return "?";
}

Word ExtremalFamily::word(const Triple& t) const {
  const Word p_block = power_syllable(t.p() - 1, 1);
  const Word q_block = power_syllable(1, t.q() - 1);
  Word w;
  switch (tag) {
    case FamilyTag::rot_p:
      append(w, p_block, k);
      append(w, power_syllable(i, j), 1);
      break;
    case FamilyTag::rot_q:
      append(w, q_block, k);
      append(w, power_syllable(i, j), 1);
      break;
    case FamilyTag::mixed:
      append(w, p_block, k);
      append(w, q_block, l);
      break;
  }
  return w;
}

std::string ExtremalFamily::str() const {
  if (tag == FamilyTag::mixed) {
    return "mixed(k=" + std::to_string(k) + ",l=" + std::to_string(l) + ")";
  }
  return to_string(tag) + "(i=" + std::to_string(i) + ",j=" + std::to_string(j) +
         ",k=" + std::to_string(k) + ")";
}

bool has_extremal_census(const Triple& t) {
  if (t.p() >= 3) return true;
  return in_table_domain(t) && t.q() % 2 == 1 && t.r() % 2 == 1;
}

std::vector<ExtremalFamily> extremal_families(const Triple& t) {
  if (!has_extremal_census(t)) {
    throw DomainError("no extremal census for " + t.str() +
                      ": p = 2 requires q and r odd (even cases follow from a double cover)");
  }
  const int p = t.p(), q = t.q(), r = t.r();
  std::vector<ExtremalFamily> out;
  if (p >= 3) {
    const int k_max = (r - 2) / 2;
    for (FamilyTag tag : {FamilyTag::rot_p, FamilyTag::rot_q}) {
      for (int i = 1; i <= p - 1; ++i) {
        for (int j = 1; j <= q - 1; ++j) {
          if ((i == 1 && j == q - 1) || (i == p - 1 && j == 1)) continue;
          for (int k = 0; k <= k_max; ++k) out.push_back({tag, i, j, k, 0});
        }
      }
    }
    for (int k = 1; k <= k_max; ++k)
      for (int l = 1; l <= k_max; ++l) out.push_back({FamilyTag::mixed, 0, 0, k, l});
  } else {
    const int k_max = (r - 3) / 2;
    for (FamilyTag tag : {FamilyTag::rot_p, FamilyTag::rot_q}) {
      for (int j = 2; j <= q - 2; ++j)
        for (int k = 0; k <= k_max; ++k) out.push_back({tag, 1, j, k, 0});
    }
    for (int k = 1; k <= k_max; ++k)
      for (int l = 1; l <= k_max; ++l) out.push_back({FamilyTag::mixed, 0, 0, k, l});
  }
  return out;
}

std::vector<CyclicWord> extremal_orbits(const Triple& t) {
  std::set<CyclicWord> words;
  for (const auto& f : extremal_families(t)) words.insert(canonicalize(f.word(t)).root);
  return {words.begin(), words.end()};
}

bool has_admissible_cut(const CyclicWord& w, const KneadingData& k) {
  const auto cuts = enumerate_cuts(w);
  return std::any_of(cuts.begin(), cuts.end(), [&](const Cut& c) { return is_admissible_cut(c, k); });
}

std::vector<PairReport> verify_pairs(const Triple& t, const std::vector<CyclicWord>& words,
                                     bool include_self) {
  std::vector<CyclicWord> distinct;
  std::set<CyclicWord> seen;
  for (const auto& w : words)
    if (seen.insert(w).second) distinct.push_back(w);

  const CrossingTable table(distinct);
  std::vector<LetterCounts> counts;
  counts.reserve(distinct.size());
  for (const auto& w : distinct) counts.push_back(letter_counts(w));

  std::vector<PairReport> out;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = include_self ? i : i + 1; j < distinct.size(); ++j) {
      const long long cr = table.crossing(i, j);
      const Rational lk = template_linking(t, cr, counts[i], counts[j]);
      out.push_back(PairReport{distinct[i], distinct[j], cr, counts[i], counts[j], lk, lk < Rational(0)});
    }
  }
  return out;
}

std::vector<Triple> verification_triples(int p_max, int q_max, int r_max) {
  std::vector<Triple> out;
  for (int p = 2; p <= p_max; ++p) {
    for (int q = p; q <= q_max; ++q) {
      for (int r = q; r <= r_max; ++r) {
        if (!is_hyperbolic(p, q, r)) continue;
        const Triple t(p, q, r);
        if (in_table_domain(t) && has_extremal_census(t)) out.push_back(t);
      }
    }
  }
  return out;
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

namespace {

TripleSummary verify_one(const Triple& t) {
  const auto start = Clock::now();
  TripleSummary s{t, 0, 0, 0, std::nullopt, {}, 0.0};
  const auto words = extremal_orbits(t);
  const auto reports = verify_pairs(t, words, true);
  s.words = words.size();
  s.pairs = reports.size();
  for (const auto& r : reports) {
    if (!r.negative) {
      ++s.violations;
      s.violating.push_back(r);
    }
    if (!s.worst || s.worst->lk < r.lk) s.worst = r;
  }
  s.seconds = seconds_since(start);
  return s;
}

}  // namespace

RangeSummary verify_triples(const std::vector<Triple>& triples, unsigned jobs) {
  const auto start = Clock::now();
  std::vector<std::optional<TripleSummary>> slots(triples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < triples.size(); i = next++) slots[i] = verify_one(triples[i]);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(triples.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < n; ++w) pool.emplace_back(worker);
    worker();
  }

  RangeSummary summary;
  for (auto& slot : slots) {
    TripleSummary& s = *slot;
    summary.pairs += s.pairs;
    summary.violations += s.violations;
    if (s.worst && (!summary.worst || summary.worst->lk < s.worst->lk)) {
      summary.worst = s.worst;
      summary.worst_triple = s.triple;
    }
    summary.triples.push_back(std::move(s));
  }
  summary.seconds = seconds_since(start);
  return summary;
}

RangeSummary verify_range(int p_max, int q_max, int r_max, unsigned jobs) {
  return verify_triples(verification_triples(p_max, q_max, r_max), jobs);
}

ExtremalCrossCheck cross_check_extremal(const Triple& t, std::size_t max_len) {
  ExtremalCrossCheck out{t, max_len, {}, {}, {}, {}, {}};
  const KneadingData kd = kneading(t);
  for (const auto& w : extremal_orbits(t)) {
    if (w.size() > max_len) continue;
    out.formula.push_back(w);
    if (!is_admissible(w, kd)) out.non_admissible.push_back(w);
  }
  for (const auto& w : enumerate_admissible(t, max_len)) {
    if (!has_admissible_cut(w, kd)) out.census.push_back(w);
  }
  std::set_difference(out.formula.begin(), out.formula.end(), out.census.begin(), out.census.end(),
                      std::back_inserter(out.formula_only));
  std::set_difference(out.census.begin(), out.census.end(), out.formula.begin(), out.formula.end(),
                      std::back_inserter(out.census_only));
  return out;
}

}  // namespace templink
