#include "templink/symbolic.hpp"

#include <algorithm>

namespace templink {

namespace {

// Smallest d dividing n with word == (word[0..d))^(n/d).
std::size_t primitive_period(std::span<const Letter> word) {
  const std::size_t n = word.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = word[i] == word[i - d];
    if (periodic) return d;
  }
  return n;
}

Word least_rotation(std::span<const Letter> word) {
  Word best(word.begin(), word.end());
  for (std::size_t k = 1; k < word.size(); ++k) {
    Word r = rotate(word, k);
    if (r < best) best = std::move(r);
  }
  return best;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == 'a') {
      out.push_back(Letter::a);
    } else if (c == 'b') {
      out.push_back(Letter::b);
    } else {
      throw WordError("word '" + std::string(text) + "' contains a letter outside {a,b}");
    }
  }
  return out;
}

std::string to_string(std::span<const Letter> word) {
  std::string s;
  s.reserve(word.size());
  for (Letter l : word) s.push_back(to_char(l));
  return s;
}

Word rotate(std::span<const Letter> word, std::size_t k) {
  Word out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) out.push_back(word[(i + k) % word.size()]);
  return out;
}

CyclicWord::CyclicWord(std::span<const Letter> letters) {
  if (letters.empty()) throw WordError("cyclic word must be nonempty");
  if (primitive_period(letters) != letters.size()) {
    throw WordError("word '" + to_string(letters) + "' is a proper power");
  }
  letters_ = least_rotation(letters);
}

CyclicWord CyclicWord::parse(std::string_view text) { return CyclicWord(parse_word(text)); }

Canonical canonicalize(std::span<const Letter> raw) {
  if (raw.empty()) throw WordError("cannot canonicalize the empty word");
  const std::size_t d = primitive_period(raw);
  return Canonical{CyclicWord(least_rotation(raw.first(d)), CyclicWord::Trusted{}), raw.size() / d};
}

Canonical canonicalize(std::string_view raw) { return canonicalize(parse_word(raw)); }

PeriodicSequence::PeriodicSequence(Word preperiod, Word period)
    : pre_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw WordError("periodic sequence needs a nonempty period");
  period_.resize(primitive_period(period_));
  // Fold the tail of the preperiod into the period while it repeats.
  while (!pre_.empty() && pre_.back() == period_.back()) {
    std::rotate(period_.begin(), period_.end() - 1, period_.end());
    pre_.pop_back();
  }
}

PeriodicSequence PeriodicSequence::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) return PeriodicSequence(parse_word(text));
  if (text.find('|', bar + 1) != std::string_view::npos) {
    throw WordError("sequence '" + std::string(text) + "' has more than one '|'");
  }
  return PeriodicSequence(parse_word(text.substr(0, bar)), parse_word(text.substr(bar + 1)));
}

Word PeriodicSequence::prefix(std::size_t n) const {
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

std::string PeriodicSequence::str() const { return to_string(pre_) + "|" + to_string(period_); }

std::strong_ordering compare(const PeriodicSequence& s, const PeriodicSequence& t) {
  // Past both preperiods the two tails are periodic with periods m and n;
  // if they agree on m + n letters they agree forever (Fine and Wilf).
  const std::size_t horizon = s.preperiod().size() + t.preperiod().size() +
                              s.period().size() + t.period().size();
  for (std::size_t i = 0; i < horizon; ++i) {
    const Letter x = s.at(i);
    const Letter y = t.at(i);
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

PeriodicSequence shift(const PeriodicSequence& s) {
  if (!s.preperiod().empty()) {
    return PeriodicSequence(Word(s.preperiod().begin() + 1, s.preperiod().end()), s.period());
  }
  return PeriodicSequence(rotate(s.period(), 1));
}

std::vector<PeriodicSequence> all_shifts(const CyclicWord& w) {
  std::vector<PeriodicSequence> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out.emplace_back(rotate(w.letters(), k));
  return out;
}

LetterCounts letter_counts(std::span<const Letter> word) {
  LetterCounts c;
  for (Letter l : word) (l == Letter::a ? c.a : c.b)++;
  return c;
}

}  // namespace templink
