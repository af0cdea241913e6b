#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace templink {

/// Ribbon label. The left ribbon (a) precedes the right ribbon (b) on the
/// branch line, so a < b.
enum class Letter : char { a = 'a', b = 'b' };

using Word = std::vector<Letter>;

/// Raised for malformed words and sequences.
class WordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Word parse_word(std::string_view text);
std::string to_string(std::span<const Letter> word);

inline constexpr char to_char(Letter l) { return static_cast<char>(l); }

// Rotation of `word` starting at index k.
Word rotate(std::span<const Letter> word, std::size_t k);

struct Canonical;
Canonical canonicalize(std::span<const Letter> raw);

/// A primitive cyclic word over {a, b}, stored as its least rotation.
class CyclicWord {
 public:
  /// Builds from a word that must already be primitive; any rotation is
  /// accepted. Throws WordError on empty or non-primitive input.
  explicit CyclicWord(std::span<const Letter> letters);
  static CyclicWord parse(std::string_view text);

  const Word& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::string str() const { return to_string(letters_); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& x, const CyclicWord& y) {
    // shortlex: shorter words first, then lexicographic
    if (x.size() != y.size()) return x.size() <=> y.size();
    return x.letters_ <=> y.letters_;
  }

 private:
  struct Trusted {};
  CyclicWord(Word canonical, Trusted) : letters_(std::move(canonical)) {}
  friend Canonical canonicalize(std::span<const Letter> raw);

  Word letters_;
};

/// Result of canonicalize: primitive root in least rotation and the
/// exponent of the input as a power of that root.
struct Canonical {
  CyclicWord root;
  std::size_t power;
};

Canonical canonicalize(std::string_view raw);

/// Eventually periodic one-sided sequence pre·period^∞. The preperiod is
/// kept as short as possible and the period is primitive.
class PeriodicSequence {
 public:
  PeriodicSequence(Word preperiod, Word period);
  /// Pure periodic sequence w^∞.
  explicit PeriodicSequence(Word period) : PeriodicSequence(Word{}, std::move(period)) {}
  /// Parses "pre|period"; an empty preperiod may be written "|ab".
  static PeriodicSequence parse(std::string_view text);

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return period_; }

  Letter at(std::size_t i) const {
    return i < pre_.size() ? pre_[i] : period_[(i - pre_.size()) % period_.size()];
  }
  Letter front() const { return at(0); }

  /// Prefix of length n.
  Word prefix(std::size_t n) const;
  std::string str() const;

  friend bool operator==(const PeriodicSequence&, const PeriodicSequence&) = default;

 private:
  Word pre_;
  Word period_;
};

/// Lexicographic order with a < b. Equal only for letterwise identical
/// sequences; decided within |pre(s)| + |pre(t)| + |period(s)| + |period(t)|
/// letters.
std::strong_ordering compare(const PeriodicSequence& s, const PeriodicSequence& t);

inline bool operator<(const PeriodicSequence& s, const PeriodicSequence& t) {
  return compare(s, t) < 0;
}

PeriodicSequence shift(const PeriodicSequence& s);

/// σ^k(w^∞) for k = 0..|w|-1, in phase order.
std::vector<PeriodicSequence> all_shifts(const CyclicWord& w);

struct LetterCounts {
  long long a = 0;
  long long b = 0;
  friend bool operator==(const LetterCounts&, const LetterCounts&) = default;
};

LetterCounts letter_counts(std::span<const Letter> word);
inline LetterCounts letter_counts(const CyclicWord& w) { return letter_counts(w.letters()); }

}  // namespace templink
