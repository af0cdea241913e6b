#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "templink/symbolic.hpp"

using namespace templink;

namespace {

Word random_word(std::mt19937& rng, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::bernoulli_distribution coin(0.5);
  Word w(len(rng));
  for (auto& l : w) l = coin(rng) ? Letter::b : Letter::a;
  return w;
}

PeriodicSequence random_sequence(std::mt19937& rng) {
  return PeriodicSequence(random_word(rng, 0, 4), random_word(rng, 1, 5));
}

}  // namespace

TEST_CASE("parse and print words") {
  CHECK(to_string(parse_word("abba")) == "abba");
  CHECK(parse_word("").empty());
  CHECK_THROWS_AS(parse_word("abc"), WordError);
  CHECK(Letter::a < Letter::b);
}

TEST_CASE("canonicalize examples") {
  CHECK(canonicalize("ba").root.str() == "ab");
  CHECK(canonicalize("ba").power == 1);
  const Canonical c = canonicalize("abab");
  CHECK(c.root.str() == "ab");
  CHECK(c.power == 2);
  CHECK(canonicalize("aabab").root.str() == "aabab");
  CHECK(canonicalize("aabab").power == 1);
  CHECK(canonicalize("bbbb").root.str() == "b");
  CHECK(canonicalize("bbbb").power == 4);
  CHECK_THROWS_AS(canonicalize(""), WordError);
}

TEST_CASE("cyclic word construction") {
  CHECK(CyclicWord::parse("bab").str() == "abb");
  CHECK_THROWS_AS(CyclicWord::parse("abab"), WordError);
  CHECK_THROWS_AS(CyclicWord::parse(""), WordError);
  CHECK(CyclicWord::parse("ba") == CyclicWord::parse("ab"));
  CHECK(CyclicWord::parse("b") > CyclicWord::parse("a"));
  CHECK(CyclicWord::parse("abb") > CyclicWord::parse("ab"));  // shortlex
}

TEST_CASE("canonicalize is idempotent and rotation invariant") {
  std::mt19937 rng(7);
  for (int n = 0; n < 500; ++n) {
    const Word w = random_word(rng, 1, 16);
    const Canonical c = canonicalize(w);
    CHECK(canonicalize(c.root.letters()).root == c.root);
    CHECK(canonicalize(c.root.letters()).power == 1);
    CHECK(c.root.size() * c.power == w.size());
    for (std::size_t k = 0; k < w.size(); ++k) CHECK(canonicalize(rotate(w, k)).root == c.root);
    const std::string s = to_string(w);
    CHECK(c.root.str() == oracle::least_rotation(s.substr(0, c.root.size())));
    CHECK((c.power == 1) == oracle::primitive(s));
  }
}

TEST_CASE("periodic sequence normalization") {
  const PeriodicSequence s = PeriodicSequence::parse("ab|ab");
  CHECK(s.preperiod().empty());
  CHECK(to_string(s.period()) == "ab");
  CHECK(PeriodicSequence::parse("|abab").str() == "|ab");
  CHECK(PeriodicSequence::parse("ba|ab").str() == "ba|ab");
  CHECK(PeriodicSequence::parse("b|ab").str() == "|ba");
  CHECK(PeriodicSequence::parse("a|b").str() == "a|b");
  CHECK(PeriodicSequence::parse("bb|b").str() == "|b");
  CHECK_THROWS_AS(PeriodicSequence::parse("a|"), WordError);
  CHECK_THROWS_AS(PeriodicSequence::parse("a|b|a"), WordError);
  CHECK(to_string(PeriodicSequence::parse("a|ba").prefix(6)) == "ababab");
}

TEST_CASE("compare examples") {
  const auto P = [](const char* s) { return PeriodicSequence::parse(s); };
  CHECK(compare(P("|ab"), P("|aab")) == std::strong_ordering::greater);
  CHECK(compare(P("|ab"), P("|ab")) == std::strong_ordering::equal);
  CHECK(compare(P("a|bbababbaa"), P("|ab")) == std::strong_ordering::greater);
  CHECK(compare(P("|ab"), P("a|ba")) == std::strong_ordering::equal);
  CHECK(P("|a") < P("|b"));
}

TEST_CASE("compare is a total order consistent with long prefixes") {
  std::mt19937 rng(11);
  std::vector<PeriodicSequence> seqs;
  for (int n = 0; n < 60; ++n) seqs.push_back(random_sequence(rng));
  for (const auto& s : seqs)
    for (const auto& t : seqs) {
      const auto st = compare(s, t);
      CHECK(compare(t, s) == (0 <=> st));  // antisymmetry
      const std::string ps = to_string(s.prefix(200)), pt = to_string(t.prefix(200));
      CHECK((ps <=> pt) == st);
      CHECK((st == 0) == (s == t));
    }
  for (const auto& s : seqs)
    for (const auto& t : seqs)
      for (const auto& u : seqs)
        if (s < t && t < u) CHECK(s < u);
}

TEST_CASE("shift") {
  const auto P = [](const char* s) { return PeriodicSequence::parse(s); };
  CHECK(shift(P("|ab")) == P("|ba"));
  CHECK(shift(P("a|b")) == P("|b"));
  CHECK(shift(P("|aab")) == P("|aba"));
}

TEST_CASE("all_shifts are distinct and cycle under shift") {
  CHECK(all_shifts(CyclicWord::parse("ab")).size() == 2);
  CHECK(all_shifts(CyclicWord::parse("aab")).size() == 3);
  CHECK(all_shifts(CyclicWord::parse("a")).size() == 1);
  CHECK(all_shifts(CyclicWord::parse("ab"))[1] == PeriodicSequence::parse("|ba"));
  std::mt19937 rng(3);
  for (int n = 0; n < 200; ++n) {
    const Canonical c = canonicalize(random_word(rng, 1, 14));
    const auto sh = all_shifts(c.root);
    REQUIRE(sh.size() == c.root.size());
    for (std::size_t i = 0; i < sh.size(); ++i) {
      CHECK(shift(sh[i]) == sh[(i + 1) % sh.size()]);
      for (std::size_t j = 0; j < sh.size(); ++j) CHECK((compare(sh[i], sh[j]) == 0) == (i == j));
    }
  }
}

TEST_CASE("letter counts") {
  CHECK(letter_counts(CyclicWord::parse("aab")) == LetterCounts{2, 1});
  CHECK(letter_counts(CyclicWord::parse("ab")) == LetterCounts{1, 1});
  CHECK(letter_counts(CyclicWord::parse("aababb")) == LetterCounts{3, 3});
}
