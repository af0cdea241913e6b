#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "templink/crossing.hpp"

using namespace templink;

namespace {

CyclicWord W(const char* s) { return CyclicWord::parse(s); }

std::string random_string(std::mt19937& rng, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::string s(len(rng), 'a');
  for (auto& c : s) c = rng() % 2 ? 'b' : 'a';
  return s;
}

std::string cat(const Word& u, const Word& v) { return to_string(u) + to_string(v); }

}  // namespace

TEST_CASE("crossing examples") {
  CHECK(crossing_number(W("ab"), W("aabb")) == 4);
  CHECK(crossing_number(W("abb"), W("aab")) == 2);
  CHECK(crossing_number(W("ab"), W("aab")) == 2);
  CHECK_THROWS_AS(crossing_number(W("ab"), W("ba")), std::invalid_argument);
  CHECK(self_crossing(W("ab")) == 2);
  CHECK(self_crossing(W("aab")) == 4);
  CHECK(self_crossing(W("a")) == 0);
  CHECK(pair_crossing(W("ab"), W("ab")) == 2);
}

TEST_CASE("crossing agrees with the string oracle") {
  std::mt19937 rng(5);
  for (int n = 0; n < 300; ++n) {
    const std::string x = random_string(rng, 1, 9), y = random_string(rng, 1, 9);
    CAPTURE(x);
    CAPTURE(y);
    CHECK(word_crossing(parse_word(x), parse_word(y)) == oracle::crossings(x, y));
  }
}

TEST_CASE("crossing symmetry and self-crossing parity") {
  std::mt19937 rng(9);
  for (int n = 0; n < 300; ++n) {
    const Canonical a = canonicalize(random_string(rng, 1, 12));
    const Canonical b = canonicalize(random_string(rng, 1, 12));
    CHECK(pair_crossing(a.root, b.root) == pair_crossing(b.root, a.root));
    CHECK(self_crossing(a.root) % 2 == 0);
  }
}

TEST_CASE("crossing table matches pairwise computation") {
  std::vector<CyclicWord> words;
  for (const char* s : {"a", "b", "ab", "aab", "abb", "aabb", "aabab", "ababb", "aababb", "abababb"})
    words.push_back(W(s));
  const CrossingTable table(words);
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j)
      CHECK(table.crossing(i, j) == pair_crossing(words[i], words[j]));
  CHECK_THROWS_AS(CrossingTable({W("ab"), W("ba")}), std::invalid_argument);
}

TEST_CASE("cut examples") {
  // The cut aa|abb|abbababbab: factors abbababbabaa and abb.
  const CyclicWord w = W("aaabbabbababbab");
  bool found = false;
  for (const Cut& c : enumerate_cuts(w)) {
    CHECK(is_cut(c.u, c.v));
    if (to_string(c.u) == "abbababbabaa" && to_string(c.v) == "abb") found = true;
  }
  CHECK(found);
  CHECK(is_cut(parse_word("abbababbabaa"), parse_word("abb")));

  const auto ab = enumerate_cuts(W("ab"));
  REQUIRE(ab.size() == 1);
  CHECK(to_string(ab[0].u) == "a");
  CHECK(to_string(ab[0].v) == "b");

  for (const Cut& c : enumerate_cuts(W("aabb"))) {
    CHECK(c.u.back() == Letter::a);
    CHECK(c.v.back() == Letter::b);
    CHECK(canonicalize(cat(c.u, c.v)).root == W("aabb"));
  }
  CHECK_FALSE(is_cut(parse_word("b"), parse_word("a")));
}

TEST_CASE("admissible cuts") {
  const KneadingData lorenz = lorenz_kneading();
  for (const Cut& c : enumerate_cuts(W("aaabbabbababbab"))) CHECK(is_admissible_cut(c, lorenz));
  // a cut of aabab producing a^2 b
  const KneadingData k = kneading(Triple(3, 3, 4));
  for (const Cut& c : enumerate_cuts(W("aabab"))) {
    if (to_string(c.u) == "aab" || to_string(c.v) == "aab") CHECK_FALSE(is_admissible_cut(c, k));
  }
}

TEST_CASE("cut conditions hold for every enumerated cut") {
  std::mt19937 rng(13);
  for (int n = 0; n < 200; ++n) {
    const Canonical c = canonicalize(random_string(rng, 2, 12));
    for (const Cut& cut : enumerate_cuts(c.root)) {
      const std::string u = to_string(cut.u), v = to_string(cut.v);
      CHECK(u.back() == 'a');
      CHECK(v.back() == 'b');
      CHECK(oracle::least_rotation(u + v) == c.root.str());
      const std::size_t H = oracle::horizon(u.size(), v.size());
      const std::string U = oracle::unroll("", u, H), V = oracle::unroll("", v, H);
      CHECK(U < V);
      for (const std::string& f : {u, v})
        for (std::size_t i = 0; i < f.size(); ++i) {
          const std::string s = oracle::unroll("", f.substr(i) + f.substr(0, i), H);
          CHECK_FALSE((U < s && s < V));
        }
    }
  }
}

TEST_CASE("superadditivity over random cuts") {
  std::mt19937 rng(17);
  int checked = 0;
  while (checked < 400) {
    const Canonical c = canonicalize(random_string(rng, 2, 12));
    if (c.power != 1) continue;
    const auto cuts = enumerate_cuts(c.root);
    if (cuts.empty()) continue;
    const Cut& cut = cuts[rng() % cuts.size()];
    const std::string x = random_string(rng, 1, 10);
    const std::string uv = cat(cut.u, cut.v);
    CAPTURE(uv);
    CAPTURE(x);
    CHECK(oracle::crossings(uv, x) >= oracle::crossings(to_string(cut.u), x) + oracle::crossings(to_string(cut.v), x));
    ++checked;
  }
}
