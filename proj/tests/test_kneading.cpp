#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "templink/census.hpp"
#include "templink/kneading.hpp"

using namespace templink;

namespace {

std::vector<Triple> table_triples(int r_max) {
  std::vector<Triple> out;
  for (int p = 2; p <= 6; ++p)
    for (int q = p; q <= 8; ++q)
      for (int r = q; r <= r_max; ++r)
        if (is_hyperbolic(p, q, r) && in_table_domain(Triple(p, q, r))) out.emplace_back(p, q, r);
  return out;
}

}  // namespace

TEST_CASE("triple validation") {
  CHECK(Triple(2, 3, 7).delta() == 1);
  CHECK(Triple(3, 3, 4).delta() == 3);
  CHECK(Triple(2, 5, 7).delta() == 11);
  CHECK(Triple(3, 3, 4).str() == "(3,3,4)");
  CHECK_THROWS_AS(Triple(2, 3, 6), DomainError);
  CHECK_THROWS_AS(Triple(3, 3, 3), DomainError);
  CHECK_THROWS_AS(Triple(4, 3, 5), DomainError);
  CHECK_THROWS_AS(Triple(1, 5, 7), DomainError);
  CHECK(is_hyperbolic(2, 3, 7));
  CHECK_FALSE(is_hyperbolic(2, 4, 4));
}

TEST_CASE("table examples") {
  const KneadingData k334 = kneading(Triple(3, 3, 4));
  CHECK(k334.u_left.str() == "|aababaabb");
  CHECK(k334.v_right.str() == "|bbababbaa");
  CHECK(kneading(Triple(3, 3, 5)).u_left.str() == "|aabaabb");
  const KneadingData k257 = kneading(Triple(2, 5, 7));
  CHECK(k257.u_left.str() == "|abababb");
  CHECK(to_string(k257.v_right.prefix(22)) == "bbbb" "abbbbabbb" "abbbbabbb");
  CHECK(k257.v_right.str() == "b|bbbabbbba");  // normalized form of the same sequence
}

TEST_CASE("every hyperbolic triple lies in the table domain") {
  // p = 2 forces q >= 3 and r >= 5 by hyperbolicity.
  for (int q = 3; q <= 9; ++q)
    for (int r = q; r <= 15; ++r)
      if (is_hyperbolic(2, q, r)) CHECK(in_table_domain(Triple(2, q, r)));
  CHECK_THROWS_AS(kneading_open(2, 2), DomainError);
  CHECK(kneading_open(3, 4).u_left.str() == "|aab");
  CHECK(kneading_open(3, 4).v_right.str() == "|bbba");
}

TEST_CASE("kneading matches the longhand table and its footer relations") {
  for (const Triple& t : table_triples(12)) {
    CAPTURE(t.str());
    const KneadingData k = kneading(t);
    const oracle::Kneading o = oracle::kneading(t.p(), t.q(), t.r());
    const auto same = [](const PeriodicSequence& s, const std::string& pre, const std::string& per) {
      return to_string(s.prefix(200)) == oracle::unroll(pre, per, 200);
    };
    CHECK(same(k.u_left, o.uL_pre, o.uL));
    CHECK(same(k.u_right, o.uR_pre, o.uR));
    CHECK(same(k.v_left, o.vL_pre, o.vL));
    CHECK(same(k.v_right, o.vR_pre, o.vR));
    CHECK(shift(k.v_left) == k.u_left);
    CHECK(shift(k.u_right) == k.v_right);
    CHECK(k.v_left.front() == Letter::b);
    CHECK(k.u_right.front() == Letter::a);
    CHECK_FALSE(k.u_right < k.u_left);
    CHECK_FALSE(k.v_right < k.v_left);
  }
}

TEST_CASE("boundary period words are admissible") {
  for (const Triple& t : table_triples(12)) {
    CAPTURE(t.str());
    const KneadingData k = kneading(t);
    if (k.u_left.preperiod().empty()) CHECK(is_admissible(k.u_left.period(), k));
    if (k.v_right.preperiod().empty()) CHECK(is_admissible(k.v_right.period(), k));
  }
}

TEST_CASE("admissibility examples") {
  const KneadingData k = kneading(Triple(3, 3, 4));
  CHECK(is_admissible(CyclicWord::parse("ab"), k));
  CHECK_FALSE(is_admissible(CyclicWord::parse("aab"), k));
  CHECK_FALSE(is_admissible(CyclicWord::parse("abb"), k));
  CHECK(is_admissible(CyclicWord::parse("aababaabb"), k));
  CHECK_FALSE(is_admissible(CyclicWord::parse("a"), k));
  CHECK_FALSE(is_admissible(CyclicWord::parse("b"), k));
  CHECK(is_admissible(parse_word("aabb"), lorenz_kneading()));
  CHECK(is_admissible(parse_word("aaaaab"), lorenz_kneading()));
}

TEST_CASE("admissibility agrees with the string oracle and is rotation invariant") {
  for (const Triple& t : {Triple(3, 3, 4), Triple(3, 4, 5), Triple(2, 5, 7), Triple(2, 3, 8), Triple(4, 4, 5)}) {
    CAPTURE(t.str());
    const KneadingData k = kneading(t);
    const oracle::Kneading o = oracle::kneading(t.p(), t.q(), t.r());
    for (std::size_t n = 1; n <= 11; ++n)
      for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
        std::string s(n, 'a');
        for (std::size_t i = 0; i < n; ++i)
          if (bits >> i & 1) s[i] = 'b';
        const Word w = parse_word(s);
        const bool got = is_admissible(w, k);
        CHECK(got == oracle::admissible(s, o));
        if (got) {
          CHECK(is_admissible(rotate(w, 1), k));
          const BlockConstraints c = max_block_constraints(t);
          CHECK(longest_cyclic_run(w, Letter::a) <= static_cast<std::size_t>(c.max_run_a));
          CHECK(longest_cyclic_run(w, Letter::b) <= static_cast<std::size_t>(c.max_run_b));
          if (oracle::primitive(s)) CHECK(satisfies_block_constraints(w, t));
        }
      }
  }
}

TEST_CASE("block constraints") {
  CHECK(max_block_constraints(Triple(3, 3, 4)) == BlockConstraints{2, 2, 1});
  CHECK(max_block_constraints(Triple(2, 5, 7)) == BlockConstraints{1, 4, 2});
  CHECK(max_block_constraints(Triple(4, 5, 6)) == BlockConstraints{3, 4, 2});
  CHECK(longest_cyclic_run(parse_word("abaa"), Letter::a) == 3);
  CHECK(longest_cyclic_run(parse_word("aaa"), Letter::a) == 3);
  CHECK(longest_cyclic_run(parse_word("aaa"), Letter::b) == 0);
  CHECK(max_block_repeat(parse_word("aabaabab"), 3, 3) == 2);
  CHECK(max_block_repeat(parse_word("aabaab"), 3, 3) == SIZE_MAX);
}
