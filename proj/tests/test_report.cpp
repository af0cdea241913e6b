#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "templink/report.hpp"

using namespace templink;

TEST_CASE("csv rows") {
  const Triple t(3, 3, 4);
  const auto reports = verify_pairs(t, {CyclicWord::parse("ab"), CyclicWord::parse("aabb")}, true);
  REQUIRE(reports.size() == 3);
  CHECK(csv_header() == "word1,word2,cr,na1,nb1,na2,nb2,lk_num,lk_den,negative");
  CHECK(csv_row(reports[0]) == "ab,ab,2,1,1,1,1,-1,3,true");
  CHECK(csv_row(reports[1]) == "ab,aabb,4,1,1,2,2,-2,3,true");
}

TEST_CASE("json fields and determinism") {
  const Triple t(3, 3, 4);
  const auto reports = verify_pairs(t, extremal_orbits(t), true);
  const auto j = to_json(reports[0]);
  for (const char* key : {"word1", "word2", "cr", "na1", "nb1", "na2", "nb2", "lk_num", "lk_den", "negative"})
    CHECK(j.contains(key));
  std::ostringstream a, b;
  write_pairs(a, t, reports, Format::json, 0.25);
  write_pairs(b, t, reports, Format::json, 0.25);
  CHECK(a.str() == b.str());
  const auto parsed = nlohmann::json::parse(a.str());
  CHECK(parsed["triple"] == "(3,3,4)");
  CHECK(parsed["pairs"].size() == 28);
  CHECK(parsed["seconds"] == 0.25);
}

TEST_CASE("range summary formats") {
  const RangeSummary s = verify_triples({Triple(3, 3, 4), Triple(3, 3, 5)}, 2);
  std::ostringstream csv, json, text;
  write_range(csv, s, Format::csv);
  write_range(json, s, Format::json);
  write_range(text, s, Format::text);
  CHECK(csv.str().rfind("triple,words,pairs,violations", 0) == 0);
  const auto j = nlohmann::json::parse(json.str());
  CHECK(j["violations"] == 0);
  CHECK(j["triples"].size() == 2);
  CHECK(j["worst"]["negative"] == true);
  CHECK(text.str().find("2 triples") != std::string::npos);
}

TEST_CASE("format names and columns") {
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("json") == Format::json);
  CHECK(parse_format("text") == Format::text);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
  CHECK(align_columns({{"a", "bb"}, {"ccc", "d"}}) == "a    bb\nccc  d\n");
}
