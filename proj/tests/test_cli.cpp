#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TEMPLINK_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("lk") {
  CHECK(run("lk --p 3 --q 3 --r 4 ab ab").out == "-1/3\n");
  CHECK(run("lk --p 3 --q 3 --r 4 ab ba").out == "-1/3\n");
  const Run r = run("lk --p 3 --q 3 --r 4 aab aab");
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(run("lk --p 3 --q 3 --r 4 ab aabb --format csv").out ==
        "word1,word2,cr,na1,nb1,na2,nb2,lk_num,lk_den,negative\nab,aabb,4,1,1,2,2,-2,3,true\n");
}

TEST_CASE("usage and domain errors exit 2") {
  CHECK(run("lk --p 3 --q 3 --r 4 abc ab").code == 2);
  CHECK(run("lk --p 2 --q 3 --r 6 ab ab").code == 2);
  CHECK(run("lk --p 3 --q 3 --r 4 abab ab").code == 2);
  CHECK(run("lk --p 3 --q 3 ab ab").code == 2);
  CHECK(run("lk --p 3 --q 3 --r 4 ab").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("extremal --p 2 --q 4 --r 5").code == 2);
  CHECK(run("homology 2 3").code == 2);
  CHECK(run("lk --p 3 --q 3 --r 4 ab ab --format xml").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("verify exit codes") {
  const Run ok = run("verify --p-max 4 --q-max 5 --r-max 7");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("0 violations") != std::string::npos);
  CHECK(ok.out.find("(3,3,4)") != std::string::npos);
  CHECK(run("verify --p 3 --q 3 --r 4").code == 0);
  CHECK(run("verify --p 3 --q 3 --r 4 --max-len 8").code == 0);
  CHECK(run("verify --p 3 --q 3 --r 4 ab aabb").code == 0);
  // the formal word a^2 b links positively with itself
  const Run control = run("verify --p 3 --q 3 --r 4 aab --format csv");
  CHECK(control.code == 1);
  CHECK(control.out.find("aab,aab,4,2,1,2,1,1,1,false") != std::string::npos);
  CHECK(run("verify --p 3 --q 3 --r 4 aab --no-self").code == 0);
  CHECK(run("verify --p-max 4 aab").code == 2);
}

TEST_CASE("other subcommands") {
  CHECK(run("homology 2 3 7").out == "1\n");
  CHECK(run("homology 2 3 5").out == "1\n");
  CHECK(run("cr ab aabb").out == "4\n");
  CHECK(run("cr ab ab").out == "2\n");
  CHECK(run("admissible --p 3 --q 3 --r 4 ab aab").out == "ab admissible\naab not admissible\n");
  CHECK(run("enumerate --p 3 --q 3 --r 4 --max-len 4").out == "ab\naabb\n");
  CHECK(run("extremal --p 3 --q 3 --r 4").out == "ab\naabb\naabab\nababb\naababb\naabaabb\naabbabb\n");
  CHECK(run("cuts ab").out == "a|b\n");
  CHECK(run("cuts ab --p 3 --q 3 --r 4").out == "a|b not admissible\n");
  const Run table = run("table --p 3 --q 3 --r 4");
  CHECK(table.code == 0);
  CHECK(table.out.find("|aababaabb") != std::string::npos);
}

TEST_CASE("json output is byte-identical apart from timing") {
  const auto strip = [](std::string s) {
    auto j = nlohmann::json::parse(s);
    j.erase("seconds");
    for (auto& t : j["triples"]) t.erase("seconds");
    return j.dump();
  };
  const Run a = run("verify --p-max 3 --q-max 4 --r-max 6 --format json --jobs 1");
  const Run b = run("verify --p-max 3 --q-max 4 --r-max 6 --format json --jobs 3");
  CHECK(a.code == 0);
  CHECK(strip(a.out) == strip(b.out));
  const Run c = run("lk --p 3 --q 4 --r 5 aab abb --format json");
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["triple"] == "(3,4,5)");
  CHECK(j["pairs"][0].contains("lk_den"));
}

TEST_CASE("--out writes a file") {
  const std::string path = "templink_cli_test_out.csv";
  CHECK(run("enumerate --p 3 --q 3 --r 4 --max-len 4 --format csv --out " + path).out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == "words\nab\naabb\n");
  std::remove(path.c_str());
}
