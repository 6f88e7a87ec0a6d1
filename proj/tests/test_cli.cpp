#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "domino/cli.hpp"

using domino::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("count") {
  CHECK(invoke({"count", "a:2"}).out == "11\n");
  CHECK(invoke({"count", "rect:3,3"}).out == "0\n");
  CHECK(invoke({"count", "tower:10"}).out == "326041\n");
  CHECK(invoke({"count", "mtower:2"}).out == "3\n");
  CHECK(invoke({"count", "l3:2,2,SW"}).out == "153\n");
  CHECK(invoke({"count", "l2:3,2"}).out == "7\n");

  const auto json = nlohmann::json::parse(invoke({"count", "c:1", "--json"}).out);
  CHECK(json["spec"] == "c:1");
  CHECK(json["cells"] == 10);
  CHECK(json["count"] == "7");
}

TEST_CASE("count from an ASCII file") {
  const std::string path = "cli_test_region.txt";
  {
    std::ofstream f(path);
    f << ".##\n###\n###\n";
  }
  CHECK(invoke({"count", "@" + path}).out == "4\n");
  std::remove(path.c_str());
  CHECK(invoke({"count", "@does-not-exist.txt"}).code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({"count", "bogus"}).code == 2);
  CHECK(invoke({"count", "rect:3"}).code == 2);
  CHECK(invoke({"count", "rect:3,x"}).code == 2);
  CHECK(invoke({"count", "a:0"}).code == 2);
  CHECK(invoke({"count", "l3:2,2,UP"}).code == 2);
  CHECK(invoke({"count", "rect:40,40"}).code == 2);
  CHECK(invoke({"seq", "Q", "1", "3"}).code == 2);
  CHECK(invoke({"seq", "F", "0", "3", "--method", "closed"}).code == 2);
  CHECK(invoke({"seq", "M", "1", "3", "--method", "closed"}).code == 2);
  CHECK(invoke({"seq", "A", "0", "3"}).code == 2);
  CHECK(invoke({"seq", "A", "1", "3", "--method", "fast"}).code == 2);
  CHECK(invoke({"verify", "everything"}).code == 2);
  CHECK(invoke({"render", "a:6"}).code == 2);
  CHECK(invoke({"render", "tower:2"}).code == 2);
  CHECK(invoke({"bfile", "Q", "--to", "3"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK_FALSE(invoke({"count", "bogus"}).err.empty());
}

TEST_CASE("help exits 0") {
  const auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("count") != std::string::npos);
}

TEST_CASE("seq") {
  const auto a = lines(invoke({"seq", "A", "1", "10"}).out);
  REQUIRE(a.size() == 10);
  CHECK(a.front() == "1\t3");
  CHECK(a.back() == "10\t413403");
  CHECK(lines(invoke({"seq", "T", "1", "10"}).out).back() == "10\t326041");
  CHECK(invoke({"seq", "L3", "1", "3"}).out == "1\t11\n2\t153\n3\t2131\n");

  for (const char* fam : {"A", "B", "C", "T", "L3", "L2D"}) {
    const std::string from = std::string(fam) == "B" || std::string(fam) == "C" || std::string(fam) == "L2D" ? "0" : "1";
    const auto iter = invoke({"seq", fam, from, "40"}).out;
    CHECK(invoke({"seq", fam, from, "40", "--method", "matpow"}).out == iter);
    CHECK(invoke({"seq", fam, from, "40", "--method", "closed"}).out == iter);
  }

  const auto rec = nlohmann::json::parse(lines(invoke({"seq", "L3", "10", "10", "--json"}).out).at(0));
  CHECK(rec["family"] == "L3");
  CHECK(rec["n"] == 10);
  CHECK(rec["value"] == "216695104121");
}

TEST_CASE("verify") {
  CHECK(invoke({"verify", "crux", "--max", "100"}).code == 0);
  CHECK(invoke({"verify", "thm21", "--max-n", "4", "--max-k", "4"}).code == 0);
  CHECK(invoke({"verify", "tauraso", "--max-n", "4", "--max-k", "4", "--max", "30"}).code == 0);
  for (const char* suite : {"table1", "table2", "thm32", "recurrences"}) CHECK(invoke({"verify", suite}).code == 0);

  const auto all = invoke({"verify", "all", "--json"});
  CHECK(all.code == 0);
  CHECK(all.out == invoke({"verify", "all", "--json"}).out);
  for (const auto& line : lines(all.out)) {
    const auto rec = nlohmann::json::parse(line);
    CHECK(rec["left"].is_string());
    CHECK(rec["pass"] == true);
  }
}

TEST_CASE("render") {
  auto blocks = [](const std::string& text) {
    std::size_t n = text.empty() ? 0 : 1;
    for (std::size_t i = 1; i < text.size(); ++i)
      if (text[i] == '\n' && text[i - 1] == '\n') ++n;
    return n;
  };
  CHECK(blocks(invoke({"render", "a:1"}).out) == 3);
  CHECK(invoke({"render", "rect:2,2"}).out == "<>\n<>\n\n^^\nvv\n");
  const auto b0 = invoke({"render", "b:0", "--limit", "5"});
  CHECK(b0.code == 0);
  CHECK(b0.out == "^\nv\n");
  CHECK(blocks(invoke({"render", "a:2", "--limit", "4"}).out) == 4);
  CHECK(invoke({"render", "rect:2,2", "--limit", "0"}).code == 2);
}

TEST_CASE("bfile") {
  CHECK(lines(invoke({"bfile", "A", "--to", "10"}).out).back() == "10 413403");
  CHECK(lines(invoke({"bfile", "T", "--to", "10"}).out).back() == "10 326041");
  CHECK(invoke({"bfile", "C", "--to", "2"}).out == "0 2\n1 7\n2 26\n");
  CHECK(lines(invoke({"bfile", "A", "--to", "3"}).out).front() == "1 3");
  CHECK(lines(invoke({"bfile", "L3", "--to", "3"}).out).front() == "1 11");
  CHECK(invoke({"bfile", "B", "--from", "2", "--to", "3"}).out == "2 15\n3 56\n");
}
