#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "wqsym/cli.hpp"
#include "wqsym/io.hpp"

using namespace wqsym;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "wqsym");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream s(text);
  for (std::string line; std::getline(s, line);) out.push_back(line);
  return out;
}

const char* kExampleForest =
    R"([{"I":[1,3],"left":[],"right":[{"I":[1],"left":[],"right":[]}]},)"
    R"({"I":[1],"left":[{"I":[1],"left":[],"right":[]}],"right":[]}])";

}  // namespace

TEST_CASE("dims") {
  const Result r = run({"dims", "--max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "n a_n p_n t_n\n1 1 1 1\n2 3 2 1\n3 13 8 4\n");

  const Result j = run({"dims", "--max", "2", "--format", "json"});
  CHECK(j.code == 0);
  const auto rows = lines(j.out);
  REQUIRE(rows.size() == 2);
  CHECK(io::parse_json(rows[1]) == io::Json{{"n", 2}, {"a", 3}, {"p", 2}, {"t", 1}});

  CHECK(run({"dims", "--max", "6"}).code == 2);
  CHECK(run({"dims", "--max", "0"}).code == 2);
}

TEST_CASE("decompose") {
  const Result r = run({"decompose", "--word", "54664312"});
  CHECK(r.code == 0);
  const auto out = lines(r.out);
  REQUIRE(out.size() >= 3);
  CHECK(out[1] == "global descents: {5,6}");
  CHECK(out[2] == "factors: 21331 1 12");
  CHECK(r.out.find("21331 = 1 |> phi_{2,3}(11)") != std::string::npos);

  const Result j = run({"decompose", "--word", "54664312", "--format", "json"});
  const auto doc = io::parse_json(j.out);
  CHECK(doc["global_descents"] == io::Json::parse("[5,6]"));
  CHECK(doc["factors"] == io::Json::parse("[[2,1,3,3,1],[1],[1,2]]"));

  CHECK(run({"decompose", "--word", "13"}).code == 2);
  CHECK(run({"decompose", "--word", "1x"}).code == 2);
}

TEST_CASE("forest conversions") {
  const Result f = run({"to-forest", "--word", "876795343912", "--format", "json"});
  CHECK(f.code == 0);
  const std::string forest = lines(f.out).at(0);
  const Result w = run({"from-forest", "--json", forest});
  CHECK(w.code == 0);
  CHECK(w.out == "876795343912\n");

  CHECK(run({"to-forest", "--word", "11"}).out == "{1,2}\n");
  CHECK(run({"from-forest", "--json", "[{\"I\":[2],\"left\":[],\"right\":[]}]"}).code == 2);
  CHECK(run({"from-forest", "--json", "[{"}).code == 2);
}

TEST_CASE("expand-p") {
  const Result r = run({"expand-p", "--forest", kExampleForest});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "+1 R_14342\n-1 R_24341\n+1 R_41342\n-1 R_42341\n"
        "+1 R_43142\n-1 R_43241\n+1 R_43412\n-1 R_43421\n");

  const Result j = run({"expand-p", "--forest", kExampleForest, "--format", "json"});
  const Element x = io::element_from_json(io::parse_json(j.out));
  CHECK(x.size() == 8);
  CHECK(x.coefficient(parse_word("24341")) == -1);
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "words", "--n", "2"}).out == "11\n12\n21\n");
  const Result trees = run({"enumerate", "trees", "--n", "3", "--format", "json"});
  CHECK(lines(trees.out).size() == 8);
  const Result tprim = run({"enumerate", "tprim-trees", "--n", "4", "--format", "json"});
  CHECK(lines(tprim.out).size() == 28);
  const Result forests = run({"enumerate", "forests", "--n", "3", "--format", "json"});
  const auto rows = lines(forests.out);
  CHECK(rows.size() == 13);
  for (const auto& row : rows) {
    const Forest f = io::forest_from_json(io::parse_json(row));
    CHECK(io::to_json(f).dump() == row);
  }
  CHECK(run({"enumerate", "shapes", "--n", "2"}).code == 2);
}

TEST_CASE("verify and hilbert") {
  const Result r = run({"verify", "--max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(lines(r.out).back().find(", 0 failed") != std::string::npos);

  const Result j = run({"verify", "--max", "2", "--format", "json"});
  CHECK(j.code == 0);
  for (const auto& line : lines(j.out)) {
    const CheckResult c = io::check_from_json(io::parse_json(line));
    CHECK(c.pass);
    CHECK(io::to_json(c).dump() == line);
  }

  CHECK(run({"hilbert", "--max", "4"}).code == 0);
  CHECK(run({"verify", "--max", "7"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"dims", "--max", "x"}).code == 2);
  CHECK(run({"dims", "--format", "xml"}).code == 2);
  const Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("expand-p") != std::string::npos);
}
