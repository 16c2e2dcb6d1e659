#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "xaax/json_io.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = xaax::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("dim prints the dimension") {
  const Outcome r = invoke({"dim", "--n", "3", "--mu", "-1"});
  CHECK(r.status == 0);
  CHECK(r.out == "7\n");
  CHECK(invoke({"dim", "--n", "5", "--mu", "2"}).out == "5\n");
  CHECK(invoke({"dim", "--n", "4", "--mu", "1", "--format", "json"}).out == "{\"dim\":8}\n");
}

TEST_CASE("delta emits JSON or an aligned grid") {
  const Outcome json = invoke({"delta", "--n", "2", "--format", "json"});
  CHECK(json.status == 0);
  CHECK(json.out ==
        "{\"rows\":2,\"cols\":2,\"entries\":[[\"0\",\"0\"],[\"-1\",\"0\"],[\"1\",\"0\"],[\"-1\",\"0\"]]}\n");
  CHECK(invoke({"delta", "--n", "3", "--format", "text"}).out ==
        "[  0  0 -1 ]\n"
        "[  0  1  2 ]\n"
        "[ -1 -1 -1 ]\n");
  CHECK(invoke({"delta", "--n", "2", "--inverse", "--format", "text"}).out ==
        "[ -1  1 ]\n"
        "[ -1  0 ]\n");
}

TEST_CASE("inadmissible parameters exit with status 1") {
  const Outcome r = invoke({"hblock", "--n", "1", "--mu", "1"});
  CHECK(r.status == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("0 != mu != (-1)^(n+1)") != std::string::npos);
  CHECK(invoke({"basis", "--n", "2", "--mu", "0"}).status == 1);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(invoke({}).status == 2);
  CHECK(invoke({"frobnicate"}).status == 2);
  CHECK(invoke({"dim", "--n", "3"}).status == 2);
  CHECK(invoke({"dim", "--n", "3", "--mu", "-1", "--bogus"}).status == 2);
  CHECK(invoke({"dim", "--n", "0", "--mu", "1"}).status == 2);
  CHECK(invoke({"dim", "--n", "3", "--mu", "one"}).status == 2);
  CHECK(invoke({"basis", "--n", "3", "--mu", "-1", "--format", "xml"}).status == 2);
  CHECK(invoke({"oracle"}).status == 2);
  CHECK(invoke({"oracle", "--n", "2"}).status == 2);
  CHECK(invoke({"verify", "--suite", "no_such_suite"}).status == 2);
}

TEST_CASE("help exits 0") {
  const Outcome r = invoke({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("compare reports span equality and dimension") {
  CHECK(invoke({"compare", "--n", "4", "--mu", "1"}).out == "span_equal: true, dim: 8\n");
  CHECK(invoke({"compare", "--n", "2", "--mu", "0,1"}).out == "span_equal: true, dim: 2\n");
  CHECK(invoke({"compare", "--n", "3", "--mu", "-1", "--format", "json"}).out ==
        "{\"span_equal\":true,\"explicit_dimension\":7,\"oracle_dimension\":7}\n");
}

TEST_CASE("basis JSON parses back to the closed-form elements") {
  const Outcome r = invoke({"basis", "--n", "3", "--mu", "-1"});
  REQUIRE(r.status == 0);
  const auto j = xaax::Json::parse(r.out);
  CHECK(j["dimension"] == 7);
  CHECK(xaax::matrix_from_json(j["elements"][3]).block(0, 3, 3, 3) ==
        xaax::Matrix{{0, 0, -2}, {0, 2, 2}, {-2, 0, -1}});
  CHECK(invoke({"basis", "--n", "1", "--mu", "-1", "--format", "text"}).out ==
        "n = 1, mu = -1\n"
        "dimension = 3\n"
        "\n"
        "DIAGONAL(0)\n"
        "[ -1  0 ]\n"
        "[  0  1 ]\n"
        "\n"
        "B_PARAM(0)\n"
        "[ 0 2 ]\n"
        "[ 0 0 ]\n"
        "\n"
        "C_PARAM(0)\n"
        "[ 0 0 ]\n"
        "[ 2 0 ]\n");
}

TEST_CASE("oracle reads a matrix file or builds H from --n/--mu") {
  const auto path = write_temp("xaax_cli_identity.json",
                               R"({"rows":2,"cols":2,"entries":[["1","0"],["0","0"],["0","0"],["1","0"]]})");
  const Outcome r = invoke({"oracle", "--input", path.string()});
  REQUIRE(r.status == 0);
  const auto j = xaax::Json::parse(r.out);
  CHECK(j["dimension"] == 1);
  CHECK_FALSE(j.contains("n"));
  CHECK(j["roles"] == xaax::Json::array({"KERNEL(0)"}));

  // Inadmissible mu is fine for the oracle.
  const Outcome h = invoke({"oracle", "--n", "1", "--mu", "1", "--format", "json"});
  CHECK(h.status == 0);

  const Outcome capped = invoke({"oracle", "--n", "3", "--mu", "2", "--max-order", "4"});
  CHECK(capped.status == 1);
  CHECK(capped.err.find("exceeds") != std::string::npos);

  const auto bad = write_temp("xaax_cli_bad.json", R"({"rows":2,"cols":3,"entries":[]})");
  CHECK(invoke({"oracle", "--input", bad.string()}).status == 1);
  CHECK(invoke({"oracle", "--input", "/nonexistent/file.json"}).status == 2);
}

TEST_CASE("structure constants from the closed form or a file") {
  const Outcome r = invoke({"structure", "--n", "1", "--mu", "-1"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "{\"dim\":3,\"entries\":[{\"i\":0,\"j\":1,\"k\":1,\"c\":\"-2\"},{\"i\":0,\"j\":2,\"k\":2,"
        "\"c\":\"2\"},{\"i\":1,\"j\":2,\"k\":0,\"c\":\"-4\"}]}\n");
  CHECK(invoke({"structure", "--n", "1", "--mu", "-1", "--format", "text"}).out ==
        "dim = 3\n[b0, b1] = -2 b1\n[b0, b2] = 2 b2\n[b1, b2] = -4 b0\n");
  const auto path = write_temp("xaax_cli_h2.json",
                               R"({"rows":2,"cols":2,"entries":[["0","0"],["1","0"],["-1","0"],["0","0"]]})");
  CHECK(invoke({"structure", "--input", path.string()}).status == 0);
  CHECK(invoke({"structure"}).status == 2);
}

TEST_CASE("verify reports one line per suite") {
  const Outcome r = invoke({"verify", "--n-max", "3"});
  CHECK(r.status == 0);
  CHECK(r.out.find("PASS pascal_delta.similarity") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("all suites passed (n_max = 3)") != std::string::npos);

  const Outcome one = invoke({"verify", "--n-max", "2", "--suite", "oracle.hard_case",
                              "--format", "json"});
  CHECK(one.status == 0);
  const auto j = xaax::Json::parse(one.out);
  CHECK(j["passed"] == true);
  REQUIRE(j["suites"].size() == 1);
  CHECK(j["suites"][0]["suite"] == "oracle.hard_case");
}

TEST_CASE("identical invocations produce identical output") {
  const std::vector<std::vector<std::string>> commands{
      {"basis", "--n", "4", "--mu", "1"},
      {"oracle", "--n", "2", "--mu", "1"},
      {"structure", "--n", "3", "--mu", "-1"},
      {"verify", "--n-max", "3", "--parallel"},
  };
  for (const auto& cmd : commands) CHECK(invoke(cmd).out == invoke(cmd).out);
}
