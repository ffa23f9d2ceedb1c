#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "doctest.h"
#include "starban/json_io.hpp"

namespace {

std::string g_cli_path;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = std::move(out);
  return r;
}

starban::json_io::ordered_json parse_json(const std::string& text) {
  return starban::json_io::ordered_json::parse(text);
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << body;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("laws").exit_code == 2);
  CHECK(run_cli("laws --suite nosuch").exit_code == 2);
  CHECK(run_cli("tensor-gap --rows 1 --cols 3").exit_code == 2);
  CHECK(run_cli("tensor-gap --rows 3").exit_code == 2);
  CHECK(run_cli("complete").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("norm command evaluates the l1 sum of two scalars") {
  const RunResult r =
      run_cli("norm --space 'sum1(C,C)' --vector '[(3,0),(4,0)]'");
  REQUIRE(r.exit_code == 0);
  const auto doc = parse_json(r.out);
  CHECK(doc.at("command") == "norm");
  CHECK(doc.at("seed") == 0);
  CHECK(doc.at("dim") == 2);
  CHECK(doc.at("value").get<double>() == 7.0);

  const RunResult text =
      run_cli("--text norm --space 'sum1(C,C)' --vector '[(3,0),(4,0)]'");
  REQUIRE(text.exit_code == 0);
  CHECK(text.out == "7\n");

  const RunResult bare = run_cli("--text norm --space 'l2(2)' --vector '3, 4'");
  REQUIRE(bare.exit_code == 0);
  CHECK(bare.out == "5\n");
}

TEST_CASE("norm command rejects malformed input with code 2") {
  CHECK(run_cli("norm --space 'sum1(C' --vector '[1]'").exit_code == 2);
  CHECK(run_cli("norm --space 'sum1(C,C)' --vector '[1]'").exit_code == 2);
  CHECK(run_cli("norm --space 'sum1(C,C)' --vector '[1, zz]'").exit_code == 2);
  CHECK(run_cli("norm --space 'sum1(C,C)' --vector '@missing_file'").exit_code ==
        2);
}

TEST_CASE("tensor-gap reports the square-root ratio") {
  const RunResult r = run_cli("tensor-gap --rows 2 --cols 2");
  REQUIRE(r.exit_code == 0);
  const auto doc = parse_json(r.out);
  CHECK(doc.at("command") == "tensor-gap");
  CHECK(doc.at("ratio").get<double>() ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(doc.at("element").at("rows") == 2);
  CHECK(doc.at("upper_witness").is_array());
  CHECK(doc.at("lower_witness").at("cols") == 2);

  const RunResult r44 = run_cli("tensor-gap --rows 4 --cols 4");
  REQUIRE(r44.exit_code == 0);
  CHECK(parse_json(r44.out).at("ratio").get<double>() ==
        doctest::Approx(2.0).epsilon(1e-9));

  const RunResult rect = run_cli("tensor-gap --rows 2 --cols 5");
  REQUIRE(rect.exit_code == 0);
  CHECK(parse_json(rect.out).at("ratio").get<double>() ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("opnorm estimates the Euclidean operator norm") {
  write_file("cli_map_tmp.json",
             "{\"rows\": 2, \"cols\": 2, \"entries\": "
             "[[3,0],[0,0],[0,0],[1,0]]}");
  const RunResult r =
      run_cli("opnorm --dom 'l2(2)' --cod 'l2(2)' --map cli_map_tmp.json");
  REQUIRE(r.exit_code == 0);
  const auto doc = parse_json(r.out);
  CHECK(doc.at("value").get<double>() == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(doc.at("witness").size() == 2);

  CHECK(run_cli("opnorm --dom 'l2(3)' --cod 'l2(2)' --map cli_map_tmp.json")
            .exit_code == 2);
  write_file("cli_map_bad_tmp.json", "{\"rows\": 2}");
  CHECK(run_cli("opnorm --dom 'l2(2)' --cod 'l2(2)' --map cli_map_bad_tmp.json")
            .exit_code == 2);
  write_file("cli_map_junk_tmp.json", "not json at all");
  CHECK(
      run_cli("opnorm --dom 'l2(2)' --cod 'l2(2)' --map cli_map_junk_tmp.json")
          .exit_code == 2);
  std::remove("cli_map_tmp.json");
  std::remove("cli_map_bad_tmp.json");
  std::remove("cli_map_junk_tmp.json");
}

TEST_CASE("complete table pins the dual row for the zero object") {
  const RunResult r = run_cli("complete table --max 3");
  REQUIRE(r.exit_code == 0);
  const auto doc = parse_json(r.out);
  CHECK(doc.at("command") == "complete");
  CHECK(doc.at("objects").size() == 5);
  CHECK(doc.at("dual").at("fin:0") == "inf");
  CHECK(doc.at("dual").at("inf") == "fin:0");
  CHECK(doc.at("dual").at("fin:2") == "fin:2");
  CHECK(doc.at("tensor").at("fin:2").at("fin:3") == "fin:6");
  CHECK(doc.at("tensor").at("fin:0").at("inf") == "fin:0");
  CHECK(doc.at("par").at("fin:0").at("fin:0") == "fin:0");
  CHECK(doc.at("par").at("fin:0").at("inf") == "inf");
  CHECK(doc.at("hom").at("inf").at("fin:2") == "singleton");
  CHECK(doc.at("hom").at("fin:2").at("fin:3") == "vect:6");

  const RunResult text = run_cli("--text complete table --max 3");
  REQUIRE(text.exit_code == 0);
  CHECK(text.out.find("fin:0* = inf") != std::string::npos);
}

TEST_CASE("convolve matches the braid and symmetric hand values") {
  write_file("cli_f_tmp.json", "{\"support\": {\"1\": \"fin:1\"}}");
  write_file("cli_g_tmp.json", "{\"support\": {\"1\": \"fin:1\"}}");
  const RunResult braid =
      run_cli("convolve --profile braid --f cli_f_tmp.json --g cli_g_tmp.json");
  REQUIRE(braid.exit_code == 0);
  const auto bdoc = parse_json(braid.out);
  CHECK(bdoc.at("result").at("support").size() == 1);
  CHECK(bdoc.at("result").at("support").at("2") == "inf");

  write_file("cli_f2_tmp.json", "{\"support\": {\"1\": \"fin:2\"}}");
  write_file("cli_g2_tmp.json", "{\"support\": {\"2\": \"fin:3\"}}");
  const RunResult sym = run_cli(
      "convolve --profile symmetric --f cli_f2_tmp.json --g cli_g2_tmp.json");
  REQUIRE(sym.exit_code == 0);
  const auto sdoc = parse_json(sym.out);
  CHECK(sdoc.at("result").at("support").size() == 1);
  CHECK(sdoc.at("result").at("support").at("3") == "fin:36");

  CHECK(run_cli("convolve --profile nosuch --f cli_f_tmp.json --g cli_g_tmp.json")
            .exit_code == 2);
  CHECK(run_cli("convolve --profile braid --f missing.json --g cli_g_tmp.json")
            .exit_code == 2);
  std::remove("cli_f_tmp.json");
  std::remove("cli_g_tmp.json");
  std::remove("cli_f2_tmp.json");
  std::remove("cli_g2_tmp.json");
}

TEST_CASE("laws completion suite covers all 343 triples") {
  const RunResult r = run_cli("laws --suite completion --max-dim 5");
  REQUIRE(r.exit_code == 0);
  const auto doc = parse_json(r.out);
  CHECK(doc.at("passed") == true);
  REQUIRE(doc.at("reports").size() == 1);
  const auto& report = doc.at("reports").at(0);
  CHECK(report.at("suite") == "completion");
  bool saw_bijection = false;
  for (const auto& check : report.at("checks")) {
    CHECK(check.at("passed") == true);
    if (check.at("check") == "star-autonomy cardinality bijection") {
      saw_bijection = true;
      CHECK(check.at("details").at("checks") == 343);
      CHECK(check.at("details").at("failures") == 0);
    }
  }
  CHECK(saw_bijection);
}

TEST_CASE("laws output is byte-identical for a fixed command and seed") {
  const std::string cmd = "laws --suite all --seed 7 --max-dim 4 --samples 24";
  const RunResult a = run_cli(cmd);
  const RunResult b = run_cli(cmd);
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());

  const RunResult other = run_cli("laws --suite all --seed 8 --max-dim 4 --samples 24");
  REQUIRE(other.exit_code == 0);
  CHECK(a.out != other.out);
}

TEST_CASE("output flag writes the report to a file") {
  const RunResult r = run_cli(
      "--output cli_out_tmp.json norm --space 'l2(2)' --vector '[(0,3),(4,0)]'");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in("cli_out_tmp.json");
  REQUIRE(in.good());
  std::string body((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(parse_json(body).at("value").get<double>() == 5.0);
  std::remove("cli_out_tmp.json");
}

TEST_CASE("text mode emits a human summary for laws") {
  const RunResult r =
      run_cli("--text laws --suite posreal --seed 1 --samples 8");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("posreal: PASS") != std::string::npos);
  CHECK(r.out.find("overall: PASS") != std::string::npos);
}

int main(int argc, char** argv) {
  std::vector<char*> forwarded;
  for (int i = 0; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--cli=", 0) == 0) {
      g_cli_path = arg.substr(6);
    } else {
      forwarded.push_back(argv[i]);
    }
  }
  if (g_cli_path.empty()) {
    std::fprintf(stderr, "usage: test_cli --cli=<path-to-starban-binary>\n");
    return 2;
  }
  doctest::Context context(static_cast<int>(forwarded.size()),
                           forwarded.data());
  return context.run();
}
