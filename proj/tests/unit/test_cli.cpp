#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

using namespace s3nf;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "s3nf");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("s3nf_cli_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("selftest passes") {
  const Result r = run_cli({"selftest", "--max-degree", "4", "--no-meta"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["status"] == "pass");
  CHECK(j["result"]["checks"].size() > 15);
  CHECK_FALSE(j.contains("meta"));
}

TEST_CASE("reports are reproducible and echo the config") {
  const std::vector<std::string> args{"nullform", "--trials", "2", "--max-degree", "3", "--seed", "9", "--no-meta"};
  const Result a = run_cli(args), b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j["config"]["seed"] == 9);
  CHECK(j["config"]["max_degree"] == 3);
  CHECK(j["config"]["command"] == "nullform");
  for (const char* key : {"time_samples", "trials", "alpha1", "alpha2", "beta0", "betaw", "alpha", "beta", "epsilon",
                          "format", "tolerance"})
    CHECK(j["config"].contains(key));

  const Result m = run_cli({"evolve", "--time-samples", "4"});
  CHECK(Json::parse(m.out)["meta"].contains("timestamp"));

  const std::vector<std::string> sweep{"verify-estimate", "--trials", "3", "--max-degree", "3", "--no-meta"};
  CHECK(run_cli(sweep).out == run_cli(sweep).out);
}

TEST_CASE("series scan") {
  const Result r = run_cli({"series-scan", "--beta0", "0", "--alpha", "0", "--beta", "0", "--no-meta"});
  CHECK(r.code == 0);
  const Json s = Json::parse(r.out)["result"]["series"][0];
  CHECK(s["predicted_convergent"] == false);
  CHECK(std::abs(s["slope"].get<double>() - 1.0) < 0.15);
  CHECK(Json::parse(run_cli({"series-scan", "--no-meta"}).out)["result"]["series"].size() == 12);
}

TEST_CASE("exit codes") {
  const Result empty = run_cli({"verify-estimate", "--trials", "0"});
  CHECK(empty.code == 2);
  const Json e = Json::parse(empty.err);
  CHECK(e["error"] == "empty ensemble");
  CHECK(e["exit_code"] == 2);
  CHECK(empty.out.empty());

  CHECK(run_cli({"transform", "--format", "xml"}).code == 2);
  CHECK(run_cli({"verify-estimate", "--epsilon", "0.7"}).code == 2);
  CHECK(run_cli({"transform", "--no-such-flag"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"transform", "--max-degree", "x"}).code == 2);
  CHECK(run_cli({"bridge", "--f0", "gaussian:width=abc"}).code == 2);
  CHECK(run_cli({"bridge", "--max-degree", "4"}).code == 2);  // data not resolved at degree 4
  const Result fail = run_cli({"transform", "--trials", "1", "--max-degree", "2", "--tolerance", "1e-300"});
  CHECK(fail.code == 3);
  CHECK(Json::parse(fail.out)["status"] == "fail");
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("config files") {
  const auto dir = scratch_dir("config");
  std::filesystem::create_directories(dir);
  const auto path = (dir / "cfg.json").string();
  {
    std::ofstream(path) << R"({"max_degree": 3, "trials": 2, "seed": 5, "no_meta": true})";
  }
  Result r = run_cli({"nullform", "--config", path, "--seed", "7"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["config"]["max_degree"] == 3);
  CHECK(j["config"]["seed"] == 7);
  CHECK_FALSE(j.contains("meta"));

  {
    std::ofstream(path) << R"({"max_degree": 3, "colour": "blue"})";
  }
  r = run_cli({"nullform", "--config", path});
  CHECK(r.code == 2);
  CHECK(Json::parse(r.err)["error"].get<std::string>().find("colour") != std::string::npos);
  {
    std::ofstream(path) << R"({"max_degree": "three"})";
  }
  CHECK(run_cli({"nullform", "--config", path}).code == 2);
  {
    std::ofstream(path) << "not json";
  }
  CHECK(run_cli({"nullform", "--config", path}).code == 2);
  CHECK(run_cli({"nullform", "--config", (dir / "missing.json").string()}).code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("append-only report files") {
  const auto dir = scratch_dir("reports");
  const std::vector<std::string> args{"evolve", "--time-samples", "4", "--no-meta", "--output", dir.string()};
  CHECK(run_cli(args).code == 0);
  CHECK(run_cli(args).code == 0);
  cli::RunConfig cfg;
  cfg.command = "evolve";
  cfg.time_samples = 4;
  const auto file = dir / (cli::sha256_hex(cli::config_json(cfg).dump()) + ".jsonl");
  REQUIRE(std::filesystem::exists(file));
  std::ifstream in(file);
  std::string l1, l2, l3;
  std::getline(in, l1);
  std::getline(in, l2);
  CHECK_FALSE(std::getline(in, l3));
  CHECK(l1 == l2);
  CHECK(Json::parse(l1)["command"] == "evolve");

  std::vector<std::string> csv = args;
  csv.push_back("--format");
  csv.push_back("csv");
  CHECK(run_cli(csv).code == 0);
  CHECK(run_cli(csv).code == 0);
  cfg.format = "csv";
  std::ifstream c(dir / (cli::sha256_hex(cli::config_json(cfg).dump()) + ".csv"));
  int headers = 0, rows = 0;
  for (std::string line; std::getline(c, line);) (line.rfind("t,", 0) == 0 ? headers : rows)++;
  CHECK(headers == 1);
  CHECK(rows == 2 * 5);
  std::filesystem::remove_all(dir);
}

TEST_CASE("helpers") {
  CHECK(cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const RadialProfile g = cli::parse_profile("gaussian:width=2,amplitude=3");
  CHECK(g(0.0) == doctest::Approx(3.0));
  CHECK(g(2.0) == doctest::Approx(3.0 * std::exp(-1.0)));
  CHECK(cli::parse_profile("zero")(1.0) == 0.0);
  CHECK_THROWS_AS(cli::parse_profile("gaussian:width"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_profile("csv:/nonexistent/file.csv:linear"), std::invalid_argument);

  cli::RunConfig cfg;
  cfg.command = "transform";
  CHECK_NOTHROW(cli::validate(cfg));
  cfg.trials = 0;
  CHECK_THROWS_AS(cli::validate(cfg), std::invalid_argument);
  cfg.trials = 1;
  cfg.epsilon = 0.0;
  CHECK_THROWS_AS(cli::validate(cfg), std::invalid_argument);
}
