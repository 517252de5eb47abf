#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string command = std::string(GOFCLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 512> buffer{};
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("eval prints the exact value and a decimal rendering") {
  auto obs = write_file("gofcli_obs.csv", "3\n2\n1\n");
  auto ref = write_file("gofcli_ref.json", R"({"pi": ["1/6", "1/3", "1/2"]})");
  auto r = run("eval --measure chi2_1 --observed " + obs.string() + " --reference " +
               ref.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("16/3") == 0);
  CHECK(r.output.find("5.3333333333") != std::string::npos);
}

TEST_CASE("eval accepts a comma-separated row and a gamma scaling") {
  auto obs = write_file("gofcli_obs_row.csv", "1, 0, 0\n");
  auto ref = write_file("gofcli_ref_u3.json", R"({"pi": ["1/3", "1/3", "1/3"]})");
  auto r = run("eval --measure chi2_1 --gamma 3 --observed " + obs.string() +
               " --reference " + ref.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("6 ") == 0);
}

TEST_CASE("test emits a JSON report") {
  auto obs = write_file("gofcli_obs2.csv", "1\n0\n0\n");
  auto ref = write_file("gofcli_ref_u3.json", R"({"pi": ["1/3", "1/3", "1/3"]})");
  auto r = run("test --observed " + obs.string() + " --reference " + ref.string());
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["subcommand"] == "test");
  CHECK(j["results"]["statistic"] == "2");
  CHECK(j["results"]["df"] == 2);
  CHECK(j["witnesses"].empty());
}

TEST_CASE("perfect fit gives p = 1") {
  auto obs = write_file("gofcli_obs3.csv", "1\n2\n3\n");
  auto ref = write_file("gofcli_ref.json", R"({"pi": ["1/6", "1/3", "1/2"]})");
  auto r = run("test --observed " + obs.string() + " --reference " + ref.string());
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["results"]["p_value"] == 1.0);
}

TEST_CASE("axioms subcommand reports verdicts") {
  auto r = run("axioms --measure chi2_0 --n 2 --kmax 2 --limit 50");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["subcommand"] == "axioms");
  bool found_h0 = false;
  for (const auto& rep : j["results"]) {
    if (rep["axiom"] == "homogeneity_0") {
      found_h0 = true;
      CHECK(rep["passed"] == true);
    }
  }
  CHECK(found_h0);

  // the wrong-degree homogeneity report does not affect the verdict
  auto r1 = run("axioms --measure chi2_1 --n 2 --kmax 2 --limit 50");
  CHECK(r1.exit_code == 0);

  // abs fails deviations balancedness, so the exit code signals a failure
  auto r2 = run("axioms --measure abs --n 2 --kmax 4 --limit 200");
  CHECK(r2.exit_code == 1);
  auto j2 = nlohmann::json::parse(r2.output);
  CHECK_FALSE(j2["witnesses"].empty());
}

TEST_CASE("independence subcommand") {
  auto r = run("independence --n 3 --kmax 2 --limit 100");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["results"]["as_expected"] == true);
  CHECK(j["results"]["rows"].size() == 3);
}

TEST_CASE("reconstruct subcommand") {
  auto ref = write_file("gofcli_ref.json", R"({"pi": ["1/6", "1/3", "1/2"]})");
  auto r = run("reconstruct --measure chi2_0 --gamma 5 --reference " + ref.string());
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["results"]["gamma"] == "5");
  CHECK(j["results"]["theorem1_match"] == true);
  CHECK(j["results"]["form"]["diag"]["1"] == "40");
}

TEST_CASE("input errors exit with code 2") {
  auto ref = write_file("gofcli_bad_ref.json", R"({"pi": ["1/2", "1/3"]})");
  auto obs = write_file("gofcli_obs4.csv", "1\n1\n");
  CHECK(run("eval --observed /nonexistent.csv --reference " + ref.string()).exit_code ==
        2);
  CHECK(run("eval --observed " + obs.string() + " --reference " + ref.string())
            .exit_code == 2);  // pi does not sum to 1
  CHECK(run("nonsense").exit_code == 2);
}
