#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>
#include <string>

#include <json.hpp>

#include "adeweyl/cli.hpp"
#include "adeweyl/laurent.hpp"

using namespace adeweyl;
using adeweyl::cli::Command;
using adeweyl::cli::Format;
using adeweyl::cli::Request;
using adeweyl::cli::RunResult;

namespace {

Request base_request(Command command, char series, int rank,
                     std::vector<int64_t> lambda) {
  Request r;
  r.command = command;
  r.series = series;
  r.rank = rank;
  r.lambda = std::move(lambda);
  return r;
}

}  // namespace

TEST_CASE("command and format names round trip") {
  for (const char* name : {"info", "fermionic", "gch", "betti", "poincare",
                           "kl", "loewy", "tableaux", "verify"}) {
    CHECK(cli::command_name(cli::command_from_name(name)) == name);
  }
  CHECK_THROWS_AS(cli::command_from_name("bogus"), std::invalid_argument);
  CHECK(cli::format_from_name("json") == Format::Json);
  CHECK(cli::format_from_name("csv") == Format::Csv);
  CHECK(cli::format_from_name("text") == Format::Text);
  CHECK_THROWS_AS(cli::format_from_name("yaml"), std::invalid_argument);
}

TEST_CASE("info renders series data") {
  Request r;
  r.command = Command::Info;
  r.series = 'A';
  r.rank = 2;
  RunResult result = cli::run(r);
  CHECK(result.exit_code == 0);
  CHECK(result.output ==
        "series: A2\n"
        "rank: 2\n"
        "positive roots: 3\n"
        "edges: 0-1\n"
        "minuscule nodes: 0 1\n"
        "cartan matrix:\n"
        "2 -1\n"
        "-1 2\n");

  r.format = Format::Json;
  RunResult js = cli::run(r);
  CHECK(js.exit_code == 0);
  auto doc = nlohmann::json::parse(js.output);
  CHECK(doc["series"] == "A");
  CHECK(doc["rank"] == 2);
  CHECK(doc["positive_roots"] == 3);
  CHECK(doc["edges"] == nlohmann::json::parse("[[0,1]]"));
  CHECK(doc["cartan"] == nlohmann::json::parse("[[2,-1],[-1,2]]"));
}

TEST_CASE("fermionic single and sweep outputs") {
  Request r = base_request(Command::Fermionic, 'A', 1, {2});
  r.mu = std::vector<int64_t>{0};
  RunResult single = cli::run(r);
  CHECK(single.exit_code == 0);
  CHECK(single.output == "t^-1\n");

  r.format = Format::Json;
  RunResult js = cli::run(r);
  CHECK(laurent_from_json(js.output) == LaurentPoly::monomial(1, -1));

  Request sweep = base_request(Command::Fermionic, 'A', 1, {4});
  RunResult text = cli::run(sweep);
  CHECK(text.exit_code == 0);
  CHECK(text.output ==
        "mu=[4]: 1\n"
        "mu=[2]: t^-3 + t^-2 + t^-1\n"
        "mu=[0]: t^-4 + t^-2\n");

  sweep.format = Format::Csv;
  RunResult csv = cli::run(sweep);
  CHECK(csv.output ==
        "mu,poly\n"
        "4,1\n"
        "2,t^-3 + t^-2 + t^-1\n"
        "0,t^-4 + t^-2\n");

  sweep.format = Format::Json;
  auto doc = nlohmann::json::parse(cli::run(sweep).output);
  CHECK(doc["lambda"] == nlohmann::json::parse("[4]"));
  REQUIRE(doc["entries"].size() == 3);
  CHECK(doc["entries"][0]["mu"] == nlohmann::json::parse("[4]"));
  CHECK(laurent_from_json(doc["entries"][2]["poly"].dump()) ==
        LaurentPoly::monomial(1, -4) + LaurentPoly::monomial(1, -2));
}

TEST_CASE("kl command doubles the grading") {
  Request r = base_request(Command::Kl, 'A', 1, {3});
  r.mu = std::vector<int64_t>{1};
  CHECK(cli::run(r).output == "t^2 + t^4\n");
}

TEST_CASE("gch and loewy render layers") {
  Request r = base_request(Command::Gch, 'A', 2, {1, 1});
  RunResult text = cli::run(r);
  CHECK(text.output ==
        "lambda = [1,1]\n"
        "layer 0: [1,1] x1\n"
        "layer 1: [0,0] x1\n"
        "dim = 9\n");

  r.format = Format::Csv;
  CHECK(cli::run(r).output ==
        "degree,mu,mult\n"
        "0,1 1,1\n"
        "1,0 0,1\n");

  Request loewy = base_request(Command::Loewy, 'A', 2, {1, 1});
  RunResult report = cli::run(loewy);
  CHECK(report.output ==
        "lambda = [1,1]\n"
        "lambda_min = [0,0]\n"
        "loewy length = 2\n"
        "socle = V([0,0])\n"
        "layer 0: [1,1] x1\n"
        "layer 1: [0,0] x1\n"
        "dim = 9\n");

  loewy.format = Format::Json;
  auto doc = nlohmann::json::parse(cli::run(loewy).output);
  CHECK(doc["loewy_length"] == 2);
  CHECK(doc["lambda_min"] == nlohmann::json::parse("[0,0]"));
  CHECK(doc["dim"] == "9");
  CHECK(doc["layers"].size() == 2);
}

TEST_CASE("betti and poincare commands") {
  Request r = base_request(Command::Betti, 'A', 1, {2});
  r.alpha = std::vector<int64_t>{1};
  CHECK(cli::run(r).output == "d = 2\nbetti = 1 0 1\n");

  r.format = Format::Json;
  auto doc = nlohmann::json::parse(cli::run(r).output);
  CHECK(doc["d"] == 2);
  CHECK(doc["betti"] == nlohmann::json::parse("[1,0,1]"));

  Request empty = base_request(Command::Betti, 'A', 1, {1});
  empty.alpha = std::vector<int64_t>{2};
  CHECK(cli::run(empty).output == "d = -4\nbetti = (empty)\n");

  Request sweep = base_request(Command::Betti, 'A', 2, {1, 1});
  sweep.format = Format::Csv;
  CHECK(cli::run(sweep).output ==
        "alpha,d,betti\n"
        "0 0,0,1\n"
        "0 1,0,1\n"
        "1 0,0,1\n"
        "1 1,2,1 0 2\n"
        "1 2,0,1\n"
        "2 1,0,1\n"
        "2 2,0,1\n");

  Request poincare = base_request(Command::Poincare, 'A', 2, {1, 1});
  poincare.alpha = std::vector<int64_t>{1, 1};
  CHECK(cli::run(poincare).output == "2 + t^2\n");
}

TEST_CASE("tableaux command counts fillings") {
  Request r = base_request(Command::Tableaux, 'A', 2, {2, 0});
  r.alpha = std::vector<int64_t>{1, 0};
  CHECK(cli::run(r).output == "2\n");
  r.format = Format::Csv;
  CHECK(cli::run(r).output == "alpha,count\n1 0,2\n");
}

TEST_CASE("verify reports per check lines") {
  Request r = base_request(Command::Verify, 'A', 2, {2, 1});
  RunResult result = cli::run(r);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("PASS layer_laws\n") != std::string::npos);
  CHECK(result.output.find("PASS cross_formula\n") != std::string::npos);
  CHECK(result.output.find("6 passed, 0 failed, 0 skipped") !=
        std::string::npos);

  Request d4 = base_request(Command::Verify, 'D', 4, {0, 1, 0, 0});
  RunResult skipped = cli::run(d4);
  CHECK(skipped.exit_code == 0);
  CHECK(skipped.output.find("SKIP cross_formula: requires series A") !=
        std::string::npos);
  CHECK(skipped.output.find("4 passed, 0 failed, 2 skipped") !=
        std::string::npos);

  d4.format = Format::Json;
  auto doc = nlohmann::json::parse(cli::run(d4).output);
  CHECK(doc["failed"] == 0);
  CHECK(doc["checks"].size() == 6);
}

TEST_CASE("verify depth caps the alpha sweep") {
  Request r = base_request(Command::Verify, 'A', 1, {6});
  r.depth = 2;
  RunResult result = cli::run(r);
  CHECK(result.exit_code == 0);
}

TEST_CASE("usage errors are reported with exit code 1") {
  Request missing;
  missing.command = Command::Gch;
  missing.series = 'A';
  missing.rank = 2;
  RunResult r1 = cli::run(missing);
  CHECK(r1.exit_code == 1);
  CHECK(r1.output.find("requires --lambda") != std::string::npos);

  Request extra = base_request(Command::Info, 'A', 2, {1, 1});
  RunResult r2 = cli::run(extra);
  CHECK(r2.exit_code == 1);
  CHECK(r2.output.find("--lambda is not accepted") != std::string::npos);

  Request badseries = base_request(Command::Gch, 'X', 2, {1, 1});
  CHECK(cli::run(badseries).exit_code == 1);

  Request badrank = base_request(Command::Gch, 'E', 5, {1, 1, 1, 1, 1});
  RunResult r3 = cli::run(badrank);
  CHECK(r3.exit_code == 1);
  CHECK(r3.output.substr(0, 7) == "error: ");

  Request wrongsize = base_request(Command::Gch, 'A', 2, {1, 1, 1});
  CHECK(cli::run(wrongsize).exit_code == 1);

  Request nond = base_request(Command::Gch, 'A', 2, {-1, 0});
  CHECK(cli::run(nond).exit_code == 1);

  Request tableaux_d = base_request(Command::Tableaux, 'D', 4, {1, 0, 0, 0});
  tableaux_d.alpha = std::vector<int64_t>{1, 0, 0, 0};
  CHECK(cli::run(tableaux_d).exit_code == 1);

  Request verify_csv = base_request(Command::Verify, 'A', 1, {2});
  verify_csv.format = Format::Csv;
  RunResult r4 = cli::run(verify_csv);
  CHECK(r4.exit_code == 1);
  CHECK(r4.output.find("csv output is not available") != std::string::npos);

  Request depth_misuse = base_request(Command::Gch, 'A', 2, {1, 1});
  depth_misuse.depth = 3;
  RunResult r5 = cli::run(depth_misuse);
  CHECK(r5.exit_code == 1);
  CHECK(r5.output.find("--depth is not accepted") != std::string::npos);
}

TEST_CASE("budget exhaustion surfaces as a clean error") {
  Request r = base_request(Command::Fermionic, 'A', 3, {3, 3, 3});
  r.max_terms = 25;
  RunResult result = cli::run(r);
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("budget exceeded") != std::string::npos);
  CHECK(result.output.find("--max-terms") != std::string::npos);
}

TEST_CASE("outputs are deterministic") {
  Request r = base_request(Command::Betti, 'D', 4, {0, 1, 0, 0});
  RunResult first = cli::run(r);
  RunResult second = cli::run(r);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);

  r.format = Format::Json;
  CHECK(cli::run(r).output == cli::run(r).output);
}

TEST_CASE("cache directories persist between runs") {
  auto dir = std::filesystem::temp_directory_path() /
             ("adeweyl-cli-cache-" + std::to_string(std::random_device{}()));
  std::filesystem::remove_all(dir);
  Request r = base_request(Command::Betti, 'D', 4, {0, 1, 0, 0});
  r.cache_dir = dir.string();
  RunResult first = cli::run(r);
  CHECK(first.exit_code == 0);
  bool found = false;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") found = true;
  }
  CHECK(found);
  RunResult second = cli::run(r);
  CHECK(second.output == first.output);
  std::filesystem::remove_all(dir);
}
