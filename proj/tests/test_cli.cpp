#include <doctest.h>

#include <json.hpp>

#include "cli_runner.hpp"

using test_support::run_cli;

TEST_CASE("cli distance and path at n = 4") {
  auto r = run_cli("distance --n 4 --a '(1 2 3 4)' --b '[1 2 3](3 4)' --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "distance");
  CHECK(j["exit_code"] == 0);
  CHECK(j.contains("elapsed_ms"));
  CHECK(j["result"]["distance"] == "4");

  auto p = run_cli("path --n 4 --a '(1 2 3 4)' --b '[1 2 3](3 4)' --format json");
  REQUIRE(p.code == 0);
  auto pj = nlohmann::json::parse(p.out);
  CHECK(pj["result"]["verified"] == true);
  CHECK(pj["result"]["vertices"].size() == 5);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("nonsense").code == 2);
  CHECK(run_cli("commutes --a '(1 2' --b '(1 2)'").code == 2);
  CHECK(run_cli("center --n 9 --mode brute").code == 2);
  CHECK(run_cli("distance --n 6 --a '(1 2 3 4 5 6)' --b '1 1 1 1 1 1'").code == 2);
  CHECK(run_cli("gamma --a '(1 2 3)' --b '1 1 1' --format dot").code == 0);
  CHECK(run_cli("components --n 3").code == 0);
  CHECK(run_cli("replay --n 6").code == 0);
  CHECK(run_cli("replay --n 10").code == 1);
  CHECK(run_cli("witness --n 7").code == 2);
  CHECK(run_cli("commutes --a '(1 2 3)' --b '(1 3 2)'").code == 0);
}

TEST_CASE("cli gamma DOT output") {
  auto r = run_cli("gamma --a '(1 2 3 4)' --b '1 1 1 1' --format dot");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("// connected=true", 0) == 0);
  CHECK(r.out.find("graph G {") != std::string::npos);
}

TEST_CASE("cli JSON is independent of the worker count") {
  for (char const* args : {"centralizer --a '[1 2 3](3 4)' --universe P",
                           "components --n 3 --semigroup T",
                           "oracle --a '2 3 1 1' --b '1 1 2 3'"}) {
    CAPTURE(args);
    auto one = run_cli(std::string(args) + " --format json --workers 1");
    auto two = run_cli(std::string(args) + " --format json --workers 2");
    CHECK(one.code == two.code);
    CHECK(test_support::mask_elapsed(one.out) == test_support::mask_elapsed(two.out));
  }
}
