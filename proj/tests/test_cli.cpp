#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "halfspace/commands.hpp"

using namespace hs;

TEST_CASE("config parsing") {
  RunConfig cfg = parse_config_text(
      "# comment line\n"
      "kind = complex   # trailing comment\n"
      "m = 2\n"
      "\n"
      "[scan]\n"
      "resolution = 1e-2\n");
  CHECK(cfg.get("kind", "") == "complex");
  CHECK(cfg.get_int("m", 0) == 2);
  CHECK(cfg.get_num("scan.resolution", 0) == doctest::Approx(1e-2));
  CHECK(cfg.get("missing", "dflt") == "dflt");
  CHECK_FALSE(cfg.has("missing"));

  CHECK_THROWS_WITH_AS(parse_config_text("novalue\n"),
                       doctest::Contains("line 1"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_config_text("a=1\n[oops\n"),
                       doctest::Contains("line 2"), std::runtime_error);
  CHECK_THROWS_AS(parse_config_text("= 3\n"), std::runtime_error);
  RunConfig bad = parse_config_text("x = abc\n");
  CHECK_THROWS_AS(bad.get_num("x", 0), std::runtime_error);
}

TEST_CASE("report precision and JSON shape") {
  CHECK(report_precision(1.0 / 3.0) == doctest::Approx(0.333333333333).epsilon(1e-13));
  Report rep;
  rep.command = "demo";
  rep.check("a", 1.0, 1.0 + 1e-9, 1e-6);
  rep.check("b", 0.0, 0.5, 1e-3, "off");
  rep.check_flag("c", true);
  CHECK_FALSE(rep.overall());
  nlohmann::json j = rep.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "demo");
  CHECK(j["checks"].size() == 3);
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["checks"][1]["pass"] == false);
  CHECK(j["checks"][1]["note"] == "off");
  CHECK(j["overall_pass"] == false);
  CHECK(j.contains("wall_time_ms"));
}

TEST_CASE("dispatch and error paths") {
  RunConfig cfg;
  CHECK_THROWS_AS(run_command("no-such-command", cfg), std::runtime_error);
  Report rep = run_command("monoid", cfg);
  CHECK(rep.command == "monoid");
  CHECK(rep.overall());
  CHECK(rep.seed == cfg.seed);
}

TEST_CASE("inadmissible weight scan fails cleanly instead of throwing") {
  RunConfig cfg;
  cfg.kv["kind"] = "real";
  cfg.kv["n"] = "4";
  cfg.kv["delta1"] = "5";  // out of range
  Report rep = run_command("weight-scan", cfg);
  CHECK_FALSE(rep.overall());
  REQUIRE(!rep.checks.empty());
  CHECK(rep.checks[0].name == "admissible_spec");
  CHECK(rep.checks[0].note.find("delta1") != std::string::npos);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  for (const char* name : {"indicial", "monoid", "weight-scan"}) {
    RunConfig cfg;
    cfg.seed = 42;
    nlohmann::json a = run_command(name, cfg).to_json();
    nlohmann::json b = run_command(name, cfg).to_json();
    a.erase("wall_time_ms");
    b.erase("wall_time_ms");
    CHECK(a.dump() == b.dump());
  }
}

TEST_CASE("seed changes sampled results but not schema") {
  RunConfig c1, c2;
  c1.seed = 1;
  c2.seed = 2;
  Report a = run_command("verify-metric", c1);
  Report b = run_command("verify-metric", c2);
  CHECK(a.overall());
  CHECK(b.overall());
  CHECK(a.checks.size() == b.checks.size());
}
