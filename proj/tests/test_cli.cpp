#include <doctest.h>

#include "grasshopper/bigint.hpp"
#include "grasshopper/cli/commands.hpp"
#include "grasshopper/cli/instance_io.hpp"
#include "grasshopper/errors.hpp"

using namespace grasshopper;
using namespace grasshopper::cli;
using nlohmann::json;

namespace {

json stable(json document) {
  document.erase("timings_ms");
  return document;
}

void check_schema(const Report& report, const std::string& command) {
  const json& doc = report.document;
  CHECK(doc["schema_version"] == kSchemaVersion);
  CHECK(doc["artifact_version"] == kArtifactVersion);
  CHECK(doc["command"] == command);
  CHECK(doc["inputs"].is_object());
  CHECK(doc["inputs_digest"].get<std::string>().size() == 16);
  CHECK(doc.contains("seed"));
  CHECK(doc["ok"] == report.ok());
  CHECK(doc["results"].is_object());
  CHECK(doc["timings_ms"]["total"].is_number());
}

Limits defaults() { return Limits{}; }

}  // namespace

TEST_CASE("scientific formatting") {
  CHECK(to_scientific(BigInt("85873408332103907284746052081828368")) == "8.587e34");
  CHECK(to_scientific(BigInt(90)) == "9.000e1");
  CHECK(to_scientific(BigInt(0)) == "0e0");
  CHECK(to_scientific(BigInt(99995)) == "1.000e5");
  CHECK(to_scientific(BigInt(12345)) == "1.235e4");
  CHECK(to_scientific(BigInt(-12344)) == "-1.234e4");
  CHECK(to_scientific(BigInt(7), 1) == "7e0");
}

TEST_CASE("number parsing") {
  CHECK(parse_bigint("-120") == -120);
  CHECK_THROWS_AS(parse_bigint("12a"), InputError);
  CHECK_THROWS_AS(parse_bigint(""), InputError);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-5") == -5);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK(to_string(Rational(3, 2)) == "3/2");
}

TEST_CASE("reference values") {
  REQUIRE(reference_ck_values().size() == 10);
  CHECK(matches_reference(*reference_ck(3), BigInt(90)));
  CHECK_FALSE(matches_reference(*reference_ck(3), BigInt(91)));
  CHECK(matches_reference(*reference_ck(7), ck(7)));
  CHECK_FALSE(reference_ck(11));
}

TEST_CASE("ck command") {
  auto exact = cmd_ck({2, CkMode::kExact, 0}, defaults());
  check_schema(exact, "ck");
  CHECK(exact.ok());
  CHECK(exact.document["results"]["value"]["decimal"] == "2");
  CHECK(exact.document["results"]["reference"]["matches"] == true);

  auto eval = cmd_ck({3, CkMode::kEval, 0}, defaults());
  CHECK(eval.ok());
  CHECK(eval.document["results"]["value"]["decimal"] == "90");
  CHECK(eval.document["results"]["note"] == "evaluation oracle");

  auto mod = cmd_ck({3, CkMode::kMod, 5}, defaults());
  CHECK(mod.ok());
  CHECK(mod.document["results"]["residue"] == 0);
  CHECK(mod.document["results"]["divides"] == true);

  CHECK_THROWS_AS(cmd_ck({3, CkMode::kMod, 6}, defaults()), InputError);
  Limits tight;
  tight.memo_cap = 5;
  CHECK_THROWS_AS(cmd_ck({5, CkMode::kExact, 0}, tight), CapacityError);
}

TEST_CASE("alpha command") {
  auto report = cmd_alpha(PolySpec{3, 2, 1}, {4, 1, 0}, defaults());
  check_schema(report, "alpha");
  CHECK(report.document["results"]["value"]["decimal"] == "2");
  CHECK_THROWS_AS(cmd_alpha(PolySpec{3, 2, 1}, {1, 4, 0}, defaults()), InputError);
}

TEST_CASE("instance documents") {
  auto doc = parse_instance_document(R"({"jumps": [1, "-2", "3/2"], "mines": []})");
  REQUIRE(doc.jumps.size() == 3);
  CHECK(doc.jumps[1] == -2);
  CHECK(doc.jumps[2] == Rational(3, 2));
  CHECK_FALSE(all_integral(doc));
  CHECK_THROWS_AS(to_integer_instance(doc), InputError);

  CHECK_THROWS_AS(parse_instance_document("{"), InputError);
  CHECK_THROWS_AS(parse_instance_document(R"({"jumps": [1]})"), InputError);
  CHECK_THROWS_AS(parse_instance_document(R"({"jumps": [1.5], "mines": []})"), InputError);
  CHECK_THROWS_AS(parse_instance_document(R"({"jumps": "1", "mines": []})"), InputError);
  CHECK_THROWS_AS(parse_instance_document(R"({"jumps": [true], "mines": []})"), InputError);

  auto positive = to_positive_instance(parse_instance_document(R"({"jumps":[2,1],"mines":[1]})"));
  CHECK(positive.size() == 2);
  CHECK_THROWS_AS(
      to_positive_instance(parse_instance_document(R"({"jumps":[-1,1],"mines":[]})")),
      InputError);
}

TEST_CASE("solve command") {
  auto extremal = cmd_solve(R"({"jumps":[-1,1,2,3],"mines":[1,2,3]})", "t", {}, defaults());
  check_schema(extremal, "solve");
  CHECK(extremal.ok());
  CHECK(extremal.document["results"]["verdict"] == "blocked");
  CHECK(extremal.document["results"]["theorem_violation"] == false);

  auto found = cmd_solve(R"({"jumps":[1,2,3],"mines":[1,2]})", "t", {true, false}, defaults());
  CHECK(found.ok());
  CHECK(found.document["results"]["verdict"] == "found");
  CHECK(found.document["results"]["exhaustive_agrees"] == true);
  CHECK(found.document["results"].contains("odd_reduction_route"));

  auto trivial = cmd_solve(R"({"jumps":[5],"mines":[]})", "t", {}, defaults());
  CHECK(trivial.document["results"]["verdict"] == "found");

  auto olympiad =
      cmd_solve(R"({"jumps":["1/2","1/3",2],"mines":["5/6"]})", "t", {false, true}, defaults());
  CHECK(olympiad.ok());
  CHECK(olympiad.document["results"]["route_valid"] == true);

  CHECK_THROWS_AS(cmd_solve(R"({"jumps":[1,1],"mines":[]})", "t", {}, defaults()), InputError);
  CHECK_THROWS_AS(cmd_solve(R"({"jumps":[1,2,3,4,5,6,7,8,9],"mines":[]})", "t", {true, false},
                            defaults()),
                  InputError);
}

TEST_CASE("tables command") {
  auto report = cmd_tables({}, defaults());
  check_schema(report, "tables");
  CHECK(report.ok());
  CHECK(report.document["results"]["extremal_instances"].size() > 0);
  CHECK(report.document["results"]["ck_values"].size() == 6);
  CHECK(report.document["results"]["factorizations"].size() == 4);
}

TEST_CASE("campaign command") {
  CampaignConfig empty;
  empty.trials = 0;
  auto vacuous = cmd_campaign(empty, defaults());
  check_schema(vacuous, "campaign");
  CHECK(vacuous.ok());
  CHECK(vacuous.document["results"]["violations"] == 0);

  CampaignConfig three;
  three.n_min = three.n_max = 3;
  three.zero_mode = ZeroMode::kNonzero;
  three.trials = 200;
  three.seed = 42;
  auto report = cmd_campaign(three, defaults());
  CHECK(report.ok());
  CHECK(report.document["results"]["per_n"][3] == 200);
  CHECK(report.document["seed"] == 42);
}

TEST_CASE("modscan and factor-verify commands") {
  auto scan = cmd_modscan(4, 100, defaults());
  check_schema(scan, "modscan");
  CHECK(scan.document["results"]["divisors"] == json::array({2, 3, 7, 97}));

  auto all = cmd_factor_verify(std::nullopt, defaults());
  CHECK(all.ok());
  CHECK(all.document["results"]["claims"].size() == 4);

  auto wrong = cmd_factor_verify(parse_factorization(3, "2*3^2*7"), defaults());
  CHECK_FALSE(wrong.ok());
  CHECK(wrong.exit_code == kExitAssertionFailed);
}

TEST_CASE("reports are deterministic apart from timings") {
  auto a = cmd_solve(R"({"jumps":[4,-3,2,7,-1],"mines":[1,3]})", "x", {true, false}, defaults());
  auto b = cmd_solve(R"({"jumps":[4,-3,2,7,-1],"mines":[1,3]})", "x", {true, false}, defaults());
  CHECK(stable(a.document) == stable(b.document));

  CampaignConfig config;
  config.trials = 100;
  config.seed = 9;
  auto c1 = cmd_campaign(config, defaults());
  config.threads = 2;
  auto c2 = cmd_campaign(config, defaults());
  CHECK(stable(c1.document)["results"] == stable(c2.document)["results"]);

  CHECK(inputs_digest({{"a", 1}}) == inputs_digest({{"a", 1}}));
  CHECK(inputs_digest({{"a", 1}}) != inputs_digest({{"a", 2}}));
}

TEST_CASE("error reports map exceptions to exit codes") {
  auto code = [](std::exception_ptr e) { return error_report("x", e).exit_code; };
  CHECK(code(std::make_exception_ptr(InputError("bad"))) == kExitInputError);
  CHECK(code(std::make_exception_ptr(CapacityError("memo_cap", "full"))) == kExitCapacityError);
  CHECK(code(std::make_exception_ptr(TheoremViolation("no"))) == kExitAssertionFailed);
  CHECK(code(std::make_exception_ptr(ConsistencyError("bug"))) == kExitInternalError);

  auto report = error_report("ck", std::make_exception_ptr(CapacityError("memo_cap", "full")));
  CHECK(report.document["error"]["cap"] == "memo_cap");
  CHECK(report.document["ok"] == false);
}
