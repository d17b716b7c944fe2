#include <doctest.h>

#include <sstream>

#include "unitri/cli.hpp"

using namespace unitri;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("field order splitting") {
  CHECK(cli::field_spec_for_order(9) == FieldSpec{3, 2, std::nullopt});
  CHECK(cli::field_spec_for_order(2) == FieldSpec{2, 1, std::nullopt});
  CHECK_THROWS_AS(cli::field_spec_for_order(12), std::invalid_argument);
  CHECK_THROWS_AS(cli::field_spec_for_order(1), std::invalid_argument);
}

TEST_CASE("job specs round trip") {
  JobSpec job;
  job.command = "chain";
  job.field = {3, 2, std::vector<int>{2, 2, 1}};
  job.n = 5;
  job.pattern = std::vector<std::array<int, 2>>{{1, 2}, {2, 3}, {1, 3}};
  job.lambda = {{1, 3, 4}};
  job.which = "left";
  job.cap = 1000;
  job.out = "x.json";
  CHECK(job_from_json(to_json(job)) == job);
  CHECK(job_from_json(Json::parse(to_json(job).dump())) == job);
  JobSpec minimal;
  minimal.command = "verify";
  minimal.r = 3;
  CHECK(job_from_json(to_json(minimal)) == minimal);
}

TEST_CASE("malformed jobs") {
  CHECK_THROWS_AS(job_from_json(Json::parse(R"({"command":"dance","field":{"p":2}})")), std::invalid_argument);
  CHECK_THROWS_AS(job_from_json(Json::parse(R"({"command":"chain"})")), std::invalid_argument);
  CHECK_THROWS_AS(job_from_json(Json::parse(R"({"command":"chain","field":{"p":2},"bogus":1})")), std::invalid_argument);
  CHECK_THROWS_AS(job_from_json(Json::parse(R"({"command":"chain","field":{"p":2},"lambda":[[1,2]]})")), std::invalid_argument);
  CHECK_THROWS_AS(job_from_json(Json::parse("[1,2]")), std::invalid_argument);
}

TEST_CASE("cyclotomic numbers round trip") {
  const auto x = CyclotomicNumber::zeta(9, 2) * Rational(3, 7) + CyclotomicNumber::rational(-5, 9);
  CHECK(cyclotomic_from_json(to_json(x)) == x);
  CHECK(to_json(CyclotomicNumber::rational(Rational(1, 2))).dump() == R"({"m":1,"coeffs":["1/2"]})");
}

TEST_CASE("lambda validation") {
  const Field f = Field::make(3);
  const Algebra alg = Algebra::full(4, f);
  CHECK(lambda_entries({{1, 3, 2}}, alg).size() == 1);
  CHECK_THROWS_AS(lambda_entries({{3, 1, 1}}, alg), std::invalid_argument);
  CHECK_THROWS_AS(lambda_entries({{1, 5, 1}}, alg), std::invalid_argument);
  CHECK_THROWS_AS(lambda_entries({{1, 3, 3}}, alg), std::invalid_argument);
  const Algebra pat = Algebra::pattern(Pattern(4, {{1, 2}}), f);
  CHECK_THROWS_AS(lambda_entries({{1, 3, 1}}, pat), std::invalid_argument);
}

TEST_CASE("chain command") {
  const Run r = run_cli({"chain", "--n", "6", "--q", "2", "--lambda", "[[1,3,1],[2,4,1],[3,5,1],[4,6,1]]"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["command"] == "chain");
  CHECK(j["result"]["l"][1]["zero_positions"] == Json::parse("[[1,2],[2,3],[3,4],[4,5]]"));
  CHECK(j["result"]["supercharacter"]["degree_exponent"] == 4);
  CHECK(j["result"]["xi"]["degree_exponent"] == 2);

  const Json small = Json::parse(run_cli({"chain", "--n", "3", "--q", "2", "--lambda", "[[1,3,1]]"}).out);
  CHECK(small["result"]["xi"]["l_bar_equals_s_bar"] == true);
  CHECK(small["result"]["xi"]["degree_exponent"] == 1);

  const Json empty = Json::parse(run_cli({"chain", "--n", "4", "--q", "3"}).out);
  CHECK(empty["result"]["d"] == 1);
  CHECK(empty["result"]["l_bar"]["dim"] == 6);
}

TEST_CASE("chain on a pattern") {
  const Run r = run_cli({"chain", "--n", "4", "--q", "2", "--pattern", "[[1,2],[2,3],[1,3],[3,4]]", "--lambda", "[[1,3,1]]"});
  CHECK(r.code == 2);  // (1,4) and (2,4) missing: not closed
  const Run ok = run_cli({"chain", "--n", "4", "--q", "2", "--pattern", "[[1,2],[2,3],[1,3],[3,4],[2,4],[1,4]]", "--lambda", "[[1,3,1]]"});
  CHECK(ok.code == 0);
}

TEST_CASE("exotic, verify and kappa commands") {
  const Run ex = run_cli({"exotic", "--r", "2", "--q", "2"});
  REQUIRE(ex.code == 0);
  const Json e = Json::parse(ex.out)["result"];
  CHECK(e["degree_exponent"] == 16);
  CHECK(e["norm_exponent"] == 1);
  CHECK(e["conductor"] == 4);

  const Run v = run_cli({"verify", "--r", "3", "--q", "2"});
  CHECK(v.code == 0);
  const Json vj = Json::parse(v.out);
  CHECK(vj["status"] == "pass");
  int equal = 0;
  for (const auto& c : vj["result"]["subspaces"])
    if (c["equal"] == true && c["name"].get<std::string>().size() == 2) ++equal;
  CHECK(equal == 6);

  const Run k = run_cli({"kappa", "--n", "4", "--q", "3"});
  CHECK(k.code == 0);
  CHECK(Json::parse(k.out)["result"]["psi_exp"]["is_character"] == false);
}

TEST_CASE("orbit and table commands") {
  const Json o = Json::parse(run_cli({"orbit", "--n", "3", "--q", "3", "--lambda", "[[1,3,1]]", "--which", "left"}).out);
  CHECK(o["result"]["size"] == 3);
  const Json t = Json::parse(run_cli({"table", "--n", "3", "--q", "2", "--lambda", "[[1,3,1]]", "--which", "superchar"}).out);
  CHECK(t["result"]["table"]["values"].size() == 8);
  CHECK(t["result"]["degree"]["coeffs"][0] == "2");
  CHECK(run_cli({"table", "--n", "3", "--q", "2", "--which", "nope"}).code == 2);
}

TEST_CASE("exit codes and error objects") {
  const Run bad = run_cli({"chain", "--n", "3", "--q", "6"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(Json::parse(bad.err)["error"]["code"] == 2);
  const Run cap = run_cli({"table", "--n", "7", "--q", "2", "--cap", "100"});
  CHECK(cap.code == 3);
  CHECK(cap.out.empty());
  CHECK(Json::parse(cap.err)["error"]["kind"] == "cap_exceeded");
  CHECK(run_cli({"chain", "--n", "3", "--lambda", "[[1,3"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("determinism") {
  const std::vector<std::string> args{"table", "--n", "3", "--q", "3", "--lambda", "[[1,2,1],[2,3,2]]", "--which", "kirillov"};
  CHECK(run_cli(args).out == run_cli(args).out);
  JobSpec job;
  job.command = "orbit";
  job.field = {2, 1, std::nullopt};
  job.n = 4;
  job.lambda = {{1, 4, 1}, {2, 3, 1}};
  job.which = "coadjoint";
  CHECK(cli::dump(cli::execute(job).output) == cli::dump(cli::execute(job).output));
}

}
