#include "ogus/report_io.hpp"

#include <doctest.h>

using namespace ogus;

TEST_SUITE("report_io") {

TEST_CASE("JSON and CSV round-trip every case") {
  for (CaseId id : all_cases()) {
    Report r = to_report(run_case({id, min_rank(id) + (id == CaseId::GL4_wedge2 ? 0 : 1), 3}));
    CAPTURE(r.case_key);
    CHECK(parse_json(emit_json(r)) == r);
    CHECK(parse_csv(emit_csv(r)) == r);
    CHECK(r.schema_version == kSchemaVersion);
  }
}

TEST_CASE("spin reports carry null clp") {
  Report r = to_report(run_case({CaseId::GSpin_spin_odd, 3, 3}));
  CHECK(emit_json(r).find("\"clp\": null") != std::string::npos);
  CHECK_FALSE(r.strata[0].clp.has_value());
}

TEST_CASE("output is deterministic") {
  auto a = emit_json(to_report(run_case({CaseId::GSp2n_wedge_dual, 3, 5})));
  auto b = emit_json(to_report(run_case({CaseId::GSp2n_wedge_dual, 3, 5})));
  CHECK(a == b);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json(R"({"schema_version": 2, "case": "x", "rank": 1, "prime": 2, "strata": []})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("word,length\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("# schema_version=1,case=x,rank=1,prime=2\nword,length,bruhat,ord,clp,ogus\na,b\n"),
                  std::invalid_argument);
}

}  // TEST_SUITE
