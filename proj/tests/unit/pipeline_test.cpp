#include <doctest.h>

#include <stdexcept>

#include "cablecone/cfk_io.hpp"
#include "cablecone/pipeline.hpp"
#include "test_paths.hpp"

using namespace cablecone;

namespace {

Report run(Int q, Int n, SurgerySpec spec = SurgerySpec::plus_one()) {
  return run_pipeline(PipelineInput{"torus:2," + std::to_string(q), staircase_t2(q), n, spec, std::nullopt, false});
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("cfk trefoil with unicode minus") {
    const KnotComplex k = parse_cfk(read_test_file("trefoil.cfk"));
    REQUIRE(k.size() == 3);
    CHECK(find_relabelling(k, staircase_t2(3), -1, -1));
    CHECK_FALSE(find_relabelling(k, staircase_t2(3)));
  }

  TEST_CASE("cfk edge cases") {
    CHECK(parse_cfk("").size() == 0);
    CHECK(parse_cfk("# only a comment\n\n   \n").size() == 0);
    try {
      parse_cfk("arrow a b 1 0");
      FAIL("expected a parse error");
    } catch (const CfkParseError& e) {
      CHECK(e.line() == 1);
    }
    CHECK_THROWS_AS(parse_cfk("gen a 0 0\ngen a 2 2\n"), CfkParseError);
    CHECK_THROWS_AS(parse_cfk("gen a 0 0\ngen b 0 x\n"), CfkParseError);
    CHECK_THROWS_AS(parse_cfk("gen a 0 0\ngen b 0 0\narrow a b -1 0\n"), CfkParseError);
    CHECK_THROWS_AS(parse_cfk("frob a\n"), CfkParseError);
    try {
      parse_cfk("gen a 0 0\ngen b 0 0\narrow a b 0 0\n");
      FAIL("expected a validation error");
    } catch (const CfkValidationError& e) {
      CHECK_FALSE(e.violations().empty());
    }
  }

  TEST_CASE("cfk round trip") {
    for (const KnotComplex& k : {staircase_t2(1), staircase_t2(7), tensor(staircase_t2(3), dual(staircase_t2(5)))})
      CHECK(parse_cfk(format_cfk(k)) == k);
  }

  TEST_CASE("flag parsing") {
    CHECK(knot_from_spec("torus:2,5") == staircase_t2(5));
    CHECK_THROWS_AS(knot_from_spec("torus:3,4"), InputError);
    CHECK_THROWS_AS(knot_from_spec("torus:2,4"), InputError);
    CHECK(parse_surgery("1") == SurgerySpec::plus_one());
    CHECK(parse_surgery("1/3") == SurgerySpec::one_over(3));
    CHECK_THROWS_AS(parse_surgery("2"), InputError);
    CHECK(parse_window("−2,5") == Window{-2, 5});
    CHECK_THROWS_AS(parse_window("3"), InputError);
  }

  TEST_CASE("rationals") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("−6/8") == Rational(-3, 4));
    CHECK(Rational(4, -2).to_string() == "-2/1");
    CHECK_THROWS_AS(checked_mul(Int{1} << 62, 4), std::overflow_error);
  }

  TEST_CASE("trefoil n=2 report") {
    const Report r = run(3, 2);
    CHECK(r.standard_sequence == std::vector<Int>{-1, 2, 1, -1, -2, 1});
    CHECK(exit_code(r) == 0);
    const std::string json = serialize_report(r, ReportFormat::Json);
    CHECK(json.find("\"standard_sequence\":[-1,2,1,-1,-2,1]") != std::string::npos);
    CHECK(json.find("\"d_invariant\":\"-2/1\"") != std::string::npos);
  }

  TEST_CASE("T(2,11) n=2 report") {
    const Report r = run(11, 2);
    CHECK(r.phi_ij.at({3, 2}) == -1);
    CHECK(r.phi_ij.at({4, 2}) == -1);
    CHECK(r.phi_ij.at({1, 0}) == 1);
    CHECK(r.standard_sequence_status == "not_applicable");
    CHECK(exit_code(r) == 0);
  }

  TEST_CASE("unknot report") {
    const Report r = run(1, 1);
    CHECK(r.d_invariant == Rational(0));
    CHECK(r.standard_sequence.empty());
    const std::string json = serialize_report(r, ReportFormat::Json);
    CHECK(json.find("\"reduced_differential\":[]") != std::string::npos);
    CHECK(json.find("\"standard_sequence\":[]") != std::string::npos);
    CHECK(json.find("\"phi\":[]") != std::string::npos);
  }

  TEST_CASE("json round trip and determinism") {
    for (const Report& r : {run(3, 2), run(5, 3, SurgerySpec::one_over(2)), run(11, 2)}) {
      const std::string json = serialize_report(r, ReportFormat::Json);
      CHECK(parse_report_json(json) == r);
      CHECK(serialize_report(parse_report_json(json), ReportFormat::Json) == json);
    }
    CHECK(serialize_report(run(7, 3), ReportFormat::Text) == serialize_report(run(7, 3), ReportFormat::Text));
    CHECK_THROWS_AS(parse_report_json("{\"input\":3}"), InputError);
  }

  TEST_CASE("mirror and windows") {
    PipelineInput in{"torus:2,3", staircase_t2(3), 1, SurgerySpec::plus_one(), std::nullopt, true};
    const Report m = run_pipeline(in);
    CHECK(m.mirror);
    CHECK(m.cfk == format_cfk(dual(staircase_t2(3))));
    in.mirror = false;
    in.window = Window{0, 0};
    CHECK_THROWS_AS(run_pipeline(in), InputError);
  }

  TEST_CASE("incomplete standardization exits with 2") {
    Report r = run(3, 1);
    r.standard_complex_x_status = "incomplete";
    CHECK(exit_code(r) == 2);
  }
}
