#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cohomog/report.hpp"

using namespace cohomog;

#ifndef SPECS_DIR
#define SPECS_DIR "specs"
#endif

namespace {

std::string spec_path(const std::string& name) {
  return std::string(SPECS_DIR) + "/" + name + ".spec";
}

ActionSpec load(const std::string& name) {
  return parse_spec_file(spec_path(name));
}

}  // namespace

TEST_CASE("compare_series passes on SU(3)/S^7 and matches the closed form") {
  ActionSpec spec = load("su3_s7");
  RingPresentation pres = present(spec, 40);
  VerificationReport r = compare_series(spec, pres, 40);
  CHECK(r.verdict());
  CHECK(r.first_mismatch_degree() == -1);
  PoincareSeries expected = (PoincareSeries::one(40) +
                             PoincareSeries::one(40).shifted(7)) *
                            PoincareSeries::geometric(4, 40) *
                            PoincareSeries::geometric(6, 40);
  for (const auto& row : r.rows) {
    int oracle = row.degree % 2 == 0 ? row.mv_even : row.mv_odd;
    CHECK(Rational(oracle) == expected.coeff(row.degree));
    CHECK(row.exactness_defect == 0);
  }
}

TEST_CASE("compare_series: odd column identically zero on o3_o2") {
  ActionSpec spec = load("o3_o2");
  RingPresentation pres = present(spec, 30);
  VerificationReport r = compare_series(spec, pres, 30);
  CHECK(r.verdict());
  for (const auto& row : r.rows) CHECK(row.mv_odd == 0);
}

TEST_CASE("compare_series catches a corrupted presentation") {
  ActionSpec spec = load("suspension_su2");
  RingPresentation pres = present(spec, 20);
  pres.shape.sphere_degree = 5;  // wrong exterior degree
  pres.series = series_from_shape(pres.shape, 20);
  VerificationReport r = compare_series(spec, pres, 20);
  CHECK(!r.verdict());
  CHECK(r.first_mismatch_degree() == 3);
}

TEST_CASE("product spotchecks are deterministic and pass") {
  ActionSpec spec = load("sp2");
  RingPresentation pres = present(spec, 20);
  VerificationReport a = compare_series(spec, pres, 20);
  product_spotchecks(spec, 10, 42, a);
  CHECK(!a.spotchecks.empty());
  for (const auto& s : a.spotchecks) CHECK(s.pass);

  VerificationReport b = compare_series(spec, pres, 20);
  product_spotchecks(spec, 10, 42, b);
  REQUIRE(a.spotchecks.size() == b.spotchecks.size());
  for (size_t i = 0; i < a.spotchecks.size(); ++i)
    CHECK(a.spotchecks[i].detail == b.spotchecks[i].detail);
}

TEST_CASE("freeness rows") {
  ActionSpec spec = load("u2_oddeven");
  VerificationReport r;
  r.truncation = 20;
  freeness_checks(spec, 20, r);
  REQUIRE(r.rows.empty());
  REQUIRE(r.freeness.size() == 2);
  CHECK(r.freeness[0].checked);
  CHECK(r.freeness[0].pass);
  CHECK(r.freeness[1].pass);

  // Non-orientable legs are skipped, not failed.
  VerificationReport o3;
  o3.truncation = 20;
  freeness_checks(load("o3_o2"), 20, o3);
  CHECK(!o3.freeness[0].checked);
  CHECK(o3.freeness[0].detail.find("skipped") != std::string::npos);
  CHECK(o3.verdict());

  // A mislabeled sphere dimension produces a fail row.
  ActionSpec bad = load("u2_oddeven");
  bad.n_plus = 5;
  VerificationReport fr;
  fr.truncation = 20;
  freeness_checks(bad, 20, fr);
  CHECK(!fr.verdict());
}

TEST_CASE("circle specs verify against the direct invariant count") {
  ActionSpec spec = load("torus_flip");
  RingPresentation pres = present(spec, 20);
  VerificationReport r = compare_series(spec, pres, 20);
  CHECK(r.verdict());
  CHECK(Rational(r.rows[1].mv_odd) == Rational(1));
  CHECK(r.rows[2].mv_even == 0);
  CHECK(r.rows[4].mv_even == 1);
}

TEST_CASE("spec files parse") {
  ActionSpec spec = load("su3_s7");
  CHECK(spec.name == "su3_s7");
  CHECK(spec.H.rank == 2);
  CHECK(spec.Kminus.weyl.order() == 2);
  CHECK(spec.orbit_type == ActionSpec::OrbitType::Interval);

  ActionSpec circle = load("torus_flip");
  CHECK(circle.orbit_type == ActionSpec::OrbitType::Circle);
  CHECK(circle.translation_aut == QMatrix{{Rational(-1)}});

  ActionSpec s4 = load("s4_oddodd");
  CHECK(s4.H.rank == 0);
  CHECK(s4.iota_minus.rows() == 0);
  CHECK(s4.iota_minus.cols() == 1);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_spec("orbit_type interval\nname x\n???"), ParseError);
  try {
    parse_spec("orbit_type interval\nname x\nsubgroup H {\n  rank 1\n"
               "  weyl generators {\n    [1 0; 0 1]\n  }\n}\n");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    // Non-square generator for the declared rank.
    CHECK(e.line == 6);
    CHECK(std::string(e.what()).find("1x1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_spec("orbit_type interval\nname x"), ParseError);
  CHECK_THROWS_AS(parse_spec("orbit_type nowhere"), ParseError);
  CHECK_THROWS_AS(parse_spec(""), ParseError);
}

TEST_CASE("rational matrix entries") {
  ActionSpec s = parse_spec(
      "orbit_type circle\nname half\n"
      "subgroup K { rank 1 weyl trivial }\n"
      "translation_aut [-1/2]\n");
  CHECK(s.translation_aut.at(0, 0) == Rational(-1, 2));
}

TEST_CASE("machine report round-trips exactly") {
  ActionSpec spec = load("su3_s7");
  RingPresentation pres = present(spec, 40);
  VerificationReport ver = full_verification(spec, pres, 40, 5, 0);
  std::string text = machine_report(spec, pres, &ver);
  nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["case"] == "EvenEven");
  CHECK(j["k"] == 3);
  CHECK(j["trichotomy"] == 3);
  CHECK(j["sphere_degree"] == 7);
  REQUIRE(j["series"].size() == 41);
  for (int d = 0; d <= 40; ++d)
    CHECK(*parse_rational(j["series"][d].get<std::string>()) ==
          pres.series.coeff(d));
  CHECK(j["verification"]["verdict"] == "pass");
  CHECK(j["generators"][0]["degree"] == 4);

  // Byte-identical on identical input.
  CHECK(machine_report(spec, pres, &ver) == text);
}

TEST_CASE("run exit codes") {
  std::ostringstream out, err;
  RunOptions opts;
  opts.max_degree = 20;

  CHECK(run(spec_path("sp2"), opts, out, err) == kExitSuccess);
  CHECK(run(spec_path("so3_rp3"), opts, out, err) ==
        kExitValidationFailure);
  CHECK(err.str().find("S^0 leg") != std::string::npos);
  CHECK(run("/nonexistent.spec", opts, out, err) == kExitParseError);
}

TEST_CASE("run with --verify reports the dihedral data") {
  std::ostringstream out, err;
  RunOptions opts;
  opts.max_degree = 40;
  opts.verify = true;
  CHECK(run(spec_path("su3_s7"), opts, out, err) == kExitSuccess);
  std::string text = out.str();
  CHECK(text.find("k = 3") != std::string::npos);
  CHECK(text.find("case III") != std::string::npos);
  CHECK(text.find("sphere degree 7") != std::string::npos);
  CHECK(text.find("verification: pass") != std::string::npos);
}
