#include <doctest.h>

#include <fstream>
#include <json.hpp>

#include "springerkit/errors.hpp"
#include "springerkit/exceptional.hpp"

using namespace springerkit;

TEST_SUITE("exceptional") {
  TEST_CASE("label normalization") {
    CHECK(normalize_label("A_4 + A_3") == normalize_label("A3+A4"));
    CHECK(normalize_label("A1+2A2") == normalize_label("2A2+A1"));
    CHECK(normalize_label("(A1+A3)'") == normalize_label("(A3+A1)'"));
    CHECK(normalize_label("(3A_1)\xE2\x80\xB3") == "(3A1)''");
    CHECK(normalize_label("\xC3\x83" "1") == "~A1");
    CHECK(normalize_label("D4(a1)+A1") == normalize_label("A1+D4(a1)"));
    CHECK_THROWS_AS(normalize_label("  "), LabelError);
  }

  TEST_CASE("orbit table sizes") {
    CHECK(orbit_labels(ExceptionalType::G2).size() == 5);
    CHECK(orbit_labels(ExceptionalType::F4).size() == 16);
    CHECK(orbit_labels(ExceptionalType::E6).size() == 21);
    CHECK(orbit_labels(ExceptionalType::E7).size() == 45);
    CHECK(orbit_labels(ExceptionalType::E8).size() == 70);
  }

  TEST_CASE("exclusion lists match the golden file") {
    std::ifstream in(SPRINGERKIT_TEST_DATA "/exclusions.json");
    REQUIRE(in);
    const auto golden = nlohmann::json::parse(in);
    for (const auto& [name, lists] : golden.items()) {
      const auto type = parse_exceptional_type(name);
      CHECK(rigid_exclusions(type) == lists["rigid"].get<std::vector<std::string>>());
      CHECK(induced_exclusions(type) == lists["induced"].get<std::vector<std::string>>());
      for (const auto& label : lists["rigid"]) {
        const auto v = smooth_ov_verdict(type, label.get<std::string>());
        CHECK(v.verdict == (type == ExceptionalType::G2 ? Verdict::NoSmooth : Verdict::Unknown));
      }
      for (const auto& label : lists["induced"]) {
        CHECK(smooth_ov_verdict(type, label.get<std::string>()).source == name + ":induction-exclusion");
      }
    }
  }

  TEST_CASE("every excluded label is an orbit of its type") {
    for (auto type : {ExceptionalType::G2, ExceptionalType::F4, ExceptionalType::E6, ExceptionalType::E7,
                      ExceptionalType::E8}) {
      for (const auto& label : rigid_exclusions(type)) CHECK_NOTHROW(smooth_ov_verdict(type, label));
      for (const auto& label : induced_exclusions(type)) CHECK_NOTHROW(smooth_ov_verdict(type, label));
    }
  }

  TEST_CASE("verdicts") {
    const auto v = smooth_ov_verdict(ExceptionalType::E8, "A4+A3");
    CHECK(v.verdict == Verdict::Unknown);
    CHECK(v.source == "E8:rigid-exclusion");
    CHECK(smooth_ov_verdict(ExceptionalType::E8, "E8").verdict == Verdict::GuaranteedSmooth);
    CHECK(smooth_ov_verdict(ExceptionalType::G2, "A1").verdict == Verdict::NoSmooth);
    CHECK(smooth_ov_verdict(ExceptionalType::G2, "~A1").verdict == Verdict::GuaranteedSmooth);
    CHECK(smooth_ov_verdict(ExceptionalType::E7, "A5+A1").source == "E7:induction-exclusion");
    CHECK(smooth_ov_verdict(ExceptionalType::E6, "0").verdict == Verdict::GuaranteedSmooth);
    CHECK_THROWS_AS(smooth_ov_verdict(ExceptionalType::E6, "E7"), LabelError);
    CHECK_THROWS_AS(parse_exceptional_type("E9"), LabelError);
    CHECK(to_string(Verdict::GuaranteedSmooth) == "guaranteed-smooth");
  }
}
