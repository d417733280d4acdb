#include "doctest.h"

#include "fockradial/io.hpp"

#include <filesystem>

using namespace fockradial;
using namespace fockradial::io;
using TL = CoefficientMap::TermList;

TEST_CASE("hermite expansion round trip preserves terms exactly")
{
  const HermiteExpansion f(2, TL{{{0, 0}, {0.25, -1.5}}, {{2, 0}, {1.0 / 3.0, 0.0}}, {{1, 3}, {-7e-17, 2.5e300}}});
  const json j = to_json(f);
  CHECK(j["dim"] == 2);
  CHECK(!j.contains("space"));
  const auto g = hermite_expansion_from_json(json::parse(j.dump()));
  CHECK(g.dim() == 2);
  CHECK(g.terms() == f.terms());
}

TEST_CASE("terms are written in graded order")
{
  const HermiteExpansion f(2, TL{{{0, 2}, 1.0}, {{1, 0}, 1.0}, {{2, 0}, 1.0}, {{0, 0}, 1.0}});
  const json j = to_json(f);
  REQUIRE(j["terms"].size() == 4);
  CHECK(j["terms"][0]["alpha"] == json::array({0, 0}));
  CHECK(j["terms"][1]["alpha"] == json::array({1, 0}));
  CHECK(j["terms"][2]["alpha"] == json::array({2, 0}));
  CHECK(j["terms"][3]["alpha"] == json::array({0, 2}));
}

TEST_CASE("fock series round trip carries the space tag")
{
  const FockSeries F(3, TL{{{1, 0, 2}, {0.0, 1.0}}, {{0, 0, 0}, {2.0, 0.0}}});
  const json j = to_json(F);
  CHECK(j["space"] == "fock");
  const auto G = fock_series_from_json(json::parse(j.dump()));
  CHECK(G.terms() == F.terms());
}

TEST_CASE("space tags are enforced")
{
  const json fock = to_json(FockSeries::basis({1}));
  CHECK_THROWS_AS(hermite_expansion_from_json(fock), FormatError);
  const json hermite = to_json(HermiteExpansion::basis({1}));
  CHECK_THROWS_AS(fock_series_from_json(hermite), FormatError);
  json bad = fock;
  bad["space"] = "bargmann";
  CHECK_THROWS_AS(fock_series_from_json(bad), FormatError);
}

TEST_CASE("duplicate alpha is rejected")
{
  const json j = json::parse(R"({"dim": 1, "terms": [{"alpha": [2], "re": 1, "im": 0},
                                                   {"alpha": [2], "re": 3, "im": 0}]})");
  CHECK_THROWS_AS(hermite_expansion_from_json(j), FormatError);
}

TEST_CASE("malformed expansions raise FormatError")
{
  const char* cases[] = {
      R"([])",
      R"({"terms": []})",
      R"({"dim": 0, "terms": []})",
      R"({"dim": -1, "terms": []})",
      R"({"dim": 1})",
      R"({"dim": 1, "terms": [{"re": 1, "im": 0}]})",
      R"({"dim": 1, "terms": [{"alpha": [1, 2], "re": 1, "im": 0}]})",
      R"({"dim": 1, "terms": [{"alpha": [-1], "re": 1, "im": 0}]})",
      R"({"dim": 1, "terms": [{"alpha": [1.5], "re": 1, "im": 0}]})",
      R"({"dim": 1, "terms": [{"alpha": [1], "re": "x", "im": 0}]})",
      R"({"dim": 1, "terms": [{"alpha": [1], "re": 1}]})",
  };
  for (const char* text : cases) {
    CAPTURE(text);
    CHECK_THROWS_AS(hermite_expansion_from_json(json::parse(text)), FormatError);
  }
}

TEST_CASE("loaded degree cap covers high-degree terms")
{
  const json j = json::parse(R"({"dim": 1, "terms": [{"alpha": [90], "re": 1, "im": 0}]})");
  const auto f = hermite_expansion_from_json(j);
  CHECK(f.degree() == 90);
  CHECK(f.degree_cap() >= 90);
}

TEST_CASE("sampled function round trip")
{
  const auto s = SampledFunction::from_expansion(HermiteExpansion(2, TL{{{1, 1}, {1.0, 2.0}}}), 6);
  const json j = to_json(s);
  CHECK(j["weighting"] == "gaussian-factored");
  CHECK(j["n"] == 6);
  CHECK(j["values_re"].size() == 36);
  CHECK(is_sampled_function(j));
  CHECK(!is_sampled_function(to_json(HermiteExpansion::basis({1}))));
  const auto t = sampled_function_from_json(json::parse(j.dump()));
  CHECK(t.dim() == 2);
  CHECK(t.order() == 6);
  CHECK(t.values() == s.values());
}

TEST_CASE("malformed sampled functions raise FormatError")
{
  json j = to_json(SampledFunction::from_expansion(HermiteExpansion::basis({0}), 4));
  SUBCASE("wrong weighting")
  {
    j["weighting"] = "plain";
    CHECK_THROWS_AS(sampled_function_from_json(j), FormatError);
  }
  SUBCASE("length mismatch")
  {
    j["values_im"].push_back(0.0);
    CHECK_THROWS_AS(sampled_function_from_json(j), FormatError);
  }
  SUBCASE("grid size inconsistent with n")
  {
    j["n"] = 5;
    CHECK_THROWS_AS(sampled_function_from_json(j), FormatError);
  }
  SUBCASE("zero order")
  {
    j["n"] = 0;
    CHECK_THROWS_AS(sampled_function_from_json(j), FormatError);
  }
}

TEST_CASE("profile round trip")
{
  const RadialProfile p{3, {{1.0, 0.0}, {0.5, -0.25}, {0.0, 1e-300}}};
  const json j = to_json(p);
  CHECK(j["origin_dim"] == 3);
  const auto q = radial_profile_from_json(json::parse(j.dump()));
  CHECK(q.origin_dim == 3);
  CHECK(q.c == p.c);
  CHECK_THROWS_AS(radial_profile_from_json(json::parse(R"({"origin_dim": 0, "c": []})")), FormatError);
  CHECK_THROWS_AS(radial_profile_from_json(json::parse(R"({"c": []})")), FormatError);
  CHECK_THROWS_AS(radial_profile_from_json(json::parse(R"({"origin_dim": 1, "c": [1]})")), FormatError);
}

TEST_CASE("report round trip")
{
  RadialReport r;
  r.is_radial = true;
  r.odd_mass = 0.0;
  r.shell_deviations = {0.0, 1e-15};
  r.profile = RadialProfile{2, {{0.0, 0.0}, {0.7, 0.0}}};
  r.tol = 1e-9;
  const json j = to_json(r);
  CHECK(j["profile"].size() == 2);
  const auto s = radial_report_from_json(json::parse(j.dump()));
  CHECK(s.is_radial);
  CHECK(s.shell_deviations == r.shell_deviations);
  REQUIRE(s.profile);
  CHECK(s.profile->c == r.profile->c);
  CHECK(s.tol == r.tol);

  RadialReport n;
  n.odd_mass = 1.0;
  n.shell_deviations = {0.0};
  const auto m = radial_report_from_json(to_json(n));
  CHECK(!m.is_radial);
  CHECK(!m.profile);
  CHECK(m.odd_mass == 1.0);
  CHECK_THROWS_AS(radial_report_from_json(json::parse(R"({"is_radial": true})")), FormatError);
}

TEST_CASE("file helpers report failures as FormatError")
{
  const auto dir = std::filesystem::temp_directory_path() / "fockradial_test_io";
  std::filesystem::create_directories(dir);
  const auto good = dir / "f.json";
  write_text_file(good, to_json(HermiteExpansion::basis({1, 1})).dump());
  CHECK(hermite_expansion_from_json(read_json_file(good)).terms().size() == 1);

  const auto broken = dir / "broken.json";
  write_text_file(broken, "{\"dim\": 1, ");
  CHECK_THROWS_AS(read_json_file(broken), FormatError);
  CHECK_THROWS_AS(read_json_file(dir / "missing.json"), FormatError);
  CHECK_THROWS_AS(write_text_file(dir / "no" / "such" / "dir.json", "x"), FormatError);
  std::filesystem::remove_all(dir);
}
