#include <gtest/gtest.h>

#include <json.hpp>

#include "conelab/report/report.hpp"
#include "conelab/report/scenarios.hpp"

using namespace conelab;
using namespace conelab::report;

namespace {

ScenarioConfig config(std::string scenario, std::map<std::string, std::string> params = {}) {
  ScenarioConfig c;
  c.scenario = std::move(scenario);
  c.params = std::move(params);
  return c;
}

std::string usage_field(const ScenarioConfig& c) {
  try {
    (void)run(c);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "usage");
    // what() is "usage: <field>: ...".
    const std::string w = e.what();
    const auto start = w.find(": ") + 2;
    return w.substr(start, w.find(':', start) - start);
  }
  ADD_FAILURE() << "no usage error";
  return "";
}

} // namespace

TEST(Render, EmptyReport) {
  Report r;
  r.scenario = "empty";
  const auto doc = nlohmann::json::parse(render(r, Format::json));
  EXPECT_TRUE(doc["checks"].is_array());
  EXPECT_TRUE(doc["checks"].empty());
  EXPECT_TRUE(doc["pass"].get<bool>());
  EXPECT_EQ(render(r, Format::csv), "name,value\nscenario,empty\n");
}

TEST(Render, FieldsAndCsvQuoting) {
  Report r;
  r.scenario = "fields";
  r.results["q"] = make_rational(-6, 4);
  r.results["inf"] = ExtRational::pos_inf();
  r.results["d"] = 0.1 + 0.2;
  r.results["s"] = std::string("a,b");
  r.check("ok", true);
  r.check("bad", false, "why");
  EXPECT_FALSE(r.pass());
  const std::string csv = render(r, Format::csv);
  EXPECT_NE(csv.find("q,-3/2\n"), std::string::npos);
  EXPECT_NE(csv.find("s,\"a,b\"\n"), std::string::npos);
  EXPECT_NE(csv.find("check:bad,fail\n"), std::string::npos);
  const auto doc = nlohmann::json::parse(render(r, Format::json));
  EXPECT_EQ(doc["results"]["q"], "-3/2");
  EXPECT_DOUBLE_EQ(doc["results"]["d"].get<double>(), 0.3);
  EXPECT_FALSE(doc["pass"].get<bool>());
}

TEST(Render, JsonRoundTrip) {
  for (const char* s : {"kretschmer-gap", "soc", "pathology", "hilbert"}) {
    const std::string text = render(run(config(s)), Format::json);
    const auto doc = nlohmann::json::parse(text);
    EXPECT_EQ(doc.dump(2) + "\n", text) << s;
  }
}

TEST(Run, GapScenario) {
  const auto rep = run(config("kretschmer-gap", {{"alpha", "2"}, {"delta", "0"}, {"gamma", "0"}, {"cells", "8"}}));
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(std::get<Rational>(rep.results.at("primal")), Rational(2));
  EXPECT_EQ(std::get<Rational>(rep.results.at("dual")), Rational(1));
  const std::string csv = render(rep, Format::csv);
  EXPECT_NE(csv.find("\ngap,1/1\n"), std::string::npos);
  EXPECT_NE(csv.find("param.alpha,2/1\n"), std::string::npos);
}

TEST(Run, SocScenario) {
  const auto rep = run(config("soc", {{"y", "5,3,0"}}));
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(std::get<ExtRational>(rep.results.at("value")), ExtRational(Rational(3)));
  EXPECT_EQ(std::get<ExtRational>(rep.results.at("biconjugate")), ExtRational(Rational(0)));
  EXPECT_TRUE(std::get<bool>(rep.results.at("lsc_violated")));
}

TEST(Run, PathologyScenario) {
  const auto rep = run(config("pathology"));
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(std::get<ExtRational>(rep.results.at("lsc_at_0.liminf")), ExtRational(Rational(-1)));
  EXPECT_EQ(std::get<ExtRational>(rep.results.at("lsc_at_0.value")), ExtRational(Rational(0)));
  EXPECT_EQ(std::get<ExtRational>(rep.results.at("lsc_at_minus_e1.liminf")), ExtRational(Rational(-2)));
  EXPECT_EQ(std::get<ExtRational>(rep.results.at("lsc_at_minus_e1.value")), ExtRational(Rational(-1)));
}

TEST(Run, FailingCheckIsReported) {
  // The brute-force grid on [0, 10] in steps of 1/40 cannot reach y2 = 0.3.
  const auto rep = run(config("soc", {{"y", "1,0.3,0"}}));
  EXPECT_FALSE(rep.pass());
}

TEST(Run, Deterministic) {
  for (const auto& [name, params] : scenario_params()) {
    (void)params;
    if (name == "unbounded" || name == "sublinear-checks") continue;  // covered by the acceptance run
    auto c = config(name);
    c.seed = 42;
    EXPECT_EQ(render(run(c), Format::json), render(run(c), Format::json)) << name;
    c.format = Format::csv;
    EXPECT_EQ(render(run(c), Format::csv), render(run(c), Format::csv)) << name;
  }
}

TEST(Run, UsageErrorsNameTheField) {
  EXPECT_EQ(usage_field(config("nope")), "scenario");
  EXPECT_EQ(usage_field(config("soc", {{"alpha", "2"}})), "alpha");
  EXPECT_EQ(usage_field(config("kretschmer", {{"alpha", "two"}})), "alpha");
  EXPECT_EQ(usage_field(config("kretschmer", {{"cells", "-4"}})), "cells");
  EXPECT_EQ(usage_field(config("kretschmer", {{"mode", "fast"}})), "mode");
  EXPECT_EQ(usage_field(config("soc", {{"y", "1,x,0"}})), "y");
  auto c = config("soc");
  c.tol = -1;
  EXPECT_EQ(usage_field(c), "tol");
}
