#include <gtest/gtest.h>

#include "fe/error.hpp"
#include "fe/gallery.hpp"
#include "fe/io/json.hpp"
#include "helpers.hpp"
#include "random.hpp"

namespace fe {
namespace {

using io::Json;
using test::var;

TEST(Json, ValueRoundTrip) {
  const auto t = test::algebraic({"theta1", "pi"});
  const SymReal v = parse_symreal("3/2 + 1/2*theta1 - pi^2*theta1", t);
  EXPECT_EQ(io::read_value(io::write_value(v), t), v);
  EXPECT_EQ(io::read_value(io::write_coefficient_map(v), t), v);
  EXPECT_EQ(io::read_value(Json("-7/3"), nullptr), SymReal(test::q(-7, 3)));
  EXPECT_EQ(io::read_value(Json(5), nullptr), SymReal(5));
  EXPECT_THROW(io::read_value(Json(0.5), nullptr), InputError);
}

TEST(Json, PolyRoundTrip) {
  testing::Rng rng(81);
  const auto symbols = testing::make_symbols("theta", 2, IndependenceMode::Algebraic);
  for (int i = 0; i < 30; ++i) {
    MultiPoly p = testing::random_max_degree_poly(rng, 2, 2);
    p = p * (var(2, 0) * symbols[0] + var(2, 1) * symbols[1].pow(2));
    const Json j = io::write_poly(p);
    EXPECT_EQ(io::read_poly(j), p);
    EXPECT_EQ(io::write_poly(io::read_poly(j)).dump(), j.dump());
  }
}

TEST(Json, GeneratorsRoundTrip) {
  testing::Rng rng(82);
  const auto symbols = testing::make_symbols("theta", 2, IndependenceMode::QLinear);
  for (int i = 0; i < 20; ++i) {
    const GeneratorSet g = testing::random_injective_generators(rng, 1 + static_cast<std::size_t>(i % 3), symbols);
    const GeneratorSet back = io::read_generators(io::write_generators(g));
    EXPECT_EQ(back.generators(), g.generators());
  }
}

TEST(Json, FunctionRoundTrip) {
  const auto theta = gallery::default_theta(2);
  const std::vector<SampledFunction> fs{
      gallery::multivariate_counterexample(2, 2, theta).function,
      gallery::montel_optimality_instance(2, 3, 1).function,
      SampledFunction::whole_space(var(2, 0) * var(2, 1)),
      SampledFunction::table(1, {{{SymReal(1)}, SymReal(2)}, {{SymReal(3)}, SymReal(-1)}}),
  };
  for (const auto& f : fs) {
    const Json j = io::write_function(f);
    EXPECT_EQ(io::write_function(io::read_function(j)).dump(), j.dump());
  }
}

TEST(Json, GridRoundTrip) {
  testing::Rng rng(83);
  const auto symbols = testing::make_symbols("theta", 1, IndependenceMode::Algebraic);
  for (int i = 0; i < 20; ++i) {
    const auto g = testing::random_grid(rng, 3, 24, symbols);
    const auto back = io::read_grid(io::write_grid(g));
    EXPECT_EQ(back.grid.axes, g.grid.axes);
    EXPECT_EQ(back.values, g.values);
  }
}

TEST(Json, MalformedTextReportsOffset) {
  try {
    io::parse_text("{\"a\": [1, 2,,]}");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos) << e.what();
  }
}

TEST(Json, GridRejectsDuplicatesAndGaps) {
  const Json dup = io::parse_text(
      R"({"axes": [[0, 1]], "values": [{"index": [0], "value": 1}, {"index": [0], "value": 2}]})");
  EXPECT_THROW(io::read_grid(dup), InputError);
  const Json gap = io::parse_text(R"({"axes": [[0, 1]], "values": [{"index": [0], "value": 1}]})");
  EXPECT_THROW(io::read_grid(gap), InputError);
}

TEST(Json, ReportShape) {
  VerificationReport r("demo");
  r.record("a", true);
  r.record("b", false, "x=1", {{"lhs", SymReal(1)}});
  r.set_fact("answer", "42");
  r.add_label("flagged");
  const Json j = io::write_report(r);
  EXPECT_EQ(j.at("pass"), false);
  EXPECT_EQ(j.at("checked"), 2);
  EXPECT_EQ(j.at("answer"), "42");
  EXPECT_EQ(j.at("witnesses").size(), 1U);
  EXPECT_EQ(j.at("witnesses")[0].at("check"), "b");
  EXPECT_EQ(j.at("labels")[0], "flagged");
}

}  // namespace
}  // namespace fe
