#include <gtest/gtest.h>

#include "angulate/error.hpp"
#include "angulate/experiment_config.hpp"

using namespace angulate;

TEST(ExperimentConfig, NamesRoundTrip) {
  EXPECT_EQ(all_experiments().size(), 6u);
  for (ExperimentKind k : all_experiments()) EXPECT_EQ(parse_experiment(to_string(k)), k);
  EXPECT_THROW(parse_experiment("nope"), ParameterError);
}

TEST(ExperimentConfig, DefaultsValidate) {
  for (ExperimentKind k : all_experiments()) {
    const ExperimentConfig c = default_config(k);
    EXPECT_NO_THROW(c.validate()) << to_string(k);
    EXPECT_EQ(c.kind(), k);
  }
  const ExperimentConfig two = default_config(ExperimentKind::two_point_scaling);
  EXPECT_EQ(two.n_values.front(), 1 << 10);
  EXPECT_EQ(two.n_values.back(), 1 << 16);
  EXPECT_EQ(two.samples, 200);
  EXPECT_DOUBLE_EQ(two.tolerance("slope_low", 0), 0.22);
  EXPECT_DOUBLE_EQ(two.tolerance("missing", 7), 7);
}

TEST(ExperimentConfig, ParseOverridesDefaults) {
  const ExperimentConfig c = parse_config(
      R"({"name": "ball-volume", "n_values": [1024, 2048], "samples": 3, "seed": 99,
          "window": [0.1, 0.2], "tolerances": {"slope_low": 3.0}, "variant": "rooted"})");
  EXPECT_EQ(c.n_values, (std::vector<int>{1024, 2048}));
  EXPECT_EQ(c.samples, 3);
  EXPECT_EQ(c.seed, 99u);
  EXPECT_DOUBLE_EQ(c.window_low, 0.1);
  EXPECT_DOUBLE_EQ(c.window_high, 0.2);
  EXPECT_DOUBLE_EQ(c.tolerance("slope_low", 0), 3.0);
  EXPECT_DOUBLE_EQ(c.tolerance("slope_high", 0), 4.5);
  EXPECT_EQ(c.variant, VariantChoice::rooted);
}

TEST(ExperimentConfig, ParseRejects) {
  EXPECT_THROW(parse_config("not json"), ParameterError);
  EXPECT_THROW(parse_config("[1]"), ParameterError);
  EXPECT_THROW(parse_config(R"({"samples": 3})"), ParameterError);
  EXPECT_THROW(parse_config(R"({"name": "ise-tail", "bogus": 1})"), ParameterError);
  EXPECT_THROW(parse_config(R"({"name": "ise-tail", "samples": "many"})"), ParameterError);
  EXPECT_THROW(parse_config(R"({"name": "ise-tail", "window": [0.1]})"), ParameterError);
}

TEST(ExperimentConfig, ValidateRejects) {
  auto bad = [](auto mutate) {
    ExperimentConfig c = default_config(ExperimentKind::invariant_suite);
    mutate(c);
    EXPECT_THROW(c.validate(), ParameterError);
  };
  bad([](ExperimentConfig& c) { c.p_values.clear(); });
  bad([](ExperimentConfig& c) { c.n_values.clear(); });
  bad([](ExperimentConfig& c) { c.p_values = {1}; });
  bad([](ExperimentConfig& c) { c.n_values = {200, 100}; });
  bad([](ExperimentConfig& c) { c.samples = 0; });
  bad([](ExperimentConfig& c) { c.grid = 1; });
  bad([](ExperimentConfig& c) { c.alpha = 0; });
  bad([](ExperimentConfig& c) { c.window_low = 0.5; });
  bad([](ExperimentConfig& c) { c.radii = {0.1, -1}; });
  bad([](ExperimentConfig& c) { c.name = "unknown"; });
}

TEST(ExperimentConfig, JsonRoundTrip) {
  ExperimentConfig c = default_config(ExperimentKind::conjecture_gap);
  c.seed = 12345;
  c.radii = {0.5, 1.5};
  c.tolerances["x"] = 2.5;
  const ExperimentConfig back = parse_config(config_to_json(c));
  EXPECT_EQ(config_to_json(back), config_to_json(c));
}

TEST(VariantChoice, Parse) {
  EXPECT_EQ(parse_variant_choice("auto"), VariantChoice::automatic);
  EXPECT_EQ(parse_variant_choice("free"), VariantChoice::pointed);
  EXPECT_EQ(to_string(VariantChoice::rooted), "rooted");
  EXPECT_THROW(parse_variant_choice("x"), ParameterError);
}
