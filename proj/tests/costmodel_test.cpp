#include "toksmith/costmodel.hpp"

#include <gtest/gtest.h>

#include "toksmith/error.hpp"

namespace toksmith {
namespace {

const ModelArch kSevenB{.dim = 4096, .n_layers = 32, .n_heads = 32, .n_kv_heads = 32};
const std::vector<std::size_t> kGrid = {10000, 16000, 32000, 64000, 100000, 128000, 256000};

NslCurve realistic_curve() {
  return NslCurve({{10000, 1.13}, {16000, 1.07}, {32000, 1.0}, {64000, 0.94},
                   {100000, 0.915}, {128000, 0.90}, {256000, 0.87}});
}

TEST(NslCurveTest, Interpolation) {
  const NslCurve c({{16000, 1.08}, {32000, 1.0}, {64000, 0.92}});
  EXPECT_DOUBLE_EQ(c.at(32000), 1.0);
  EXPECT_DOUBLE_EQ(c.at(16000), 1.08);
  EXPECT_NEAR(c.at(40000), 0.98, 1e-12);
  EXPECT_NEAR(c.at(24000), 1.04, 1e-12);
  EXPECT_THROW(c.at(15999), RangeError);
  EXPECT_THROW(c.at(64001), RangeError);

  EXPECT_THROW(NslCurve({{16000, 1.08}, {64000, 0.92}}), ConfigError);  // no anchor knot
  const NslCurve other_anchor({{16000, 1.17}, {64000, 1.0}, {128000, 0.98}}, 64000);
  EXPECT_DOUBLE_EQ(other_anchor.at(64000), 1.0);
  EXPECT_EQ(other_anchor.anchor(), 64000u);
}

TEST(NslCurveTest, Validation) {
  EXPECT_THROW(NslCurve({{32000, 1.0}, {16000, 1.1}}), ConfigError);
  EXPECT_THROW(NslCurve({{16000, -1.0}, {32000, 1.0}}), ConfigError);
  EXPECT_THROW(NslCurve({{16000, 1.1}, {32000, 0.99}}), ConfigError);
  EXPECT_THROW(NslCurve({}), ConfigError);
}

TEST(NslCurveTest, JsonRoundTrip) {
  const NslCurve c = realistic_curve();
  const NslCurve back = NslCurve::parse(c.to_json());
  EXPECT_EQ(back.points(), c.points());
  EXPECT_EQ(back.anchor(), 32000u);
  EXPECT_THROW(NslCurve::parse("{\"points\": 3}"), ParseError);
  EXPECT_THROW(NslCurve::parse("[1, 2"), ParseError);
}

TEST(ParamsTest, EmbedExamples) {
  ModelArch a{.dim = 1600, .n_layers = 48, .n_heads = 25, .n_kv_heads = 25};
  EXPECT_EQ(embed_params(a, 32000), 102'400'000);
  EXPECT_EQ(embed_params(a, 0), 0);
  a.tied_embeddings = true;
  EXPECT_EQ(embed_params(a, 32000), 51'200'000);
}

TEST(ParamsTest, CacheFormula) {
  const NslCurve c = realistic_curve();
  EXPECT_DOUBLE_EQ(cache_params(kSevenB, 3, 1000, c, 32000), 2.0 * 32 * 3 * 4096 * 1000);
  EXPECT_DOUBLE_EQ(cache_params(kSevenB, 3, 1000, c, 64000), 2.0 * 32 * 3 * 4096 * 1000 * 0.94);
  EXPECT_THROW(cache_params(kSevenB, 1, 1000, c, 5000), RangeError);
  EXPECT_THROW(cache_params(kSevenB, 0, 1000, c, 32000), ConfigError);
}

TEST(ParamsTest, GroupedQueryCacheIsExactlyOneEighth) {
  const NslCurve c = realistic_curve();
  const ModelArch mha{.dim = 8192, .n_layers = 80, .n_heads = 64, .n_kv_heads = 64};
  ModelArch gqa = mha;
  gqa.n_kv_heads = 8;
  for (std::size_t v : kGrid) {
    EXPECT_EQ(cache_params(gqa, 7, 3000, c, v) * 8.0, cache_params(mha, 7, 3000, c, v));
  }
}

TEST(ArchTest, Validation) {
  EXPECT_NO_THROW(kSevenB.validate());
  ModelArch bad = kSevenB;
  bad.n_kv_heads = 64;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = kSevenB;
  bad.dim = 0;
  EXPECT_THROW(bad.validate(), ConfigError);
}

TEST(MemoryOptimalTest, SmallBatchShortContextPicksSmallestVocab) {
  const auto r = memory_optimal(kSevenB, 1, 1000, realistic_curve(), kGrid);
  EXPECT_EQ(r.best_vocab, 10000u);
  ASSERT_EQ(r.table.size(), kGrid.size());
  EXPECT_DOUBLE_EQ(r.table[0].total, r.table[0].embed + r.table[0].cache);
}

TEST(MemoryOptimalTest, LargeBatchLongContextPicksLargerVocab) {
  const auto small = memory_optimal(kSevenB, 1, 1000, realistic_curve(), kGrid);
  const auto large = memory_optimal(kSevenB, 64, 16000, realistic_curve(), kGrid);
  EXPECT_GT(large.best_vocab, small.best_vocab);
  EXPECT_EQ(large.best_vocab, 256000u);
}

TEST(MemoryOptimalTest, GroupedQueryShrinksOptimum) {
  ModelArch gqa = kSevenB;
  gqa.n_kv_heads = 4;
  const auto mha_r = memory_optimal(kSevenB, 8, 4096, realistic_curve(), kGrid);
  const auto gqa_r = memory_optimal(gqa, 8, 4096, realistic_curve(), kGrid);
  EXPECT_EQ(mha_r.best_vocab, 64000u);
  EXPECT_EQ(gqa_r.best_vocab, 16000u);
  EXPECT_LE(gqa_r.best_vocab, mha_r.best_vocab);
}

TEST(MemoryOptimalTest, InteriorOptimumIsLocalMinimum) {
  const auto r = memory_optimal(kSevenB, 8, 4096, realistic_curve(), kGrid);
  for (std::size_t i = 0; i < r.table.size(); ++i) {
    if (r.table[i].vocab != r.best_vocab) continue;
    if (i > 0) EXPECT_GE(r.table[i - 1].total, r.table[i].total);
    if (i + 1 < r.table.size()) EXPECT_GE(r.table[i + 1].total, r.table[i].total);
  }
}

TEST(MemoryOptimalTest, EdgeCases) {
  const std::vector<std::size_t> one = {100000};
  EXPECT_EQ(memory_optimal(kSevenB, 1, 1000, realistic_curve(), one).best_vocab, 100000u);
  EXPECT_THROW(memory_optimal(kSevenB, 1, 1000, realistic_curve(), {}), ConfigError);
  const std::vector<std::size_t> outside = {5000};
  EXPECT_THROW(memory_optimal(kSevenB, 1, 1000, realistic_curve(), outside), RangeError);
}

TEST(FitTest, ClosedForm) {
  const std::vector<std::pair<double, double>> pts = {{1, 2}, {2, 3}, {3, 5}};
  const LinearFit f = fit_line(pts);
  EXPECT_NEAR(f.slope, 1.5, 1e-12);
  EXPECT_NEAR(f.intercept, 1.0 / 3.0, 1e-12);
  const std::vector<std::pair<double, double>> flat = {{4, 1}, {4, 2}};
  EXPECT_THROW(fit_line(flat), FitError);
  const std::vector<std::pair<double, double>> single = {{4, 1}};
  EXPECT_THROW(fit_line(single), FitError);
}

TEST(InferenceOptimalTest, ExactLineAndAnchor) {
  InferenceObservations obs;
  for (std::size_t v : kGrid) obs["m"].push_back({v, 0.25 + 3e-6 * static_cast<double>(v)});
  const auto r = inference_optimal(obs, realistic_curve(), kGrid);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r[0].fit.slope, 3e-6, 1e-9);
  EXPECT_NEAR(r[0].fit.intercept, 0.25, 1e-9);
  for (const auto& row : r[0].table) {
    if (row.vocab == 32000) EXPECT_DOUBLE_EQ(row.cost, 1.0);
    EXPECT_DOUBLE_EQ(row.cost, row.nsl * row.time_norm);
  }
}

TEST(InferenceOptimalTest, SteeperSlopePrefersSmallerVocab) {
  InferenceObservations obs;
  for (std::size_t v : {16000u, 64000u, 128000u}) {
    obs["small"].push_back({v, 1.0 + 4e-6 * static_cast<double>(v)});
    obs["large"].push_back({v, 1.0 + 2e-7 * static_cast<double>(v)});
  }
  const auto r = inference_optimal(obs, realistic_curve(), kGrid);
  ASSERT_EQ(r.size(), 2u);
  const auto& large = r[0].model == "large" ? r[0] : r[1];
  const auto& small = r[0].model == "small" ? r[0] : r[1];
  EXPECT_LT(small.best_vocab, large.best_vocab);
  EXPECT_EQ(small.best_vocab, 32000u);
  EXPECT_EQ(large.best_vocab, 256000u);
}

TEST(InferenceOptimalTest, ObservationsJson) {
  InferenceObservations obs;
  obs["a"] = {{16000, 1.5}, {32000, 2.0}};
  EXPECT_EQ(parse_observations(observations_to_json(obs)), obs);
  EXPECT_THROW(parse_observations(R"({"models": {"a": [[16000, 1.5]]}})"), ParseError);
  obs["b"] = {{32000, 1.0}, {32000, 1.1}};
  EXPECT_THROW(inference_optimal(obs, realistic_curve(), kGrid), FitError);
}

TEST(ProxyTest, ProducesPositiveTimes) {
  EXPECT_GT(proxy_step_time(32, 1, 500, 1), 0.0);
}

}  // namespace
}  // namespace toksmith
