#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toksmith {

struct ModelArch {
  std::int64_t dim = 0;
  std::int64_t n_layers = 0;
  std::int64_t n_heads = 0;
  std::int64_t n_kv_heads = 0;
  bool tied_embeddings = false;

  // Throws ConfigError unless all sizes are positive and
  // n_kv_heads <= n_heads.
  void validate() const;
};

// Compression relative to the anchor member of a tokenizer family trained
// on the same data: value(v) = tokens at vocab v / tokens at anchor vocab.
// The conventional anchor is 32000.
class NslCurve {
 public:
  static constexpr std::size_t kDefaultAnchor = 32000;

  // Throws ConfigError: vocab sizes must strictly increase, values must be
  // positive, and the anchor must be a knot with value 1.
  explicit NslCurve(std::vector<std::pair<std::size_t, double>> points,
                    std::size_t anchor = kDefaultAnchor);

  // Piecewise-linear interpolation, exact at knots. Throws RangeError
  // outside [min_vocab, max_vocab].
  double at(std::size_t vocab) const;

  std::size_t anchor() const { return anchor_; }
  std::size_t min_vocab() const { return points_.front().first; }
  std::size_t max_vocab() const { return points_.back().first; }
  const std::vector<std::pair<std::size_t, double>>& points() const { return points_; }

  // {"anchor": 32000, "points": [[16000, 1.08], [32000, 1.0], ...]}
  static NslCurve parse(std::string_view json_text);
  std::string to_json() const;

 private:
  std::vector<std::pair<std::size_t, double>> points_;
  std::size_t anchor_;
};

// Extra embedding parameters for vocab v: 2*dim*v, or dim*v when the input
// and output matrices are shared.
std::int64_t embed_params(const ModelArch& arch, std::int64_t vocab);

// KV-cache entries: 2 * layers * batch * dim * (kv_heads / heads) * s(v),
// where s(v) = seqlen_at_anchor * curve.at(v).
double cache_params(const ModelArch& arch, std::int64_t batch,
                    std::int64_t seqlen_at_anchor, const NslCurve& curve, std::size_t vocab);

struct MemoryRow {
  std::size_t vocab;
  double embed;
  double cache;
  double total;
};

struct MemoryOptimum {
  std::size_t best_vocab;
  std::vector<MemoryRow> table;
};

// argmin over the grid of embed_params + cache_params; ties pick the
// smaller vocab. Throws ConfigError for an empty grid.
MemoryOptimum memory_optimal(const ModelArch& arch, std::int64_t batch,
                             std::int64_t seqlen_at_anchor, const NslCurve& curve,
                             std::span<const std::size_t> grid);

struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
  double operator()(double x) const { return intercept + slope * x; }
};

// Ordinary least squares. Throws FitError for fewer than two points or
// when all x are equal.
LinearFit fit_line(std::span<const std::pair<double, double>> points);

// Per model label: (vocab size, wall time) at a fixed sequence length.
using InferenceObservations = std::map<std::string, std::vector<std::pair<std::size_t, double>>>;

// {"models": {"1.5B": [[16000, 0.81], [32000, 0.84]], ...}}
InferenceObservations parse_observations(std::string_view json_text);
std::string observations_to_json(const InferenceObservations& obs);

struct InferenceRow {
  std::size_t vocab;
  double nsl;
  double time_norm;
  double cost;
};

struct InferenceOptimum {
  std::string model;
  LinearFit fit;
  std::size_t best_vocab;
  std::vector<InferenceRow> table;
};

// Fits time(v) per model, normalizes it to the curve's anchor vocab, and
// minimizes cost(v) = curve.at(v) * time(v) / time(anchor) over the grid
// (ties pick the smaller vocab).
std::vector<InferenceOptimum> inference_optimal(const InferenceObservations& obs,
                                                const NslCurve& curve,
                                                std::span<const std::size_t> grid);

// Proxy timing for one decoding step of a model with the given shape: a
// dense layer stack of dim x dim products plus the dim x vocab output
// projection, measured on this CPU. Seconds per step, best of `repeats`.
// Only a stand-in for real accelerator measurements.
double proxy_step_time(std::int64_t dim, std::int64_t n_layers, std::size_t vocab,
                       int repeats = 3);

}  // namespace toksmith
