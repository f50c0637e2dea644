#include "toksmith/costmodel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "toksmith/error.hpp"

namespace toksmith {
namespace {

using nlohmann::json;

void require_grid(std::span<const std::size_t> grid) {
  if (grid.empty()) throw ConfigError("vocab grid is empty");
}

}  // namespace

void ModelArch::validate() const {
  if (dim <= 0 || n_layers <= 0 || n_heads <= 0 || n_kv_heads <= 0) {
    throw ConfigError("model dim, layers, heads and kv heads must all be positive");
  }
  if (n_kv_heads > n_heads) throw ConfigError("kv heads cannot exceed attention heads");
}

NslCurve::NslCurve(std::vector<std::pair<std::size_t, double>> points, std::size_t anchor)
    : points_(std::move(points)), anchor_(anchor) {
  if (points_.empty()) throw ConfigError("NSL curve has no points");
  bool has_anchor = false;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i > 0 && points_[i].first <= points_[i - 1].first) {
      throw ConfigError("NSL curve vocab sizes must be strictly increasing");
    }
    if (!(points_[i].second > 0.0) || !std::isfinite(points_[i].second)) {
      throw ConfigError("NSL curve values must be positive");
    }
    if (points_[i].first == anchor_) {
      if (std::abs(points_[i].second - 1.0) > 1e-12) {
        throw ConfigError("NSL curve value at the anchor vocab must be 1");
      }
      has_anchor = true;
    }
  }
  if (!has_anchor) {
    throw ConfigError("NSL curve lacks its anchor vocab " + std::to_string(anchor_));
  }
}

double NslCurve::at(std::size_t vocab) const {
  if (vocab < min_vocab() || vocab > max_vocab()) {
    throw RangeError("vocab " + std::to_string(vocab) + " outside the NSL curve range [" +
                     std::to_string(min_vocab()) + ", " + std::to_string(max_vocab()) + "]");
  }
  const auto hi = std::lower_bound(points_.begin(), points_.end(), vocab,
                                   [](const auto& p, std::size_t v) { return p.first < v; });
  if (hi->first == vocab) return hi->second;
  const auto lo = std::prev(hi);
  const double t = static_cast<double>(vocab - lo->first) /
                   static_cast<double>(hi->first - lo->first);
  return lo->second + (hi->second - lo->second) * t;
}

NslCurve NslCurve::parse(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("$: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
    throw ParseError("points: expected an array");
  }
  std::size_t anchor = kDefaultAnchor;
  if (const auto it = doc.find("anchor"); it != doc.end()) {
    if (!it->is_number_unsigned()) throw ParseError("anchor: expected a positive integer");
    anchor = it->get<std::size_t>();
  }
  std::vector<std::pair<std::size_t, double>> points;
  const json& arr = doc["points"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& p = arr[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number()) {
      throw ParseError("points[" + std::to_string(i) + "]: expected [vocab, nsl]");
    }
    points.emplace_back(p[0].get<std::size_t>(), p[1].get<double>());
  }
  try {
    return NslCurve(std::move(points), anchor);
  } catch (const ConfigError& e) {
    throw ParseError(std::string("points: ") + e.what());
  }
}

std::string NslCurve::to_json() const {
  json points = json::array();
  for (const auto& [v, n] : points_) points.push_back({v, n});
  return json{{"anchor", anchor_}, {"points", points}}.dump(2) + "\n";
}

std::int64_t embed_params(const ModelArch& arch, std::int64_t vocab) {
  return (arch.tied_embeddings ? 1 : 2) * arch.dim * vocab;
}

double cache_params(const ModelArch& arch, std::int64_t batch, std::int64_t seqlen_at_anchor,
                    const NslCurve& curve, std::size_t vocab) {
  arch.validate();
  if (batch <= 0 || seqlen_at_anchor <= 0) {
    throw ConfigError("batch and sequence length must be positive");
  }
  const double seqlen = static_cast<double>(seqlen_at_anchor) * curve.at(vocab);
  const double kv_ratio =
      static_cast<double>(arch.n_kv_heads) / static_cast<double>(arch.n_heads);
  return 2.0 * static_cast<double>(arch.n_layers) * static_cast<double>(batch) *
         static_cast<double>(arch.dim) * kv_ratio * seqlen;
}

MemoryOptimum memory_optimal(const ModelArch& arch, std::int64_t batch,
                             std::int64_t seqlen_at_anchor, const NslCurve& curve,
                             std::span<const std::size_t> grid) {
  require_grid(grid);
  MemoryOptimum out{0, {}};
  double best = std::numeric_limits<double>::infinity();
  for (const std::size_t v : grid) {
    const double embed = static_cast<double>(embed_params(arch, static_cast<std::int64_t>(v)));
    const double cache = cache_params(arch, batch, seqlen_at_anchor, curve, v);
    const double total = embed + cache;
    out.table.push_back({v, embed, cache, total});
    if (total < best || (total == best && v < out.best_vocab)) {
      best = total;
      out.best_vocab = v;
    }
  }
  return out;
}

LinearFit fit_line(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw FitError("linear fit needs at least two observations");
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : points) mx += x, my += y;
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0.0) throw FitError("linear fit is degenerate: all vocab sizes are equal");
  const double slope = sxy / sxx;
  return {my - slope * mx, slope};
}

InferenceObservations parse_observations(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("$: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("models") || !doc["models"].is_object()) {
    throw ParseError("models: expected an object");
  }
  InferenceObservations obs;
  for (const auto& [label, arr] : doc["models"].items()) {
    const std::string where = "models." + label;
    if (!arr.is_array()) throw ParseError(where + ": expected an array");
    auto& list = obs[label];
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const json& p = arr[i];
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number()) {
        throw ParseError(where + "[" + std::to_string(i) + "]: expected [vocab, time]");
      }
      list.emplace_back(p[0].get<std::size_t>(), p[1].get<double>());
    }
    if (list.size() < 2) throw ParseError(where + ": needs at least two observations");
  }
  return obs;
}

std::string observations_to_json(const InferenceObservations& obs) {
  json models = json::object();
  for (const auto& [label, list] : obs) {
    json arr = json::array();
    for (const auto& [v, t] : list) arr.push_back({v, t});
    models[label] = arr;
  }
  return json{{"models", models}}.dump(2) + "\n";
}

std::vector<InferenceOptimum> inference_optimal(const InferenceObservations& obs,
                                                const NslCurve& curve,
                                                std::span<const std::size_t> grid) {
  require_grid(grid);
  std::vector<InferenceOptimum> out;
  for (const auto& [label, list] : obs) {
    std::vector<std::pair<double, double>> points;
    for (const auto& [v, t] : list) points.emplace_back(static_cast<double>(v), t);
    InferenceOptimum opt{label, {}, 0, {}};
    try {
      opt.fit = fit_line(points);
    } catch (const FitError& e) {
      throw FitError(label + ": " + e.what());
    }
    const double at_anchor = opt.fit(static_cast<double>(curve.anchor()));
    if (!(at_anchor > 0.0)) {
      throw FitError(label + ": fitted time at the anchor vocab is not positive");
    }
    double best = std::numeric_limits<double>::infinity();
    for (const std::size_t v : grid) {
      const double nsl = curve.at(v);
      const double time_norm = opt.fit(static_cast<double>(v)) / at_anchor;
      const double cost = nsl * time_norm;
      opt.table.push_back({v, nsl, time_norm, cost});
      if (cost < best || (cost == best && v < opt.best_vocab)) {
        best = cost;
        opt.best_vocab = v;
      }
    }
    out.push_back(std::move(opt));
  }
  return out;
}

double proxy_step_time(std::int64_t dim, std::int64_t n_layers, std::size_t vocab,
                       int repeats) {
  if (dim <= 0 || n_layers <= 0 || vocab == 0 || repeats <= 0) {
    throw ConfigError("proxy benchmark needs positive dim, layers, vocab and repeats");
  }
  const auto d = static_cast<std::size_t>(dim);
  std::vector<float> hidden(d, 1.0f / static_cast<float>(d));
  std::vector<float> layer(d * d, 0.5f);
  std::vector<float> output(d * vocab, 0.25f);
  std::vector<float> scratch(std::max(d, vocab));
  volatile float sink = 0.0f;

  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<float> h = hidden;
    for (std::int64_t l = 0; l < n_layers; ++l) {
      for (std::size_t i = 0; i < d; ++i) {
        float acc = 0.0f;
        const float* w = layer.data() + i * d;
        for (std::size_t k = 0; k < d; ++k) acc += w[k] * h[k];
        scratch[i] = acc * 1e-3f;
      }
      std::copy_n(scratch.begin(), d, h.begin());
    }
    float max_logit = -std::numeric_limits<float>::infinity();
    for (std::size_t j = 0; j < vocab; ++j) {
      float acc = 0.0f;
      const float* w = output.data() + j * d;
      for (std::size_t k = 0; k < d; ++k) acc += w[k] * h[k];
      max_logit = std::max(max_logit, acc);
    }
    sink = sink + max_logit;
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    best = std::min(best, elapsed.count());
  }
  return best;
}

}  // namespace toksmith
