#include "toksmith/trainer.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "toksmith/error.hpp"
#include "toksmith/utf8.hpp"

namespace toksmith {
namespace {

constexpr TokenId kDead = std::numeric_limits<TokenId>::max();
constexpr std::size_t kBatchDocs = 256;

using ChunkCounts = std::unordered_map<std::string, std::uint64_t>;

void count_chunks(const PretokenizerSpec& spec, std::span<const std::string> docs,
                  unsigned threads, ChunkCounts& counts) {
  threads = std::max(1u, std::min<unsigned>(threads, docs.size()));
  if (threads == 1) {
    for (const auto& doc : docs) {
      for (std::string_view chunk : spec.split(doc)) ++counts[std::string(chunk)];
    }
    return;
  }
  std::vector<ChunkCounts> partial(threads);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < docs.size(); i += threads) {
        for (std::string_view chunk : spec.split(docs[i])) {
          ++partial[t][std::string(chunk)];
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& p : partial) {
    for (auto& [chunk, n] : p) counts[chunk] += n;
  }
}

// Symbol sequences for all distinct chunks laid end to end, linked per
// chunk. Every position carries the multiplicity of its chunk.
class MergeState {
 public:
  MergeState(const ChunkCounts& counts, std::vector<std::string>& vocab)
      : vocab_(vocab), heap_(HeapOrder{&vocab}) {
    std::vector<std::pair<std::string_view, std::uint64_t>> sorted(counts.begin(),
                                                                   counts.end());
    std::sort(sorted.begin(), sorted.end());
    std::size_t total = 0;
    for (const auto& [chunk, n] : sorted) total += chunk.size();
    sym_.reserve(total);
    prev_.reserve(total);
    next_.reserve(total);
    weight_.reserve(total);
    for (const auto& [chunk, n] : sorted) {
      const auto base = static_cast<std::int32_t>(sym_.size());
      const auto len = static_cast<std::int32_t>(chunk.size());
      for (std::int32_t i = 0; i < len; ++i) {
        sym_.push_back(static_cast<unsigned char>(chunk[i]));
        prev_.push_back(i == 0 ? -1 : base + i - 1);
        next_.push_back(i + 1 < len ? base + i + 1 : -1);
        weight_.push_back(static_cast<std::int64_t>(n));
      }
    }
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(sym_.size()); ++i) {
      if (next_[i] >= 0) add(pair_key(sym_[i], sym_[next_[i]]), weight_[i], i);
    }
    for (const auto& [key, n] : count_) {
      if (n > 0) heap_.push({n, static_cast<TokenId>(key >> 32), static_cast<TokenId>(key)});
    }
  }

  // Pops the best mergeable pair, or nullopt when none is left.
  std::optional<std::pair<TokenId, TokenId>> best(
      const std::unordered_set<std::string>& existing) {
    while (!heap_.empty()) {
      const Entry top = heap_.top();
      heap_.pop();
      const std::uint64_t key = pair_key(top.left, top.right);
      const auto it = count_.find(key);
      if (it == count_.end() || it->second != top.count || top.count <= 0) continue;
      if (blocked_.contains(key)) continue;
      if (existing.contains(vocab_[top.left] + vocab_[top.right])) {
        blocked_.insert(key);
        continue;
      }
      return std::make_pair(top.left, top.right);
    }
    return std::nullopt;
  }

  void apply(TokenId left, TokenId right, TokenId result) {
    const std::uint64_t key = pair_key(left, right);
    std::vector<std::int32_t> positions = std::move(positions_[key]);
    positions_.erase(key);
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());

    touched_.clear();
    for (const std::int32_t pos : positions) {
      if (sym_[pos] != left) continue;
      const std::int32_t nx = next_[pos];
      if (nx < 0 || sym_[nx] != right) continue;
      const std::int64_t w = weight_[pos];
      const std::int32_t pv = prev_[pos];
      const std::int32_t nn = next_[nx];
      count_[key] -= w;
      if (pv >= 0) {
        add(pair_key(sym_[pv], left), -w, -1);
        add(pair_key(sym_[pv], result), w, pv);
      }
      if (nn >= 0) {
        add(pair_key(right, sym_[nn]), -w, -1);
        add(pair_key(result, sym_[nn]), w, pos);
        prev_[nn] = pos;
      }
      sym_[pos] = result;
      next_[pos] = nn;
      sym_[nx] = kDead;
    }
    for (const std::uint64_t k : touched_) {
      const std::int64_t n = count_[k];
      if (n > 0) heap_.push({n, static_cast<TokenId>(k >> 32), static_cast<TokenId>(k)});
    }
  }

 private:
  struct Entry {
    std::int64_t count;
    TokenId left;
    TokenId right;
  };
  // Max-heap order: higher count, then smaller left bytes, then smaller
  // right bytes.
  struct HeapOrder {
    const std::vector<std::string>* vocab;
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.count != b.count) return a.count < b.count;
      const auto& v = *vocab;
      if (a.left != b.left) return v[a.left] > v[b.left];
      return v[a.right] > v[b.right];
    }
  };

  void add(std::uint64_t key, std::int64_t delta, std::int32_t pos) {
    count_[key] += delta;
    if (pos >= 0) positions_[key].push_back(pos);
    touched_.push_back(key);
  }

  std::vector<std::string>& vocab_;
  std::vector<TokenId> sym_;
  std::vector<std::int32_t> prev_;
  std::vector<std::int32_t> next_;
  std::vector<std::int64_t> weight_;
  std::unordered_map<std::uint64_t, std::int64_t> count_;
  std::unordered_map<std::uint64_t, std::vector<std::int32_t>> positions_;
  std::unordered_set<std::uint64_t> blocked_;
  std::vector<std::uint64_t> touched_;
  std::priority_queue<Entry, std::vector<Entry>, HeapOrder> heap_;
};

}  // namespace

DocumentSource documents_from(std::span<const std::string> docs) {
  return [docs, i = std::size_t{0}]() mutable -> std::optional<std::string> {
    if (i >= docs.size()) return std::nullopt;
    return docs[i++];
  };
}

Tokenizer train(const PretokenizerSpec& spec, const DocumentSource& corpus,
                const TrainOptions& options) {
  if (options.target_vocab < kByteVocabSize) {
    throw ConfigError("target vocab " + std::to_string(options.target_vocab) +
                      " is below the 256 byte tokens");
  }

  ChunkCounts counts;
  std::size_t consumed = 0;
  std::vector<std::string> batch;
  bool budget_hit = false;
  while (!budget_hit) {
    std::optional<std::string> doc = corpus();
    if (doc) {
      if (options.char_budget) {
        const std::size_t left = *options.char_budget - consumed;
        const std::size_t n = utf8::count_scalars(*doc);
        if (n >= left) {
          doc->resize(utf8::prefix_bytes(*doc, left));
          budget_hit = true;
          consumed += left;
        } else {
          consumed += n;
        }
      } else {
        consumed += utf8::count_scalars(*doc);
      }
      if (!doc->empty()) batch.push_back(std::move(*doc));
    }
    if (!doc || budget_hit || batch.size() >= kBatchDocs) {
      count_chunks(spec, batch, options.threads, counts);
      batch.clear();
    }
    if (!doc) break;
  }
  if (consumed == 0) throw TrainingError("training corpus is empty");

  std::vector<std::string> vocab;
  vocab.reserve(options.target_vocab);
  std::unordered_set<std::string> existing;
  for (std::size_t b = 0; b < kByteVocabSize; ++b) {
    vocab.emplace_back(1, static_cast<char>(b));
    existing.insert(vocab.back());
  }
  std::vector<Merge> merges;

  if (options.target_vocab > kByteVocabSize) {
    MergeState state(counts, vocab);
    counts.clear();
    while (vocab.size() < options.target_vocab) {
      const auto pair = state.best(existing);
      if (!pair) break;
      const auto result = static_cast<TokenId>(vocab.size());
      vocab.push_back(vocab[pair->first] + vocab[pair->second]);
      existing.insert(vocab.back());
      merges.push_back({pair->first, pair->second, result});
      state.apply(pair->first, pair->second, result);
    }
  }
  return Tokenizer(spec, std::move(vocab), std::move(merges));
}

}  // namespace toksmith
