#include "toksmith/tokenizer.hpp"

#include <limits>
#include <queue>
#include <unordered_set>

#include "toksmith/error.hpp"

namespace toksmith {
namespace {

constexpr TokenId kDead = std::numeric_limits<TokenId>::max();

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// One independent stream per chunk.
class ChunkRng {
 public:
  ChunkRng(std::uint64_t seed, std::uint64_t chunk_index)
      : state_(seed ^ (chunk_index * 0xD1B54A32D192ED03ULL)) {
    splitmix64(state_);
  }
  // Uniform in [0, 1).
  double next() { return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct Node {
  TokenId id;
  int prev;
  int next;
};

struct Candidate {
  std::uint32_t rank;
  int pos;
  TokenId left;
  TokenId right;

  bool operator>(const Candidate& o) const {
    return rank != o.rank ? rank > o.rank : pos > o.pos;
  }
};

}  // namespace

Tokenizer::Tokenizer(PretokenizerSpec spec) {
  std::vector<std::string> vocab;
  vocab.reserve(kByteVocabSize);
  for (std::size_t b = 0; b < kByteVocabSize; ++b) {
    vocab.emplace_back(1, static_cast<char>(b));
  }
  *this = Tokenizer(std::move(spec), std::move(vocab), {});
}

Tokenizer::Tokenizer(PretokenizerSpec spec, std::vector<std::string> vocab,
                     std::vector<Merge> merges) {
  auto data = std::make_shared<Data>();
  data->spec = std::move(spec);
  data->vocab = std::move(vocab);
  data->merges = std::move(merges);

  const auto& v = data->vocab;
  if (v.size() < kByteVocabSize) {
    throw ValidationError("vocab has " + std::to_string(v.size()) +
                          " entries; byte-level tokenizers need at least 256");
  }
  if (v.size() > std::numeric_limits<TokenId>::max() - 1) {
    throw ValidationError("vocab too large");
  }
  for (std::size_t b = 0; b < kByteVocabSize; ++b) {
    if (v[b].size() != 1 || static_cast<unsigned char>(v[b][0]) != b) {
      throw ValidationError("vocab[" + std::to_string(b) + "] must be the single byte " +
                            std::to_string(b));
    }
  }
  data->index.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].empty()) {
      throw ValidationError("vocab[" + std::to_string(i) + "] is empty");
    }
    if (!data->index.emplace(v[i], static_cast<TokenId>(i)).second) {
      throw ValidationError("vocab[" + std::to_string(i) + "] duplicates token " +
                            std::to_string(data->index.at(v[i])));
    }
  }

  std::unordered_set<TokenId> produced;
  data->ranks.reserve(data->merges.size());
  for (std::size_t r = 0; r < data->merges.size(); ++r) {
    const Merge& m = data->merges[r];
    const std::string where = "merges[" + std::to_string(r) + "]";
    if (m.left >= v.size() || m.right >= v.size() || m.result >= v.size()) {
      throw ValidationError(where + " references an id outside the vocab (size " +
                            std::to_string(v.size()) + ")");
    }
    if (m.result < kByteVocabSize) {
      throw ValidationError(where + " produces a byte token");
    }
    if (v[m.result] != v[m.left] + v[m.right]) {
      throw ValidationError(where + " output is not the concatenation of its operands");
    }
    if (!data->ranks.emplace(pair_key(m.left, m.right), static_cast<std::uint32_t>(r))
             .second) {
      throw ValidationError(where + " repeats an earlier pair");
    }
    if (!produced.insert(m.result).second) {
      throw ValidationError(where + " produces a token already produced by another merge");
    }
  }
  data_ = std::move(data);
}

const std::string& Tokenizer::token_bytes(TokenId id) const {
  if (id >= data_->vocab.size()) {
    throw DecodeError("token id " + std::to_string(id) + " out of range (vocab size " +
                      std::to_string(data_->vocab.size()) + ")");
  }
  return data_->vocab[id];
}

std::optional<TokenId> Tokenizer::find(std::string_view bytes) const {
  const auto it = data_->index.find(bytes);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

void Tokenizer::encode_chunk(std::string_view chunk, std::vector<TokenId>& out,
                             const DropoutPolicy* dropout,
                             std::uint64_t chunk_index) const {
  const int n = static_cast<int>(chunk.size());
  if (n == 0) return;
  if (n == 1) {
    out.push_back(static_cast<unsigned char>(chunk[0]));
    return;
  }

  std::vector<Node> nodes(n);
  for (int i = 0; i < n; ++i) {
    nodes[i] = {static_cast<unsigned char>(chunk[i]), i - 1, i + 1 < n ? i + 1 : -1};
  }

  const auto& ranks = data_->ranks;
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> heap;
  auto push = [&](int pos) {
    if (pos < 0) return;
    const int next = nodes[pos].next;
    if (next < 0) return;
    const auto it = ranks.find(pair_key(nodes[pos].id, nodes[next].id));
    if (it != ranks.end()) heap.push({it->second, pos, nodes[pos].id, nodes[next].id});
  };
  for (int i = 0; i + 1 < n; ++i) push(i);

  std::optional<ChunkRng> rng;
  if (dropout && dropout->p > 0.0) rng.emplace(dropout->seed, chunk_index);
  std::vector<Candidate> skipped;

  while (!heap.empty()) {
    const Candidate c = heap.top();
    heap.pop();
    Node& left = nodes[c.pos];
    if (left.id != c.left || left.next < 0 || nodes[left.next].id != c.right) continue;
    if (rng && rng->next() < dropout->p) {
      skipped.push_back(c);
      continue;
    }
    Node& right = nodes[left.next];
    left.id = data_->merges[c.rank].result;
    left.next = right.next;
    if (right.next >= 0) nodes[right.next].prev = c.pos;
    right.id = kDead;
    push(left.prev);
    push(c.pos);
    // Dropped candidates get a fresh draw at the next merge step.
    for (const Candidate& s : skipped) heap.push(s);
    skipped.clear();
  }

  for (int i = 0; i >= 0; i = nodes[i].next) out.push_back(nodes[i].id);
}

std::size_t Tokenizer::encode_into(std::string_view text, std::vector<TokenId>& out,
                                   const std::optional<DropoutPolicy>& dropout) const {
  const std::size_t before = out.size();
  const DropoutPolicy* policy = dropout ? &*dropout : nullptr;
  std::uint64_t chunk_index = 0;
  for (std::string_view chunk : data_->spec.split(text)) {
    encode_chunk(chunk, out, policy, chunk_index++);
  }
  return out.size() - before;
}

std::vector<TokenId> Tokenizer::encode(std::string_view text,
                                       const std::optional<DropoutPolicy>& dropout) const {
  std::vector<TokenId> ids;
  ids.reserve(text.size() / 2 + 1);
  encode_into(text, ids, dropout);
  return ids;
}

std::size_t Tokenizer::count_tokens(std::string_view text) const {
  std::vector<TokenId> ids;
  return encode_into(text, ids);
}

std::vector<TokenId> Tokenizer::encode_bytes(std::string_view bytes) const {
  std::vector<TokenId> ids;
  encode_chunk(bytes, ids, nullptr, 0);
  return ids;
}

std::string Tokenizer::decode(std::span<const TokenId> ids) const {
  const auto& vocab = data_->vocab;
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] >= vocab.size()) {
      throw DecodeError("token id " + std::to_string(ids[i]) + " at index " +
                        std::to_string(i) + " out of range (vocab size " +
                        std::to_string(vocab.size()) + ")");
    }
    out += vocab[ids[i]];
  }
  return out;
}

Tokenizer Tokenizer::truncated(std::size_t n_merges) const {
  if (n_merges > data_->merges.size()) {
    throw RangeError("cannot keep " + std::to_string(n_merges) + " merges; tokenizer has " +
                     std::to_string(data_->merges.size()));
  }
  std::vector<std::string> vocab(data_->vocab.begin(),
                                 data_->vocab.begin() + kByteVocabSize + n_merges);
  std::vector<Merge> merges(data_->merges.begin(), data_->merges.begin() + n_merges);
  return Tokenizer(data_->spec, std::move(vocab), std::move(merges));
}

}  // namespace toksmith
