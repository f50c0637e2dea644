#include "toksmith/adapt.hpp"

#include <string>
#include <vector>

#include "toksmith/error.hpp"

namespace toksmith {

EmbeddingMatrix fvt_transfer(const Tokenizer& old_tok, const Tokenizer& new_tok,
                             const EmbeddingMatrix& old_matrix) {
  if (old_matrix.rows() != old_tok.vocab_size()) {
    throw ValidationError("embedding matrix has " + std::to_string(old_matrix.rows()) +
                          " rows but the old tokenizer has " +
                          std::to_string(old_tok.vocab_size()) + " tokens");
  }
  const std::size_t cols = old_matrix.cols();
  EmbeddingMatrix out(new_tok.vocab_size(), cols);
  std::vector<double> acc(cols);
  for (std::size_t id = 0; id < new_tok.vocab_size(); ++id) {
    const std::string& bytes = new_tok.token_bytes(static_cast<TokenId>(id));
    auto dst = out.row(id);
    if (const auto same = old_tok.find(bytes)) {
      const auto src = old_matrix.row(*same);
      std::copy(src.begin(), src.end(), dst.begin());
      continue;
    }
    const std::vector<TokenId> parts = old_tok.encode_bytes(bytes);
    std::fill(acc.begin(), acc.end(), 0.0);
    for (const TokenId p : parts) {
      const auto src = old_matrix.row(p);
      for (std::size_t c = 0; c < cols; ++c) acc[c] += src[c];
    }
    const auto n = static_cast<double>(parts.size());
    for (std::size_t c = 0; c < cols; ++c) dst[c] = static_cast<float>(acc[c] / n);
  }
  return out;
}

Tokenizer merge_tokenizers(const Tokenizer& base, const Tokenizer& domain,
                           const PretokenizerSpec& filter) {
  for (const Tokenizer* t : {&base, &domain}) {
    for (std::size_t b = 0; b < kByteVocabSize; ++b) {
      const std::string& tok = t->token_bytes(static_cast<TokenId>(b));
      if (tok.size() != 1 || static_cast<unsigned char>(tok[0]) != b) {
        throw ValidationError("tokenizers must share the 256-byte base alphabet");
      }
    }
  }

  std::vector<std::string> vocab(base.vocab().begin(), base.vocab().end());
  std::vector<TokenId> remap(domain.vocab_size(), 0);
  std::vector<bool> appended(domain.vocab_size(), false);
  for (std::size_t id = 0; id < domain.vocab_size(); ++id) {
    const std::string& bytes = domain.token_bytes(static_cast<TokenId>(id));
    if (const auto in_base = base.find(bytes)) {
      remap[id] = *in_base;
      continue;
    }
    if (!filter.validate_token(bytes)) continue;
    remap[id] = static_cast<TokenId>(vocab.size());
    appended[id] = true;
    vocab.push_back(bytes);
  }

  // Operands present in the merged vocab: base tokens or appended tokens.
  auto present = [&](TokenId id) {
    return appended[id] || base.find(domain.token_bytes(id)).has_value();
  };
  std::vector<Merge> merges(base.merges().begin(), base.merges().end());
  for (const Merge& m : domain.merges()) {
    if (!appended[m.result] || !present(m.left) || !present(m.right)) continue;
    merges.push_back({remap[m.left], remap[m.right], remap[m.result]});
  }
  return Tokenizer(base.spec(), std::move(vocab), std::move(merges));
}

}  // namespace toksmith
