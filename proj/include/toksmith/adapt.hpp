#pragma once

#include "toksmith/embedding.hpp"
#include "toksmith/pretokenize.hpp"
#include "toksmith/tokenizer.hpp"

namespace toksmith {

// Fast Vocabulary Transfer. Each token of `new_tok` gets the old row of
// the identical old token if there is one, otherwise the unweighted mean
// of the old rows of its old-tokenizer segmentation. The segmentation runs
// the old merges directly on the token bytes, without pre-tokenization.
//
// Throws ValidationError if old_matrix.rows() != old_tok.vocab_size().
EmbeddingMatrix fvt_transfer(const Tokenizer& old_tok, const Tokenizer& new_tok,
                             const EmbeddingMatrix& old_matrix);

// Extends `base` with tokens of `domain` that base lacks and that `filter`
// accepts as a single chunk. Base ids and merges come first and are kept
// as-is; appended tokens get consecutive ids in domain id order. A domain
// merge is kept, re-indexed, when its output was appended and both of its
// operands exist in the merged vocab. The result uses base's
// pre-tokenizer.
Tokenizer merge_tokenizers(const Tokenizer& base, const Tokenizer& domain,
                           const PretokenizerSpec& filter);

}  // namespace toksmith
