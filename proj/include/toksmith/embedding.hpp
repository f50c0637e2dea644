#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace toksmith {

// Dense row-major float32 matrix; row i belongs to token id i.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  // Zero-filled. Throws ValidationError unless rows and cols are positive.
  EmbeddingMatrix(std::size_t rows, std::size_t cols);
  // Throws ValidationError if values.size() != rows * cols, a dimension is
  // zero, or a value is not finite.
  EmbeddingMatrix(std::size_t rows, std::size_t cols, std::vector<float> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::span<float> row(std::size_t i) { return {values_.data() + i * cols_, cols_}; }
  std::span<const float> row(std::size_t i) const {
    return {values_.data() + i * cols_, cols_};
  }
  std::span<const float> values() const { return values_; }

  friend bool operator==(const EmbeddingMatrix&, const EmbeddingMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<float> values_;
};

}  // namespace toksmith
