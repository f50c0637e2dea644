#include "toksmith/embedding.hpp"

#include <cmath>
#include <string>

#include "toksmith/error.hpp"

namespace toksmith {

EmbeddingMatrix::EmbeddingMatrix(std::size_t rows, std::size_t cols)
    : EmbeddingMatrix(rows, cols, std::vector<float>(rows * cols, 0.0f)) {}

EmbeddingMatrix::EmbeddingMatrix(std::size_t rows, std::size_t cols,
                                 std::vector<float> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ == 0 || cols_ == 0) {
    throw ValidationError("embedding matrix dimensions must be positive, got " +
                          std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  if (values_.size() != rows_ * cols_) {
    throw ValidationError("embedding matrix holds " + std::to_string(values_.size()) +
                          " values, expected " + std::to_string(rows_ * cols_));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw ValidationError("embedding value at row " + std::to_string(i / cols_) +
                            ", col " + std::to_string(i % cols_) + " is not finite");
    }
  }
}

}  // namespace toksmith
