#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace chaoslab {

/// Dense row-major matrix. Cell (row, col) lives at index row * cols + col.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> cells)
      : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    cells_.resize(rows * cols);
  }

  static Matrix square(std::size_t side, T fill = T{}) { return Matrix(side, side, fill); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t row, std::size_t col) { return cells_[row * cols_ + col]; }
  const T& operator()(std::size_t row, std::size_t col) const { return cells_[row * cols_ + col]; }

  std::span<T> cells() noexcept { return cells_; }
  std::span<const T> cells() const noexcept { return cells_; }

  auto begin() noexcept { return cells_.begin(); }
  auto end() noexcept { return cells_.end(); }
  auto begin() const noexcept { return cells_.begin(); }
  auto end() const noexcept { return cells_.end(); }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> cells_;
};

/// 8-bit grayscale image.
using GrayImage = Matrix<std::uint8_t>;

}  // namespace chaoslab
