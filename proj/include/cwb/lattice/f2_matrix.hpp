#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cwb/lattice/int_matrix.hpp"

namespace cwb::lattice {

using F2Vector = std::vector<std::uint8_t>;

// Matrix over the field with two elements; entries are 0 or 1.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static F2Matrix from_columns(const std::vector<F2Vector>& cols, std::size_t rows);
  static F2Matrix reduce(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint8_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  F2Vector apply(const F2Vector& v) const;
  std::size_t rank() const;
  std::size_t nullity() const { return cols_ - rank(); }
  bool in_column_span(const F2Vector& v) const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

F2Vector reduce_mod2(const IntVector& v);
F2Vector add(const F2Vector& a, const F2Vector& b);
bool is_zero(const F2Vector& v);

}  // namespace cwb::lattice
