#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cwb::lattice {

using Int = boost::multiprecision::cpp_int;
using IntVector = std::vector<Int>;

/// Dense row-major matrix over the integers with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  std::vector<IntVector> columns() const;
  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntVector operator*(const IntMatrix& a, const IntVector& v);

/// Columns of the result form a Z-basis of {v : m v = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Nonzero elementary divisors d1 | d2 | ... of m, all positive.
std::vector<Int> smith_invariants(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Coordinates of v in the Z-span of the (independent) columns of basis, if v lies there.
std::optional<IntVector> solve_in_lattice(const IntMatrix& basis, const IntVector& v);

// Row space over Q, grown one vector at a time; rows kept primitive and in echelon form.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}
  bool add(IntVector v);  // true when v was independent of the rows so far
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
};

Int content(const IntVector& v);  // gcd of entries, 0 for the zero vector
bool is_zero(const IntVector& v);

std::string to_string(const IntVector& v);

}  // namespace cwb::lattice
