#include "cwb/lattice/f2_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace cwb::lattice {

F2Matrix F2Matrix::from_columns(const std::vector<F2Vector>& cols, std::size_t rows) {
  F2Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r] & 1u;
  }
  return m;
}

F2Matrix F2Matrix::reduce(const IntMatrix& m) {
  F2Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = (m(r, c) % 2 != 0) ? 1 : 0;
  return out;
}

F2Vector F2Matrix::apply(const F2Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  F2Vector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint8_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc ^= (*this)(r, c) & v[c];
    out[r] = acc;
  }
  return out;
}

std::size_t F2Matrix::rank() const {
  F2Matrix a = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && a(p, c) == 0) ++p;
    if (p == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != r && a(i, c))
        for (std::size_t j = 0; j < cols_; ++j) a(i, j) ^= a(r, j);
    ++r;
  }
  return r;
}

bool F2Matrix::in_column_span(const F2Vector& v) const {
  if (v.size() != rows_) throw std::invalid_argument("vector length mismatch");
  F2Matrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_) = v[r] & 1u;
  }
  return aug.rank() == rank();
}

F2Vector reduce_mod2(const IntVector& v) {
  F2Vector out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](const Int& x) -> std::uint8_t { return x % 2 != 0; });
  return out;
}

F2Vector add(const F2Vector& a, const F2Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  F2Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

bool is_zero(const F2Vector& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

}  // namespace cwb::lattice
