#include "cwb/lattice/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace cwb::lattice {

using Rational = boost::multiprecision::cpp_rational;

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

namespace {

// Column operation helpers applied simultaneously to the work matrix and the transform.
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += k * m(r, src);
}

void negate_col(IntMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += k * m(src, c);
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

IntMatrix integer_kernel(const IntMatrix& m) {
  IntMatrix work = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < m.rows() && pivot < m.cols(); ++r) {
    // Euclid on the entries of row r in columns pivot..end.
    for (;;) {
      std::size_t best = m.cols();
      for (std::size_t c = pivot; c < m.cols(); ++c) {
        if (work(r, c) == 0) continue;
        if (best == m.cols() || abs(work(r, c)) < abs(work(r, best))) best = c;
      }
      if (best == m.cols()) break;
      swap_cols(work, pivot, best);
      swap_cols(u, pivot, best);
      bool reduced = true;
      for (std::size_t c = pivot + 1; c < m.cols(); ++c) {
        if (work(r, c) == 0) continue;
        Int q = floor_div(work(r, c), work(r, pivot));
        add_col_multiple(work, c, pivot, -q);
        add_col_multiple(u, c, pivot, -q);
        if (work(r, c) != 0) reduced = false;
      }
      if (reduced) {
        ++pivot;
        break;
      }
    }
  }
  IntMatrix ker(m.cols(), m.cols() - pivot);
  for (std::size_t c = pivot; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.cols(); ++r) ker(r, c - pivot) = u(r, c);
  return ker;
}

std::vector<Int> smith_invariants(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<Int> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a(r, c) != 0 && (pr == rows || abs(a(r, c)) < abs(a(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) goto done;
      swap_rows(a, t, pr);
      swap_cols(a, t, pc);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        add_row_multiple(a, r, t, -floor_div(a(r, t), a(t, t)));
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        add_col_multiple(a, c, t, -floor_div(a(t, c), a(t, t)));
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility condition on the remaining block.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(r, c) % a(t, t) != 0) {
            add_row_multiple(a, t, r, Int(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) negate_col(a, t);
    diag.push_back(a(t, t));
  }
done:
  return diag;
}

std::size_t rank(const IntMatrix& m) {
  // Fraction-free (Bareiss-style) row echelon.
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    swap_rows(a, r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Int f = a(i, c), piv = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * piv - a(r, j) * f;
      Int gcd_row = 0;
      for (std::size_t j = c; j < a.cols(); ++j) gcd_row = gcd(gcd_row, a(i, j));
      if (gcd_row > 1)
        for (std::size_t j = c; j < a.cols(); ++j) a(i, j) /= gcd_row;
    }
    ++r;
  }
  return r;
}

std::optional<IntVector> solve_in_lattice(const IntMatrix& basis, const IntVector& v) {
  const std::size_t n = basis.rows(), k = basis.cols();
  if (v.size() != n) throw std::invalid_argument("vector length mismatch");
  // Gaussian elimination over Q on the augmented system [basis | v].
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = Rational(basis(r, c));
    a[r][k] = Rational(v[r]);
  }
  std::vector<std::size_t> pivot_row(k, n);
  std::size_t row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = row;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("lattice basis columns are dependent");
    std::swap(a[row], a[p]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[row][c];
      for (std::size_t j = c; j <= k; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_row[c] = row++;
  }
  for (std::size_t r = row; r < n; ++r)
    if (a[r][k] != 0) return std::nullopt;  // not in the rational span
  IntVector coords(k);
  for (std::size_t c = 0; c < k; ++c) {
    Rational x = a[pivot_row[c]][k] / a[pivot_row[c]][c];
    if (denominator(x) != 1) return std::nullopt;
    coords[c] = numerator(x);
  }
  return coords;
}

bool EchelonBasis::add(IntVector v) {
  if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p] == 0) continue;
    const Int a = rows_[r][p], b = v[p];
    for (std::size_t j = 0; j < dim_; ++j) v[j] = v[j] * a - rows_[r][j] * b;
    const Int c = content(v);
    if (c > 1)
      for (auto& x : v) x /= c;
  }
  std::size_t p = 0;
  while (p < dim_ && v[p] == 0) ++p;
  if (p == dim_) return false;
  // Rows stay sorted by pivot; each row vanishes left of its pivot, so one ascending pass reduces.
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

Int content(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return abs(g);
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

}  // namespace cwb::lattice
