#include "core/int_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "core/errors.hpp"

namespace meshk0 {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ParameterError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) { return scalar(n, 1); }

IntMatrix IntMatrix::scalar(std::size_t n, const Integer& value) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
  return m;
}

IntMatrix IntMatrix::permutation(const std::vector<std::size_t>& perm) {
  IntMatrix m(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ParameterError("matrix product dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const Integer& b = rhs(k, c);
        if (sgn(b) != 0) out(r, c) += a * b;
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ParameterError("matrix sum dimension mismatch");
  IntMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const { return *this + (-rhs); }

IntMatrix IntMatrix::operator-() const {
  IntMatrix out(*this);
  for (auto& v : out.data_) v = -v;
  return out;
}

IntMatrix IntMatrix::scaled(const Integer& factor) const {
  IntMatrix out(*this);
  for (auto& v : out.data_) v *= factor;
  return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw ParameterError("hconcat row mismatch");
  IntMatrix out(rows_, cols_ + rhs.cols_);
  out.set_block(0, 0, *this);
  out.set_block(0, cols_, rhs);
  return out;
}

IntMatrix IntMatrix::column(std::size_t c) const { return submatrix(0, c, rows_, 1); }

IntMatrix IntMatrix::columns(const std::vector<std::size_t>& which) const {
  IntMatrix out(rows_, which.size());
  for (std::size_t j = 0; j < which.size(); ++j)
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, which[j]);
  return out;
}

IntMatrix IntMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ParameterError("submatrix out of range");
  IntMatrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& block) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) throw ParameterError("block out of range");
  for (std::size_t r = 0; r < block.rows_; ++r)
    for (std::size_t c = 0; c < block.cols_; ++c) (*this)(r0 + r, c0 + c) = block(r, c);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return sgn(v) == 0; });
}

std::string IntMatrix::to_text() const {
  std::size_t width = 1;
  for (const auto& v : data_) width = std::max(width, v.get_str().size());
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      std::string s = (*this)(r, c).get_str();
      if (c) out << ' ';
      out << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

IntMatrix block_diagonal_power(const IntMatrix& a, std::size_t copies) {
  return block_diagonal(std::vector<IntMatrix>(copies, a));
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  IntMatrix out(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

}  // namespace meshk0
