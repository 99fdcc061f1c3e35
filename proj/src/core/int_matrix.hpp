#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace meshk0 {

using Integer = mpz_class;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static IntMatrix scalar(std::size_t n, const Integer& value);
  // Permutation matrix P with P e_j = e_{perm[j]} (0-based).
  static IntMatrix permutation(const std::vector<std::size_t>& perm);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  IntMatrix scaled(const Integer& factor) const;

  // [this | rhs]
  IntMatrix hconcat(const IntMatrix& rhs) const;
  IntMatrix column(std::size_t c) const;
  IntMatrix columns(const std::vector<std::size_t>& which) const;
  IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& block);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  bool is_zero() const;
  bool operator==(const IntMatrix& other) const = default;

  // Aligned plain-text dump, one row per line.
  std::string to_text() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// A^{⊕copies}: copies of A placed along the diagonal.
IntMatrix block_diagonal_power(const IntMatrix& a, std::size_t copies);
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

}  // namespace meshk0
