#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "core/int_matrix.hpp"

namespace meshk0 {

// Laurent polynomial over Z: sum of coeffs[j] * x^(low + j).
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(long constant);  // NOLINT: integers act as constant polynomials
  // Sum of coefficient * x^exponent over (exponent, coefficient) pairs.
  static ZPoly from_terms(std::initializer_list<std::pair<long, long>> terms);
  static ZPoly from_terms(const std::vector<std::pair<long, Integer>>& terms);
  static ZPoly monomial(long exponent, long coefficient = 1);
  // x^from + x^(from+step) + ... up to and including x^to.
  static ZPoly geometric(long from, long to, long step = 1);

  bool is_zero() const { return coeffs_.empty(); }
  long low_degree() const { return low_; }
  long high_degree() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }
  Integer coefficient(long exponent) const;
  // Value at x = 1.
  Integer sum() const;

  friend ZPoly operator+(const ZPoly& lhs, const ZPoly& rhs);
  friend ZPoly operator-(const ZPoly& lhs, const ZPoly& rhs);
  friend ZPoly operator*(const ZPoly& lhs, const ZPoly& rhs);
  ZPoly operator-() const;
  bool operator==(const ZPoly&) const = default;

  // f(x^p), p may be negative.
  ZPoly substitute_power(long p) const;
  // f(-x)
  ZPoly negate_variable() const;

  // f(X_m) with exponents reduced modulo m.
  IntMatrix evaluate(long m) const;

  std::string to_string() const;

 private:
  void trim();

  long low_ = 0;
  std::vector<Integer> coeffs_;
};

// s_m(x) = 1 - x + x^2 - ... + (-x)^(m-1)
ZPoly alternating_sum(long m);

// Matrix of Laurent polynomials; evaluate() expands each entry into an m x m
// block, so a rows x cols matrix becomes (rows*m) x (cols*m).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  PolyMatrix(std::initializer_list<std::initializer_list<ZPoly>> rows);

  static PolyMatrix scalar(std::size_t n, const ZPoly& value);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ZPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ZPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  PolyMatrix hconcat(const PolyMatrix& rhs) const;
  PolyMatrix vconcat(const PolyMatrix& rhs) const;
  PolyMatrix operator+(const PolyMatrix& rhs) const;
  PolyMatrix operator*(const PolyMatrix& rhs) const;
  PolyMatrix scaled(const ZPoly& f) const;
  void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& block);

  IntMatrix evaluate(long m) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ZPoly> data_;
};

}  // namespace meshk0
