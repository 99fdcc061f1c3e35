#include "core/zpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "core/errors.hpp"

namespace meshk0 {

ZPoly::ZPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

ZPoly ZPoly::from_terms(std::initializer_list<std::pair<long, long>> terms) {
  std::vector<std::pair<long, Integer>> big;
  for (const auto& [e, c] : terms) big.emplace_back(e, c);
  return from_terms(big);
}

ZPoly ZPoly::from_terms(const std::vector<std::pair<long, Integer>>& terms) {
  ZPoly f;
  if (terms.empty()) return f;
  long lo = terms.front().first, hi = lo;
  for (const auto& term : terms) {
    lo = std::min(lo, term.first);
    hi = std::max(hi, term.first);
  }
  f.low_ = lo;
  f.coeffs_.assign(hi - lo + 1, 0);
  for (const auto& [e, c] : terms) f.coeffs_[e - lo] += c;
  f.trim();
  return f;
}

ZPoly ZPoly::monomial(long exponent, long coefficient) { return from_terms({{exponent, coefficient}}); }

ZPoly ZPoly::geometric(long from, long to, long step) {
  std::vector<std::pair<long, Integer>> terms;
  for (long e = from; e <= to; e += step) terms.emplace_back(e, 1);
  return from_terms(terms);
}

Integer ZPoly::coefficient(long exponent) const {
  long idx = exponent - low_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[idx];
}

Integer ZPoly::sum() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

void ZPoly::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  while (sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

ZPoly operator+(const ZPoly& lhs, const ZPoly& rhs) {
  if (lhs.is_zero()) return rhs;
  if (rhs.is_zero()) return lhs;
  ZPoly out;
  out.low_ = std::min(lhs.low_, rhs.low_);
  long hi = std::max(lhs.high_degree(), rhs.high_degree());
  out.coeffs_.assign(hi - out.low_ + 1, 0);
  for (std::size_t j = 0; j < lhs.coeffs_.size(); ++j) out.coeffs_[lhs.low_ - out.low_ + j] += lhs.coeffs_[j];
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out.coeffs_[rhs.low_ - out.low_ + j] += rhs.coeffs_[j];
  out.trim();
  return out;
}

ZPoly ZPoly::operator-() const {
  ZPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

ZPoly operator-(const ZPoly& lhs, const ZPoly& rhs) { return lhs + (-rhs); }

ZPoly operator*(const ZPoly& lhs, const ZPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  ZPoly out;
  out.low_ = lhs.low_ + rhs.low_;
  out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  out.trim();
  return out;
}

ZPoly ZPoly::substitute_power(long p) const {
  std::vector<std::pair<long, Integer>> terms;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (sgn(coeffs_[j]) != 0) terms.emplace_back((low_ + static_cast<long>(j)) * p, coeffs_[j]);
  return from_terms(terms);
}

ZPoly ZPoly::negate_variable() const {
  ZPoly out(*this);
  for (std::size_t j = 0; j < out.coeffs_.size(); ++j)
    if ((low_ + static_cast<long>(j)) % 2 != 0) out.coeffs_[j] = -out.coeffs_[j];
  return out;
}

IntMatrix ZPoly::evaluate(long m) const {
  if (m <= 0) throw ParameterError("circulant size must be positive");
  IntMatrix out(m, m);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Integer& c = coeffs_[j];
    if (sgn(c) == 0) continue;
    long p = low_ + static_cast<long>(j);
    for (long b = 0; b < m; ++b) out(((b + p) % m + m) % m, b) += c;
  }
  return out;
}

std::string ZPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    Integer c = coeffs_[j];
    if (sgn(c) == 0) continue;
    long e = low_ + static_cast<long>(j);
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    Integer a = abs(c);
    if (e == 0)
      out << a;
    else {
      if (a != 1) out << a << "*";
      out << "x";
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

ZPoly alternating_sum(long m) {
  std::vector<std::pair<long, Integer>> terms;
  for (long j = 0; j < m; ++j) terms.emplace_back(j, j % 2 == 0 ? 1 : -1);
  return ZPoly::from_terms(terms);
}

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<ZPoly>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ParameterError("ragged polynomial matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

PolyMatrix PolyMatrix::scalar(std::size_t n, const ZPoly& value) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
  return m;
}

PolyMatrix PolyMatrix::hconcat(const PolyMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw ParameterError("hconcat row mismatch");
  PolyMatrix out(rows_, cols_ + rhs.cols_);
  out.set_block(0, 0, *this);
  out.set_block(0, cols_, rhs);
  return out;
}

PolyMatrix PolyMatrix::vconcat(const PolyMatrix& rhs) const {
  if (cols_ != rhs.cols_) throw ParameterError("vconcat column mismatch");
  PolyMatrix out(rows_ + rhs.rows_, cols_);
  out.set_block(0, 0, *this);
  out.set_block(rows_, 0, rhs);
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ParameterError("sum dimension mismatch");
  PolyMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = out.data_[i] + rhs.data_[i];
  return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ParameterError("product dimension mismatch");
  PolyMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k)
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) = out(r, c) + (*this)(r, k) * rhs(k, c);
  return out;
}

PolyMatrix PolyMatrix::scaled(const ZPoly& f) const {
  PolyMatrix out(*this);
  for (auto& e : out.data_) e = e * f;
  return out;
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, const PolyMatrix& block) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) throw ParameterError("block out of range");
  for (std::size_t r = 0; r < block.rows_; ++r)
    for (std::size_t c = 0; c < block.cols_; ++c) (*this)(r0 + r, c0 + c) = block(r, c);
}

IntMatrix PolyMatrix::evaluate(long m) const {
  IntMatrix out(rows_ * m, cols_ * m);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) out.set_block(r * m, c * m, (*this)(r, c).evaluate(m));
  return out;
}

}  // namespace meshk0
