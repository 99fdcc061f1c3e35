#include "core/exact_rank.hpp"

#include "core/errors.hpp"

namespace meshk0 {

namespace {

struct BareissResult {
  std::size_t rank = 0;
  Integer last_pivot = 1;
  int sign = 1;
};

BareissResult bareiss(IntMatrix a) {
  BareissResult res;
  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && sgn(a(piv, col)) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      a.swap_rows(piv, row);
      res.sign = -res.sign;
    }
    for (std::size_t r = row + 1; r < a.rows(); ++r) {
      for (std::size_t c = col + 1; c < a.cols(); ++c) {
        a(r, c) = a(row, col) * a(r, c) - a(r, col) * a(row, c);
        mpz_divexact(a(r, c).get_mpz_t(), a(r, c).get_mpz_t(), prev.get_mpz_t());
      }
      a(r, col) = 0;
    }
    prev = a(row, col);
    ++row;
  }
  res.rank = row;
  res.last_pivot = prev;
  return res;
}

}  // namespace

std::size_t rational_rank(const IntMatrix& m) { return bareiss(m).rank; }

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ParameterError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  BareissResult r = bareiss(m);
  if (r.rank < m.rows()) return 0;
  return r.sign * r.last_pivot;
}

}  // namespace meshk0
