#include "core/smith.hpp"

#include <utility>

namespace meshk0 {

namespace {

class Reducer {
 public:
  Reducer(const IntMatrix& m, bool track) : a_(m), track_(track) {
    if (track_) {
      u_ = IntMatrix::identity(m.rows());
      v_ = IntMatrix::identity(m.cols());
    }
  }

  SmithForm run() {
    const std::size_t rows = a_.rows(), cols = a_.cols();
    std::size_t t = 0;
    while (t < rows && t < cols) {
      if (!move_min_pivot(t)) break;
      for (;;) {
        if (!clear_column(t) || !clear_row(t)) {
          move_min_pivot(t);
          continue;
        }
        auto bad = find_non_multiple(t);
        if (!bad) break;
        add_row(t, *bad, 1);
      }
      if (a_(t, t) < 0) negate_row(t);
      ++t;
    }
    SmithForm out;
    out.rank = t;
    out.d = std::move(a_);
    if (track_) {
      out.u = std::move(u_);
      out.v = std::move(v_);
    }
    return out;
  }

 private:
  // Brings the nonzero entry of least absolute value in the trailing block to
  // (t, t). Returns false if the block is zero.
  bool move_min_pivot(std::size_t t) {
    std::size_t br = 0, bc = 0;
    bool found = false, unit = false;
    for (std::size_t r = t; r < a_.rows() && !unit; ++r) {
      for (std::size_t c = t; c < a_.cols() && !unit; ++c) {
        const Integer& x = a_(r, c);
        if (sgn(x) == 0) continue;
        if (!found || mpz_cmpabs(x.get_mpz_t(), a_(br, bc).get_mpz_t()) < 0) {
          br = r;
          bc = c;
          found = true;
          unit = mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0;
        }
      }
    }
    if (!found) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  // Reduces column t below the pivot; false if a nonzero remainder is left.
  bool clear_column(std::size_t t) {
    bool clean = true;
    Integer q;
    for (std::size_t r = t + 1; r < a_.rows(); ++r) {
      if (sgn(a_(r, t)) == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), a_(r, t).get_mpz_t(), a_(t, t).get_mpz_t());
      add_row(r, t, -q);
      if (sgn(a_(r, t)) != 0) clean = false;
    }
    return clean;
  }

  bool clear_row(std::size_t t) {
    bool clean = true;
    Integer q;
    for (std::size_t c = t + 1; c < a_.cols(); ++c) {
      if (sgn(a_(t, c)) == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), a_(t, c).get_mpz_t(), a_(t, t).get_mpz_t());
      add_col(c, t, -q);
      if (sgn(a_(t, c)) != 0) clean = false;
    }
    return clean;
  }

  std::optional<std::size_t> find_non_multiple(std::size_t t) const {
    const Integer& p = a_(t, t);
    if (p == 1 || p == -1) return std::nullopt;
    for (std::size_t r = t + 1; r < a_.rows(); ++r)
      for (std::size_t c = t + 1; c < a_.cols(); ++c)
        if (sgn(a_(r, c)) != 0 && !mpz_divisible_p(a_(r, c).get_mpz_t(), p.get_mpz_t())) return r;
    return std::nullopt;
  }

  // row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t c = 0; c < a_.cols(); ++c)
      if (sgn(a_(src, c)) != 0) a_(dst, c) += f * a_(src, c);
    if (track_)
      for (std::size_t c = 0; c < u_.cols(); ++c)
        if (sgn(u_(src, c)) != 0) u_(dst, c) += f * u_(src, c);
  }

  // col[dst] += f * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t r = 0; r < a_.rows(); ++r)
      if (sgn(a_(r, src)) != 0) a_(r, dst) += f * a_(r, src);
    if (track_)
      for (std::size_t r = 0; r < v_.rows(); ++r)
        if (sgn(v_(r, src)) != 0) v_(r, dst) += f * v_(r, src);
  }

  void swap_rows(std::size_t x, std::size_t y) {
    a_.swap_rows(x, y);
    if (track_) u_.swap_rows(x, y);
  }

  void swap_cols(std::size_t x, std::size_t y) {
    a_.swap_cols(x, y);
    if (track_) v_.swap_cols(x, y);
  }

  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(r, c) = -a_(r, c);
    if (track_)
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(r, c) = -u_(r, c);
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
  bool track_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms) {
  return Reducer(m, with_transforms).run();
}

AbelianGroup cokernel(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < s.rank; ++i) orders.push_back(s.d(i, i));
  return {static_cast<long>(m.rows() - s.rank), std::move(orders)};
}

}  // namespace meshk0
