#include "core/path_elimination.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include <gmpxx.h>

#include "core/errors.hpp"
#include "core/quiver.hpp"

namespace meshk0 {

namespace {

struct RationalOps {
  using T = mpq_class;
  static T zero() { return 0; }
  static bool is_zero(const T& x) { return sgn(x) == 0; }
  static T inv(const T& x) { return 1 / x; }
};

template <std::uint32_t P>
struct ModOps {
  struct T {
    std::uint32_t v = 0;
    T() = default;
    T(long x) : v(static_cast<std::uint32_t>(((x % static_cast<long>(P)) + P) % P)) {}  // NOLINT
    T operator+(T o) const { return T(static_cast<long>(v + o.v)); }
    T operator-(T o) const { return T(static_cast<long>(v) - static_cast<long>(o.v)); }
    T operator*(T o) const { return T(static_cast<long>(v) * o.v); }
    T operator-() const { return T(-static_cast<long>(v)); }
    T& operator-=(T o) { return *this = *this - o; }
    T& operator+=(T o) { return *this = *this + o; }
  };
  static T zero() { return 0; }
  static bool is_zero(const T& x) { return x.v == 0; }
  static T inv(const T& x) {
    for (std::uint32_t y = 1; y < P; ++y)
      if ((x.v * y) % P == 1) return T(static_cast<long>(y));
    throw InternalError("inverse of zero");
  }
};

// Basis paths are only tracked by their end vertex; the path itself is
// implicit in the candidate that produced it.
struct BasisPath {
  int end;
};

template <class Ops>
class Eliminator {
 public:
  using T = typename Ops::T;
  using Sparse = std::vector<std::pair<int, T>>;

  Eliminator(const TranslationQuiver& quiver, int max_len, std::size_t guard)
      : quiver_(quiver), max_len_(max_len), guard_(guard) {}

  std::vector<long> from(int source) {
    std::vector<long> dims(quiver_.vertex_count(), 0);
    dims[source] += 1;
    // prev2: basis of degree d-2; prev: basis of degree d-1 with, for every
    // candidate (b, arrow) of degree d-1, its coordinates in prev.
    std::vector<BasisPath> prev2;
    std::vector<BasisPath> prev{{source}};
    std::unordered_map<long, Sparse> prev_coords;  // key: b * arrows + arrow, b in prev2

    for (int degree = 1; !prev.empty(); ++degree) {
      if (degree > max_len_) throw SizeError("paths survive beyond length " + std::to_string(max_len_));
      const long arrow_count = static_cast<long>(quiver_.arrows().size());
      std::vector<std::pair<int, int>> candidates;  // (b in prev, arrow)
      std::unordered_map<long, int> column;
      for (std::size_t b = 0; b < prev.size(); ++b) {
        for (int arrow : quiver_.arrows_from(prev[b].end)) {
          column[static_cast<long>(b) * arrow_count + arrow] = static_cast<int>(candidates.size());
          candidates.emplace_back(static_cast<int>(b), arrow);
        }
      }
      if (candidates.size() > guard_)
        throw SizeError(std::to_string(candidates.size()) + " candidate paths in degree " + std::to_string(degree) +
                        " exceed the guard; use the knitting route");

      std::vector<std::vector<T>> rows;
      if (degree >= 2) {
        for (std::size_t b = 0; b < prev2.size(); ++b) {
          std::vector<T> row(candidates.size(), Ops::zero());
          bool nonzero = false;
          for (int arrow : quiver_.arrows_from(prev2[b].end)) {
            const int partner = quiver_.arrows()[arrow].partner;
            for (const auto& [basis, coeff] : prev_coords.at(static_cast<long>(b) * arrow_count + arrow)) {
              row[column.at(static_cast<long>(basis) * arrow_count + partner)] += coeff;
              nonzero = true;
            }
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
      std::vector<int> pivot_row_of = reduce(rows, candidates.size());

      std::vector<BasisPath> next;
      std::vector<int> index_in_next(candidates.size(), -1);
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (pivot_row_of[c] >= 0) continue;
        index_in_next[c] = static_cast<int>(next.size());
        next.push_back({quiver_.arrows()[candidates[c].second].target});
        dims[next.back().end] += 1;
      }
      std::unordered_map<long, Sparse> coords;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        Sparse v;
        if (pivot_row_of[c] < 0) {
          v.emplace_back(index_in_next[c], T(1));
        } else {
          const auto& row = rows[pivot_row_of[c]];
          for (std::size_t j = 0; j < candidates.size(); ++j)
            if (index_in_next[j] >= 0 && !Ops::is_zero(row[j])) v.emplace_back(index_in_next[j], -row[j]);
        }
        coords[static_cast<long>(candidates[c].first) * arrow_count + candidates[c].second] = std::move(v);
      }
      prev2 = std::move(prev);
      prev = std::move(next);
      prev_coords = std::move(coords);
    }
    return dims;
  }

 private:
  // Reduced row echelon form in place; returns for each column the row in
  // which it is a pivot, or -1.
  static std::vector<int> reduce(std::vector<std::vector<T>>& rows, std::size_t cols) {
    std::vector<int> pivot_row_of(cols, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
      std::size_t p = rank;
      while (p < rows.size() && Ops::is_zero(rows[p][c])) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[rank]);
      T inv = Ops::inv(rows[rank][c]);
      for (std::size_t j = c; j < cols; ++j) rows[rank][j] = rows[rank][j] * inv;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || Ops::is_zero(rows[r][c])) continue;
        T f = rows[r][c];
        for (std::size_t j = c; j < cols; ++j)
          if (!Ops::is_zero(rows[rank][j])) rows[r][j] -= f * rows[rank][j];
      }
      pivot_row_of[c] = static_cast<int>(rank);
      ++rank;
    }
    rows.resize(rank);
    return pivot_row_of;
  }

  const TranslationQuiver& quiver_;
  int max_len_;
  std::size_t guard_;
};

template <class Ops>
HomTable run(const MeshTriple& triple, int max_len) {
  TranslationQuiver quiver(triple);
  Eliminator<Ops> elim(quiver, max_len, max_paths_guard());
  HomTable table;
  table.vertices = quiver.vertices();
  for (std::size_t u = 0; u < quiver.vertex_count(); ++u) table.dims.push_back(elim.from(static_cast<int>(u)));
  return table;
}

}  // namespace

std::size_t max_paths_guard() {
  if (const char* env = std::getenv("MESHK0_MAX_PATHS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxPaths;
}

HomTable hom_dims_bruteforce(const MeshTriple& triple, int max_len, Field field) {
  switch (field) {
    case Field::Rationals:
      return run<RationalOps>(triple, max_len);
    case Field::Mod2:
      return run<ModOps<2>>(triple, max_len);
    case Field::Mod3:
      return run<ModOps<3>>(triple, max_len);
  }
  throw InternalError("unknown field");
}

}  // namespace meshk0
