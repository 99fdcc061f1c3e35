#include "core/circulant.hpp"

#include <numeric>

#include "core/errors.hpp"
#include "core/quiver.hpp"

namespace meshk0 {

namespace {

ZPoly x(long e) { return ZPoly::monomial(e); }

PolyMatrix row_of(std::initializer_list<ZPoly> entries) { return PolyMatrix{entries}; }

PolyMatrix e6_projective_block() {
  auto p = [](std::initializer_list<std::pair<long, long>> t) { return ZPoly::from_terms(t); };
  return PolyMatrix{
      {p({{0, 1}, {3, 1}}), p({{3, 1}, {5, 1}})},
      {p({{0, 1}, {2, 1}, {3, 1}}), p({{2, 1}, {3, 1}, {4, 1}, {5, 1}})},
      {p({{0, 1}, {1, 1}, {2, 1}, {3, 1}}), p({{1, 1}, {2, 1}, {3, 2}, {4, 1}, {5, 1}})},
      {p({{0, 1}, {1, 1}, {3, 1}}), p({{1, 1}, {2, 1}, {3, 1}, {4, 1}})},
      {p({{0, 1}, {3, 1}}), p({{1, 1}, {3, 1}})},
      {p({{0, 1}, {2, 1}}), p({{0, 1}, {2, 1}, {3, 1}, {5, 1}})},
  };
}

PolyMatrix e7_projective_block() {
  auto p = [](std::initializer_list<std::pair<long, long>> t) { return ZPoly::from_terms(t); };
  return PolyMatrix{
      {p({{0, 1}, {4, 1}, {8, 1}}), p({{4, 1}, {6, 1}, {8, 1}})},
      {p({{0, 1}, {3, 1}, {4, 1}, {7, 1}}), p({{3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}})},
      {p({{0, 1}, {2, 1}, {3, 1}, {4, 1}, {6, 1}}), p({{2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 2}, {7, 1}, {8, 1}})},
      {p({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}),
       p({{1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 2}, {6, 2}, {7, 1}, {8, 1}})},
      {p({{0, 1}, {1, 1}, {3, 1}, {4, 1}}), p({{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 1}, {7, 1}})},
      {p({{0, 1}, {3, 1}}), p({{1, 1}, {3, 1}, {4, 1}, {6, 1}})},
      {p({{0, 1}, {2, 1}, {4, 1}}), p({{0, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {8, 1}})},
  };
}

PolyMatrix e8_projective_block() {
  auto p = [](std::initializer_list<std::pair<long, long>> t) { return ZPoly::from_terms(t); };
  PolyMatrix core{
      {p({{0, 1}, {9, 1}}), p({{5, 1}, {7, 1}, {9, 1}})},
      {p({{0, 1}, {4, 1}, {8, 1}}), p({{4, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}, {9, 1}})},
      {p({{0, 1}, {3, 1}, {4, 1}, {7, 1}}), p({{3, 1}, {4, 1}, {5, 2}, {6, 1}, {7, 2}, {8, 1}, {9, 1}})},
      {p({{0, 1}, {2, 1}, {3, 1}, {4, 1}, {6, 1}}),
       p({{2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 2}, {7, 2}, {8, 1}, {9, 1}})},
      {p({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}),
       p({{1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 3}, {6, 2}, {7, 2}, {8, 1}, {9, 1}})},
      {p({{0, 1}, {1, 1}, {3, 1}, {4, 1}}), p({{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 2}, {6, 1}, {7, 1}, {8, 1}})},
      {p({{0, 1}, {3, 1}}), p({{1, 1}, {3, 1}, {4, 1}, {5, 1}, {7, 1}})},
      {p({{0, 1}, {2, 1}, {4, 1}}), p({{0, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {9, 1}})},
  };
  return core.scaled(1 + x(5));
}

PolyMatrix type_a_core(int n, const StandardBlocks& b) {
  return (PolyMatrix::scalar(n, 1) + b.t).hconcat(b.u);
}

PolyMatrix type_d_core(int n, const StandardBlocks& b) {
  PolyMatrix m(n, n);
  m.set_block(0, 0, PolyMatrix::scalar(n - 2, 1 + x(n - 1)));
  m.set_block(0, n - 2, b.v);
  m.set_block(0, n - 1, b.w);
  m(n - 2, n - 2) = 1;
  m(n - 2, n - 1) = b.g;
  m(n - 1, n - 2) = 1;
  m(n - 1, n - 1) = b.f;
  return m;
}

PolyMatrix type_e6_core() {
  PolyMatrix m(6, 6);
  m.set_block(0, 0, PolyMatrix::scalar(5, 1) + standard_blocks(5).t.scaled(x(3)));
  m(5, 5) = 1 + x(6);
  return m.hconcat(e6_projective_block());
}

}  // namespace

IntMatrix circulant_power(long m, long p) {
  if (m <= 0) throw ParameterError("circulant size must be positive");
  return x(p).evaluate(m);
}

IntMatrix orbit_permutation(long m, long p) {
  if (m <= 0) throw ParameterError("circulant size must be positive");
  const long d = std::gcd(((p % m) + m) % m, m);
  const long q = m / d;
  std::vector<std::size_t> eta(m);
  for (long j = 0; j < d; ++j)
    for (long s = 0; s < q; ++s) eta[j * q + s] = static_cast<std::size_t>((((j + s * p) % m) + m) % m);
  return IntMatrix::permutation(eta);
}

StandardBlocks standard_blocks(int n) {
  if (n < 1) throw ParameterError("standard blocks need n >= 1");
  StandardBlocks b;
  b.t = PolyMatrix(n, n);
  for (int c = 1; c <= n; ++c) b.t(n - c, c - 1) = x(c);
  b.u = PolyMatrix(n, 1);
  for (int r = 0; r < n; ++r) b.u(r, 0) = 1;
  if (n >= 4) {
    b.v = PolyMatrix(n - 2, 1);
    b.w = PolyMatrix(n - 2, 1);
    for (int i = 1; i <= n - 2; ++i) {
      b.v(i - 1, 0) = 1 + x(n - 1 - i);
      b.w(i - 1, 0) = ZPoly::geometric(n - 1 - i, n - 2);
    }
    if (n % 2 == 1) {
      b.f = ZPoly::geometric(0, n - 3, 2);
      b.g = ZPoly::geometric(1, n - 2, 2);
    } else {
      b.f = ZPoly::geometric(0, n - 2, 2);
      b.g = ZPoly::geometric(1, n - 3, 2);
    }
  }
  return b;
}

PolyMatrix generator_polynomial_matrix(const MeshTriple& triple) {
  const int n = triple.n();
  const long k = triple.k();
  StandardBlocks b = standard_blocks(n);
  switch (triple.type()) {
    case MeshType::I:
      return type_a_core(n, b);
    case MeshType::II:
      return type_a_core(n, b).hconcat(PolyMatrix::scalar(n, 1) + b.t.scaled(-x(k - (n + 1) / 2)));
    case MeshType::III:
      return type_a_core(n, b).hconcat(PolyMatrix::scalar(n, 1) + b.t.scaled(-x(k - (n + 2) / 2)));
    case MeshType::IV:
      return type_d_core(n, b);
    case MeshType::V: {
      PolyMatrix extra(n, n - 1);
      extra.set_block(0, 0, PolyMatrix::scalar(n - 2, 1 - x(k)));
      extra(n - 2, n - 2) = -x(k);
      extra(n - 1, n - 2) = 1;
      return type_d_core(n, b).hconcat(extra);
    }
    case MeshType::VI:
      return PolyMatrix{
          {1 + x(3), 0, 1 + x(2), x(2), -x(k + 1), 0, 0},
          {0, 1 + x(3), 1 + x(1), x(1) + x(2), 0, 1 - x(k), 0},
          {0, 0, 1, x(1), 1, 0, -x(k)},
          {0, 0, 1, 1 + x(2), 0, 0, 1},
      };
    case MeshType::VII:
      return type_e6_core();
    case MeshType::VIII: {
      PolyMatrix extra(6, 6);
      extra.set_block(0, 0, PolyMatrix::scalar(5, 1) + standard_blocks(5).t.scaled(-x(k - 3)));
      extra(5, 5) = 1 - x(k);
      return type_e6_core().hconcat(extra);
    }
    case MeshType::IX:
      return PolyMatrix::scalar(7, 1 + x(9)).hconcat(e7_projective_block());
    case MeshType::X:
      return PolyMatrix::scalar(8, 1 + x(15)).hconcat(e8_projective_block());
  }
  throw InternalError("unknown type");
}

IntMatrix assemble_generator_matrix(const MeshTriple& triple) {
  return generator_polynomial_matrix(triple).evaluate(triple.l());
}

std::vector<std::pair<int, long>> first_principles_projective_vertices(const MeshTriple& triple) {
  std::vector<std::pair<int, long>> out;
  std::vector<int> rows{1};
  if (triple.family() != Family::A) rows.push_back(triple.n());
  for (int i : rows)
    for (long a = 0; a < triple.l(); ++a) out.emplace_back(i, a);
  return out;
}

IntMatrix assemble_from_first_principles(const MeshTriple& triple, const IntMatrix& projective_columns) {
  const int n = triple.n();
  const long l = triple.l();
  const std::size_t size = static_cast<std::size_t>(n) * l;
  if (projective_columns.rows() != size ||
      projective_columns.cols() != first_principles_projective_vertices(triple).size())
    throw ParameterError("projective columns have the wrong shape");
  auto row = [l](const VertexId& v) { return static_cast<std::size_t>(v.i - 1) * l + (((v.a % l) + l) % l); };

  const CoverMap shift = nakayama_map(triple.delta()).after(CoverMap::tau_power(n, -1));
  IntMatrix h_prime(size, size);
  for (int i = 1; i <= n; ++i) {
    for (long a = 0; a < l; ++a) {
      VertexId u{i, a};
      h_prime(row(u), row(u)) += 1;
      h_prime(row(shift(u)), row(u)) += 1;
    }
  }
  IntMatrix out = h_prime.hconcat(projective_columns);
  if (triple.t() > 1) {
    const CoverMap back = quotient_generator(triple).inverse();
    IntMatrix h_g(size, size);
    for (int i = 1; i <= n; ++i) {
      for (long a = 0; a < l; ++a) {
        VertexId u{i, a};
        h_g(row(u), row(u)) += 1;
        h_g(row(back(u)), row(u)) -= 1;
      }
    }
    out = out.hconcat(h_g);
  }
  return out;
}

std::vector<IntMatrix> reduced_presentation(const MeshTriple& triple) {
  const int n = triple.n();
  const long k = triple.k();
  const long l = triple.l();
  std::vector<IntMatrix> out;
  auto add = [&](const PolyMatrix& m, long copies = 1) {
    IntMatrix e = m.evaluate(l);
    for (long i = 0; i < copies; ++i) out.push_back(e);
  };
  auto one = [](const ZPoly& f) { return PolyMatrix{{f}}; };
  if (triple.is_a1()) return out;
  switch (triple.type()) {
    case MeshType::I:
      if (n % 2 == 1) {
        add(one(1 - x(n + 1)), (n - 3) / 2);
        add(one((1 - x(1)) * (1 + x((n + 1) / 2))));
      } else {
        add(one(1 - x(n + 1)), (n - 2) / 2);
        add(one(1 - x(1)));
      }
      break;
    case MeshType::II: {
      ZPoly tail = 1 + x(k - (n + 1) / 2);
      add(one(tail), (n - 3) / 2);
      add(row_of({(1 - x(1)) * (1 + x((n + 1) / 2)), tail}));
      break;
    }
    case MeshType::III:
      add(one(1 + x(k - (n + 2) / 2)), (n - 2) / 2);
      add(row_of({1 - x(1), 2}));
      break;
    case MeshType::IV:
      if (n % 2 == 1) {
        add(one(1 + x(n - 1)), n - 3);
        add(one(alternating_sum(2 * n - 2)));
      } else {
        add(one(1 + x(n - 1)), n - 2);
        add(one(alternating_sum(n - 1)));
      }
      break;
    case MeshType::V:
      add(row_of({1 + x(n - 1), 1 - x(k)}), n - 3);
      if (n % 2 == 1)
        add(row_of({alternating_sum(2 * n - 2), 1 + x(k - (n - 1))}));
      else
        add(row_of({1 + x(n - 1), (1 - x(k)) * alternating_sum(n - 1)}));
      break;
    case MeshType::VI:
      add(one(1 + x(3)));
      add(one(1 + x(1)));
      break;
    case MeshType::VII:
      add(one(1 - x(12)));
      add(one((1 - x(1)) * (1 + x(3) + x(6) + x(9))));
      add(one(1 + x(6)));
      add(one(1 + x(2)));
      break;
    case MeshType::VIII: {
      ZPoly tail = 1 + x(k - 6);
      add(one(tail));
      add(row_of({(1 - x(1)) * (1 + x(3) + x(6) + x(9)), tail}));
      add(row_of({1 + x(6), tail}));
      add(row_of({1 + x(2), tail}));
      break;
    }
    case MeshType::IX:
      add(one(1 + x(9)), 6);
      add(one(1 - x(1) + x(2)));
      break;
    case MeshType::X:
      add(one(1 + x(15)), 7);
      add(one((1 - x(1) + x(2)) * (1 + x(5))));
      break;
  }
  return out;
}

bool uses_negative_exponent_wrap(const MeshTriple& triple) {
  return triple.type() == MeshType::VIII && triple.k() < 6;
}

}  // namespace meshk0
