#pragma once

#include <vector>

#include "core/dynkin.hpp"
#include "core/int_matrix.hpp"
#include "core/zpoly.hpp"

namespace meshk0 {

// X_m^p: permutation matrix sending e_b to e_{b+p mod m}.
IntMatrix circulant_power(long m, long p);

// Permutation matrix Y with Y^{-1} X_m^p Y = X_q^{(+)d}, d = gcd(p, m), q = m/d.
IntMatrix orbit_permutation(long m, long p);

struct StandardBlocks {
  PolyMatrix t;  // n x n antidiagonal, x^c in column c
  PolyMatrix u;  // n x 1 all ones
  PolyMatrix v;  // (n-2) x 1, entries 1 + x^(n-1-i)
  PolyMatrix w;  // (n-2) x 1, entries x^i + ... + x^(n-2)
  ZPoly f;
  ZPoly g;
};

// v, w, f, g are left empty for n < 4.
StandardBlocks standard_blocks(int n);

// The polynomial matrix M(x) whose evaluation at X_l presents K0.
PolyMatrix generator_polynomial_matrix(const MeshTriple& triple);

// M(X_l); row (i-1)*l + a corresponds to the simple at cover vertex (i, a).
IntMatrix assemble_generator_matrix(const MeshTriple& triple);

// Presentation on the cover Z(Delta)/<tau^l>: columns e_u + e_{pi tau^{-1} u}
// for every cover vertex, then `projective_columns` (dimension vectors of the
// cover projectives at {1} x Z/l for A_n, {1, n} x Z/l otherwise), then
// e_u - e_{g^{-1} u} when t > 1.
IntMatrix assemble_from_first_principles(const MeshTriple& triple, const IntMatrix& projective_columns);

// Vertices of the cover whose projectives feed assemble_from_first_principles,
// as (i, a) pairs in column order.
std::vector<std::pair<int, long>> first_principles_projective_vertices(const MeshTriple& triple);

// Small matrices whose cokernels sum to K0; empty list for A1.
std::vector<IntMatrix> reduced_presentation(const MeshTriple& triple);

// True for type VIII with k < 6, where an exponent k - 6 is negative and is
// read modulo l.
bool uses_negative_exponent_wrap(const MeshTriple& triple);

}  // namespace meshk0
