#pragma once

#include "core/int_matrix.hpp"

namespace meshk0 {

// Rank over Q by fraction-free (Bareiss) elimination. Independent of the
// Smith reduction so the two can check each other.
std::size_t rational_rank(const IntMatrix& m);

// Determinant of a square matrix by fraction-free elimination.
Integer determinant(const IntMatrix& m);

}  // namespace meshk0
