#pragma once

#include <optional>

#include "core/abelian_group.hpp"
#include "core/int_matrix.hpp"

namespace meshk0 {

struct SmithForm {
  IntMatrix d;
  // Present only when requested: u * m * v == d with u, v unimodular.
  std::optional<IntMatrix> u;
  std::optional<IntMatrix> v;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms = false);

// Z^rows / column span of m.
AbelianGroup cokernel(const IntMatrix& m);

}  // namespace meshk0
