#pragma once

#include <cstddef>

#include "core/dynkin.hpp"
#include "core/mesh_oracle.hpp"

namespace meshk0 {

enum class Field { Rationals, Mod2, Mod3 };

// Default cap on candidate paths per degree; MESHK0_MAX_PATHS overrides it.
inline constexpr std::size_t kDefaultMaxPaths = 1000000;

std::size_t max_paths_guard();

// Dimensions of e_u Lambda e_v by degree-wise elimination of the mesh ideal
// in the path algebra. Throws SizeError if a degree has more candidate paths
// than the guard or nonzero paths survive past max_len.
HomTable hom_dims_bruteforce(const MeshTriple& triple, int max_len, Field field = Field::Rationals);

}  // namespace meshk0
