#pragma once

#include <map>
#include <utility>
#include <vector>

#include "core/abelian_group.hpp"
#include "core/int_matrix.hpp"
#include "core/quiver.hpp"

namespace meshk0 {

// dims[u][v] = dim e_u Lambda e_v, the number of independent paths u -> v in
// the mesh algebra, indexed by TranslationQuiver vertex order.
struct HomTable {
  std::vector<VertexId> vertices;
  std::vector<std::vector<long>> dims;

  long total() const;
  bool operator==(const HomTable&) const = default;
};

// Nonzero values of dim Hom(source, x) in the mesh category of Z(Delta).
std::map<std::pair<int, long>, long> hammock(const DynkinDiagram& delta, const VertexId& source);

HomTable hom_dims_knitting(const MeshTriple& triple);

// Column u is the dimension vector of the projective at vertex u.
IntMatrix cartan_matrix(const MeshTriple& triple);

// Cartan columns for the listed vertices, which may be given by any lift.
IntMatrix projective_columns(const MeshTriple& triple, const std::vector<VertexId>& subset);

}  // namespace meshk0
