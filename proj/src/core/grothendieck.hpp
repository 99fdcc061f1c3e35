#pragma once

#include "core/abelian_group.hpp"
#include "core/dynkin.hpp"

namespace meshk0 {

enum class Route { ClosedForm, GeneratorMatrix, ReducedPresentation, Cartan };

const char* route_name(Route route);

struct K0Result {
  MeshTriple triple;
  AbelianGroup group;
  Route route;
};

// Z^a + (Z/2)^b + H from the closed-form table.
AbelianGroup k0_closed_form(const MeshTriple& triple);
AbelianGroup k0_from_generators(const MeshTriple& triple);
AbelianGroup k0_from_reduced(const MeshTriple& triple);
// Cokernel of the Cartan matrix computed by knitting.
AbelianGroup k0_from_cartan(const MeshTriple& triple);

AbelianGroup k0(const MeshTriple& triple, Route route);

}  // namespace meshk0
