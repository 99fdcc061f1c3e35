#include "core/grothendieck.hpp"

#include "core/circulant.hpp"
#include "core/errors.hpp"
#include "core/mesh_oracle.hpp"
#include "core/smith.hpp"

namespace meshk0 {

namespace {

AbelianGroup table_entry(long a, long b, std::vector<Integer> h = {}) {
  std::vector<Integer> orders(static_cast<std::size_t>(b), 2);
  orders.insert(orders.end(), h.begin(), h.end());
  return {a, std::move(orders)};
}

bool in(long x, std::initializer_list<long> set) {
  for (long s : set)
    if (x == s) return true;
  return false;
}

[[noreturn]] void no_row(const MeshTriple& triple) {
  throw InternalError("no closed-form row matches " + triple.to_string());
}

}  // namespace

const char* route_name(Route route) {
  static constexpr const char* kNames[] = {"closed", "matrix", "reduced", "cartan"};
  return kNames[static_cast<int>(route)];
}

AbelianGroup k0_closed_form(const MeshTriple& triple) {
  const long n = triple.n(), d = triple.d(), r = triple.r();
  const bool k_even = triple.k() % 2 == 0;
  switch (triple.type()) {
    case MeshType::I:
      if (r % 2 == 0) return table_entry((n * d - 3 * d + 2) / 2, d - 1);
      return table_entry((n * d - 2 * d + 2) / 2, 0);
    case MeshType::II:
      if (r % 4 == 0) return table_entry((n * d - 3 * d) / 2, d - 1, {4});
      if (r % 4 == 2) return table_entry(0, n * d - 2 * d + 1);
      return table_entry((n * d - d) / 4, 0);
    case MeshType::III:
      // d here is gcd(c, 2k-1); the table's d is half of it.
      return table_entry(0, (n - 2) * d / 2 + 1);
    case MeshType::IV:
      if (k_even && r % 2 == 0) return table_entry(d - 1, n * d - 3 * d, {r});
      if (k_even) return table_entry((n * d - d - 2) / 2, 0, {r});
      if (r % 4 == 0) return table_entry(d, n * d - 3 * d);
      return table_entry(0, n * d - d - 1);
    case MeshType::V:
      if (k_even && r % 4 == 0) return table_entry(d, n * d - 3 * d);
      if (k_even && r % 4 == 2) return table_entry(0, n * d - d - 1);
      if (k_even) return table_entry((n * d - 2 * d) / 2, 0);
      return table_entry(d - 1, n * d - 3 * d, {r});
    case MeshType::VI:
      return k_even ? table_entry(4, 0) : table_entry(0, 4);
    case MeshType::VII:
      if (in(d, {1, 3})) return table_entry(d + 1, d + 1, std::vector<Integer>(d - 1, 4));
      if (in(d, {2, 6})) return table_entry((3 * d + 2) / 2, (3 * d + 2) / 2);
      if (in(d, {4, 12})) return table_entry((9 * d + 12) / 4, 0);
      no_row(triple);
    case MeshType::VIII:
      if (in(d, {1, 3})) return table_entry(2 * d, d + 1);
      if (in(d, {2, 6})) return table_entry(0, (9 * d + 6) / 2);
      if (in(d, {4, 12})) return table_entry((3 * d + 4) / 2, 0);
      no_row(triple);
    case MeshType::IX:
      if (d == 1) return table_entry(0, 6);
      if (in(d, {3, 9})) return table_entry(0, 6 * d + 2);
      if (d == 2) return table_entry(6, 0, {3});
      if (in(d, {6, 18})) return table_entry(3 * d + 2, 0);
      no_row(triple);
    case MeshType::X:
      if (in(d, {1, 3, 5})) return table_entry(0, 8 * d);
      if (d == 15) return table_entry(0, 112);
      if (in(d, {2, 6, 10})) return table_entry(4 * d, 0);
      if (d == 30) return table_entry(112, 0);
      no_row(triple);
  }
  no_row(triple);
}

AbelianGroup k0_from_generators(const MeshTriple& triple) { return cokernel(assemble_generator_matrix(triple)); }

AbelianGroup k0_from_reduced(const MeshTriple& triple) {
  std::vector<AbelianGroup> parts;
  for (const IntMatrix& m : reduced_presentation(triple)) parts.push_back(cokernel(m));
  return direct_sum(parts);
}

AbelianGroup k0_from_cartan(const MeshTriple& triple) { return cokernel(cartan_matrix(triple)); }

AbelianGroup k0(const MeshTriple& triple, Route route) {
  switch (route) {
    case Route::ClosedForm:
      return k0_closed_form(triple);
    case Route::GeneratorMatrix:
      return k0_from_generators(triple);
    case Route::ReducedPresentation:
      return k0_from_reduced(triple);
    case Route::Cartan:
      return k0_from_cartan(triple);
  }
  throw InternalError("unknown route");
}

}  // namespace meshk0
