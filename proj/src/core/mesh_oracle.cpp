#include "core/mesh_oracle.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace meshk0 {

long HomTable::total() const {
  long s = 0;
  for (const auto& row : dims)
    for (long v : row) s += v;
  return s;
}

std::map<std::pair<int, long>, long> hammock(const DynkinDiagram& delta, const VertexId& source) {
  const int n = delta.n;
  auto weight = [&](int i, long a) { return 2 * a + delta.depth(i); };
  const long w0 = weight(source.i, source.a);

  std::map<std::pair<int, long>, long> h;
  auto value = [&](int i, long a) -> long {
    auto it = h.find({i, a});
    return it == h.end() ? 0 : it->second;
  };
  h[{source.i, source.a}] = 1;

  // A layer only depends on the two before it, so two empty layers end the
  // support. The bound is a guard against a runaway recursion.
  const long limit = w0 + 8L * delta.coxeter + 8;
  int empty_layers = 0;
  for (long w = w0 + 1; empty_layers < 2; ++w) {
    if (w > limit) throw InternalError("hammock did not terminate on " + delta.name());
    bool any = false;
    for (int x = 1; x <= n; ++x) {
      long twice_a = w - delta.depth(x);
      if (twice_a % 2 != 0) continue;
      long a = twice_a / 2;
      long sum = -value(x, a - 1);
      for (const auto& [i, j] : delta.arrows) {
        if (j == x) sum += value(i, a);
        if (i == x) sum += value(j, a - 1);
      }
      if (sum > 0) {
        h[{x, a}] = sum;
        any = true;
      }
    }
    empty_layers = any ? 0 : empty_layers + 1;
  }
  return h;
}

HomTable hom_dims_knitting(const MeshTriple& triple) {
  TranslationQuiver quiver(triple);
  const std::size_t count = quiver.vertex_count();
  HomTable table;
  table.vertices = quiver.vertices();
  table.dims.assign(count, std::vector<long>(count, 0));
  for (std::size_t u = 0; u < count; ++u) {
    for (const auto& [key, value] : hammock(triple.delta(), quiver.vertices()[u]))
      table.dims[u][quiver.index_of({key.first, key.second})] += value;
  }
  return table;
}

IntMatrix cartan_matrix(const MeshTriple& triple) {
  HomTable table = hom_dims_knitting(triple);
  const std::size_t count = table.vertices.size();
  IntMatrix c(count, count);
  for (std::size_t u = 0; u < count; ++u)
    for (std::size_t v = 0; v < count; ++v) c(v, u) = table.dims[u][v];
  return c;
}

IntMatrix projective_columns(const MeshTriple& triple, const std::vector<VertexId>& subset) {
  TranslationQuiver quiver(triple);
  IntMatrix c = cartan_matrix(triple);
  std::vector<std::size_t> which;
  for (const VertexId& v : subset) {
    auto idx = quiver.find(v);
    if (!idx) throw ParameterError("unknown vertex " + v.to_string() + " in " + triple.to_string());
    which.push_back(static_cast<std::size_t>(*idx));
  }
  return c.columns(which);
}

}  // namespace meshk0
