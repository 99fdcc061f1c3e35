#include "core/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "core/errors.hpp"

namespace meshk0 {

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::string VertexId::to_string() const { return "(" + std::to_string(i) + "," + std::to_string(a) + ")"; }

CoverMap::CoverMap(std::vector<int> perm, std::vector<long> shift) : perm_(std::move(perm)), shift_(std::move(shift)) {
  if (perm_.size() != shift_.size()) throw InternalError("cover map size mismatch");
}

CoverMap CoverMap::identity(int n) { return tau_power(n, 0); }

CoverMap CoverMap::tau_power(int n, long e) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  return {std::move(perm), std::vector<long>(n, -e)};
}

CoverMap CoverMap::after(const CoverMap& inner) const {
  std::vector<int> perm(n());
  std::vector<long> shift(n());
  for (int i = 0; i < n(); ++i) {
    int mid = inner.perm_[i];
    perm[i] = perm_[mid - 1];
    shift[i] = inner.shift_[i] + shift_[mid - 1];
  }
  return {std::move(perm), std::move(shift)};
}

CoverMap CoverMap::inverse() const {
  std::vector<int> perm(n());
  std::vector<long> shift(n());
  for (int i = 0; i < n(); ++i) {
    perm[perm_[i] - 1] = i + 1;
    shift[perm_[i] - 1] = -shift_[i];
  }
  return {std::move(perm), std::move(shift)};
}

CoverMap CoverMap::pow(long e) const {
  CoverMap base = e < 0 ? inverse() : *this;
  CoverMap out = identity(n());
  for (long k = std::abs(e); k > 0; --k) out = base.after(out);
  return out;
}

CoverMap psi_map(const DynkinDiagram& delta) {
  const int n = delta.n;
  std::vector<int> perm(n);
  std::vector<long> shift(n, 0);
  std::iota(perm.begin(), perm.end(), 1);
  if (delta.family == Family::A && n % 2 == 1) {
    for (int i = 1; i <= n; ++i) {
      perm[i - 1] = n + 1 - i;
      shift[i - 1] = i - (n + 1) / 2;
    }
  } else if (delta.family == Family::D) {
    std::swap(perm[n - 2], perm[n - 1]);
  } else if (delta.family == Family::E && n == 6) {
    for (int i = 1; i <= 5; ++i) {
      perm[i - 1] = 6 - i;
      shift[i - 1] = i - 3;
    }
  } else {
    throw ParameterError("psi is not defined on " + delta.name());
  }
  return {std::move(perm), std::move(shift)};
}

CoverMap phi_map(const DynkinDiagram& delta) {
  const int n = delta.n;
  if (delta.family != Family::A || n % 2 != 0) throw ParameterError("phi is not defined on " + delta.name());
  std::vector<int> perm(n);
  std::vector<long> shift(n);
  for (int i = 1; i <= n; ++i) {
    perm[i - 1] = n + 1 - i;
    shift[i - 1] = i - n / 2;
  }
  return {std::move(perm), std::move(shift)};
}

CoverMap chi_map(const DynkinDiagram& delta) {
  if (delta.family != Family::D || delta.n != 4) throw ParameterError("chi is not defined on " + delta.name());
  return {{3, 2, 4, 1}, {-1, 0, 0, 1}};
}

CoverMap nakayama_map(const DynkinDiagram& delta) {
  const int n = delta.n;
  auto tau = [n](long e) { return CoverMap::tau_power(n, e); };
  switch (delta.family) {
    case Family::A:
      if (n % 2 == 1) return tau(-(n - 1) / 2).after(psi_map(delta));
      return phi_map(delta).pow(n - 1);
    case Family::D:
      if (n % 2 == 1) return tau(-(n - 2)).after(psi_map(delta));
      return tau(-(n - 2));
    case Family::E:
      if (n == 6) return tau(-5).after(psi_map(delta));
      return tau(n == 7 ? -8 : -14);
  }
  throw InternalError("unknown family");
}

CoverMap quotient_generator(const MeshTriple& triple) {
  const DynkinDiagram& delta = triple.delta();
  CoverMap tk = CoverMap::tau_power(delta.n, triple.k());
  switch (triple.type()) {
    case MeshType::II:
    case MeshType::V:
    case MeshType::VIII:
      return tk.after(psi_map(delta));
    case MeshType::III:
      return tk.after(phi_map(delta));
    case MeshType::VI:
      return tk.after(chi_map(delta));
    default:
      return CoverMap::identity(delta.n);
  }
}

TranslationQuiver::TranslationQuiver(const MeshTriple& triple)
    : triple_(triple), generator_(quotient_generator(triple)) {
  const int n = triple.n();
  const long l = triple.l();
  const std::size_t cover = cover_size();
  auto cover_vertex = [&](std::size_t idx) { return VertexId{static_cast<int>(idx / l) + 1, static_cast<long>(idx % l)}; };

  std::vector<VertexId> reps;
  std::vector<int> provisional(cover, -1);
  for (std::size_t u = 0; u < cover; ++u) {
    if (provisional[u] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    VertexId best = cover_vertex(u);
    std::size_t size = 0;
    for (VertexId v = best;; ) {
      std::size_t idx = cover_index(v);
      if (provisional[idx] >= 0) {
        if (provisional[idx] != id || idx != u) throw InternalError("quotient generator does not act freely");
        break;
      }
      provisional[idx] = id;
      ++size;
      VertexId canon{v.i, mod(v.a, l)};
      if (std::pair(canon.a, canon.i) < std::pair(best.a, best.i)) best = canon;
      v = generator_(v);
    }
    if (static_cast<int>(size) != triple.t()) throw InternalError("quotient orbit of unexpected size");
    reps.push_back(best);
  }

  std::vector<int> order(reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return reps[x] < reps[y]; });
  std::vector<int> rank(reps.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    rank[order[pos]] = static_cast<int>(pos);
    vertices_.push_back(reps[order[pos]]);
  }
  orbit_of_cover_.resize(cover);
  for (std::size_t u = 0; u < cover; ++u) orbit_of_cover_[u] = rank[provisional[u]];

  if (static_cast<long>(vertices_.size()) * triple.t() != static_cast<long>(n) * l)
    throw InternalError("vertex count differs from n*l/t");

  // Arrows of Z(Delta) leaving (x, a): (x,a)->(j,a) for x->j, (x,a)->(i,a+1) for i->x.
  auto cover_successors = [&](const VertexId& v) {
    std::vector<VertexId> out;
    for (const auto& [i, j] : triple.delta().arrows) {
      if (i == v.i) out.push_back({j, v.a});
      if (j == v.i) out.push_back({i, v.a + 1});
    }
    return out;
  };

  const std::size_t count = vertices_.size();
  out_.resize(count);
  tau_.resize(count);
  tau_inv_.resize(count);
  std::map<std::pair<int, int>, int> by_ends;
  for (std::size_t x = 0; x < count; ++x) {
    const VertexId& rep = vertices_[x];
    tau_[x] = index_of({rep.i, rep.a - 1});
    tau_inv_[x] = index_of({rep.i, rep.a + 1});
    for (const VertexId& y : cover_successors(rep)) {
      Arrow arrow{static_cast<int>(x), index_of(y), -1};
      if (!by_ends.emplace(std::pair(arrow.source, arrow.target), static_cast<int>(arrows_.size())).second)
        throw InternalError("multiple arrows in " + triple.to_string());
      out_[x].push_back(static_cast<int>(arrows_.size()));
      arrows_.push_back(arrow);
    }
  }
  for (auto& arrow : arrows_) {
    auto it = by_ends.find({arrow.target, tau_inv_[arrow.source]});
    if (it == by_ends.end()) throw InternalError("mesh law fails in " + triple.to_string());
    arrow.partner = it->second;
  }
  for (std::size_t x = 0; x < count; ++x) {
    std::sort(out_[x].begin(), out_[x].end(),
              [&](int p, int q) { return vertices_[arrows_[p].target] < vertices_[arrows_[q].target]; });
  }
  for (std::size_t u = 0; u < count; ++u)
    for (std::size_t v = 0; v < count; ++v)
      if (arrow_count(u, v) != arrow_count(v, tau_inv_[u])) throw InternalError("mesh law fails in " + triple.to_string());
}

std::size_t TranslationQuiver::cover_index(const VertexId& v) const {
  return static_cast<std::size_t>(v.i - 1) * triple_.l() + mod(v.a, triple_.l());
}

int TranslationQuiver::index_of(const VertexId& v) const { return orbit_of_cover_[cover_index(v)]; }

std::optional<int> TranslationQuiver::find(const VertexId& v) const {
  if (v.i < 1 || v.i > triple_.n()) return std::nullopt;
  return index_of(v);
}

int TranslationQuiver::arrow_count(int from, int to) const {
  return static_cast<int>(std::count_if(out_[from].begin(), out_[from].end(),
                                        [&](int a) { return arrows_[a].target == to; }));
}

std::vector<Mesh> TranslationQuiver::mesh_list() const {
  std::vector<Mesh> out;
  for (std::size_t u = 0; u < vertices_.size(); ++u) {
    Mesh m{vertices_[u], {}, vertices_[tau_inv_[u]]};
    for (int a : out_[u]) m.successors.push_back(vertices_[arrows_[a].target]);
    out.push_back(std::move(m));
  }
  return out;
}

const char* automorphism_name(AutomorphismName name) {
  static constexpr const char* kNames[] = {"tau", "psi", "phi", "chi", "pi", "composite"};
  return kNames[static_cast<int>(name)];
}

QuiverAutomorphism::QuiverAutomorphism(const TranslationQuiver& quiver, AutomorphismName name, const CoverMap& map)
    : name_(name), map_(map) {
  const MeshTriple& triple = quiver.triple();
  images_.assign(quiver.vertex_count(), -1);
  for (int i = 1; i <= triple.n(); ++i) {
    for (long a = 0; a < triple.l(); ++a) {
      int from = quiver.index_of({i, a});
      int to = quiver.index_of(map({i, a}));
      if (images_[from] < 0) images_[from] = to;
      if (images_[from] != to)
        throw ParameterError(std::string(automorphism_name(name)) + " does not descend to " + triple.to_string());
    }
  }
  for (const Arrow& arrow : quiver.arrows()) {
    if (quiver.arrow_count(images_[arrow.source], images_[arrow.target]) == 0)
      throw ParameterError(std::string(automorphism_name(name)) + " does not preserve arrows");
  }
}

QuiverAutomorphism QuiverAutomorphism::after(const QuiverAutomorphism& inner) const {
  std::vector<int> images(images_.size());
  for (std::size_t v = 0; v < images.size(); ++v) images[v] = images_[inner.images_[v]];
  return {AutomorphismName::Composite, map_.after(inner.map_), std::move(images)};
}

QuiverAutomorphism QuiverAutomorphism::inverse() const {
  std::vector<int> images(images_.size());
  for (std::size_t v = 0; v < images.size(); ++v) images[images_[v]] = static_cast<int>(v);
  return {AutomorphismName::Composite, map_.inverse(), std::move(images)};
}

QuiverAutomorphism QuiverAutomorphism::pow(long e) const {
  QuiverAutomorphism base = e < 0 ? inverse() : *this;
  std::vector<int> id(images_.size());
  std::iota(id.begin(), id.end(), 0);
  QuiverAutomorphism out(AutomorphismName::Composite, CoverMap::identity(map_.n()), std::move(id));
  for (long k = std::abs(e); k > 0; --k) out = base.after(out);
  out.name_ = AutomorphismName::Composite;
  return out;
}

QuiverAutomorphism automorphism(const TranslationQuiver& quiver, AutomorphismName name) {
  const DynkinDiagram& delta = quiver.triple().delta();
  switch (name) {
    case AutomorphismName::Tau:
      return {quiver, name, CoverMap::tau_power(delta.n, 1)};
    case AutomorphismName::Psi:
      return {quiver, name, psi_map(delta)};
    case AutomorphismName::Phi:
      return {quiver, name, phi_map(delta)};
    case AutomorphismName::Chi:
      return {quiver, name, chi_map(delta)};
    case AutomorphismName::Pi:
      return {quiver, name, nakayama_map(delta)};
    case AutomorphismName::Composite:
      break;
  }
  throw ParameterError("composite automorphisms are built by composition");
}

long automorphism_order(const QuiverAutomorphism& aut) {
  const auto& img = aut.images();
  std::vector<bool> seen(img.size(), false);
  long order = 1;
  for (std::size_t v = 0; v < img.size(); ++v) {
    if (seen[v]) continue;
    long len = 0;
    for (std::size_t w = v; !seen[w]; w = img[w]) {
      seen[w] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

}  // namespace meshk0
