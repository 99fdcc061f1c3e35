#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/dynkin.hpp"

namespace meshk0 {

struct VertexId {
  int i = 1;
  long a = 0;

  bool operator==(const VertexId&) const = default;
  auto operator<=>(const VertexId&) const = default;
  std::string to_string() const;
};

// Automorphism of Z(Delta) of the form (i, a) -> (perm(i), a + shift(i)).
// Every map used here (tau, psi, phi, chi and their composites) has this
// shape and commutes with tau.
class CoverMap {
 public:
  static CoverMap identity(int n);
  static CoverMap tau_power(int n, long e);

  CoverMap(std::vector<int> perm, std::vector<long> shift);

  int n() const { return static_cast<int>(perm_.size()); }
  VertexId operator()(const VertexId& v) const { return {perm_[v.i - 1], v.a + shift_[v.i - 1]}; }

  // (*this) after `inner`
  CoverMap after(const CoverMap& inner) const;
  CoverMap inverse() const;
  CoverMap pow(long e) const;

  bool operator==(const CoverMap&) const = default;

 private:
  std::vector<int> perm_;
  std::vector<long> shift_;
};

CoverMap psi_map(const DynkinDiagram& delta);
CoverMap phi_map(const DynkinDiagram& delta);
CoverMap chi_map(const DynkinDiagram& delta);
// Nakayama permutation written as a composite of tau-powers and psi/phi.
CoverMap nakayama_map(const DynkinDiagram& delta);
// Generator g of the group acting on Z(Delta)/<tau^l> whose orbit quiver is
// Q_{Delta,l,t}; identity when t = 1.
CoverMap quotient_generator(const MeshTriple& triple);

struct Arrow {
  int source = 0;
  int target = 0;
  // Arrow target -> tau^{-1}(source) completing the mesh starting here.
  int partner = 0;
};

struct Mesh {
  VertexId start;
  std::vector<VertexId> successors;
  VertexId end;
};

// Finite stable translation quiver Q_{Delta,l,t}, realised as the orbit
// quiver of Z(Delta)/<tau^l> under the quotient generator.
class TranslationQuiver {
 public:
  explicit TranslationQuiver(const MeshTriple& triple);

  const MeshTriple& triple() const { return triple_; }
  int period() const { return triple_.l(); }

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  // Vertex index of an arbitrary vertex of Z(Delta).
  int index_of(const VertexId& v) const;
  std::optional<int> find(const VertexId& v) const;
  int tau(int vertex) const { return tau_[vertex]; }
  int tau_inverse(int vertex) const { return tau_inv_[vertex]; }
  const std::vector<int>& arrows_from(int vertex) const { return out_[vertex]; }

  // Cover vertex (i, a mod l) as a row index (i-1)*l + a.
  std::size_t cover_index(const VertexId& v) const;
  std::size_t cover_size() const { return static_cast<std::size_t>(triple_.n()) * triple_.l(); }

  std::vector<Mesh> mesh_list() const;
  int arrow_count(int from, int to) const;

 private:
  MeshTriple triple_;
  CoverMap generator_;
  std::vector<VertexId> vertices_;
  std::vector<int> orbit_of_cover_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_;
  std::vector<int> tau_;
  std::vector<int> tau_inv_;
};

enum class AutomorphismName { Tau, Psi, Phi, Chi, Pi, Composite };

const char* automorphism_name(AutomorphismName name);

// Vertex permutation of a TranslationQuiver induced by a CoverMap.
class QuiverAutomorphism {
 public:
  // Throws ParameterError if the map does not descend to the quotient or
  // fails to preserve arrows.
  QuiverAutomorphism(const TranslationQuiver& quiver, AutomorphismName name, const CoverMap& map);

  AutomorphismName name() const { return name_; }
  const CoverMap& cover_map() const { return map_; }
  const std::vector<int>& images() const { return images_; }
  int operator()(int vertex) const { return images_[vertex]; }

  // this after `inner`, on the same quiver.
  QuiverAutomorphism after(const QuiverAutomorphism& inner) const;
  QuiverAutomorphism inverse() const;
  QuiverAutomorphism pow(long e) const;

  bool same_vertex_map(const QuiverAutomorphism& other) const { return images_ == other.images_; }

 private:
  QuiverAutomorphism(AutomorphismName name, CoverMap map, std::vector<int> images)
      : name_(name), map_(std::move(map)), images_(std::move(images)) {}

  AutomorphismName name_;
  CoverMap map_;
  std::vector<int> images_;
};

// Throws ParameterError if `name` does not apply to the diagram (psi only on
// A_n odd, D_n, E6; phi only on A_n even; chi only on D4).
QuiverAutomorphism automorphism(const TranslationQuiver& quiver, AutomorphismName name);

long automorphism_order(const QuiverAutomorphism& aut);

}  // namespace meshk0
