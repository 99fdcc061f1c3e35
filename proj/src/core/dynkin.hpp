#pragma once

#include <compare>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace meshk0 {

enum class Family { A, D, E };

// Oriented Dynkin diagram. Vertices are 1..n and every arrow points away
// from vertex 1, so depth(j) = depth(i) + 1 for each arrow i -> j.
struct DynkinDiagram {
  Family family = Family::A;
  int n = 1;
  std::vector<std::pair<int, int>> arrows;
  int coxeter = 2;

  int depth(int vertex) const { return depths[vertex - 1]; }
  std::string name() const;

  std::vector<int> depths;
};

DynkinDiagram build_dynkin(Family family, int n);

enum class MeshType { I, II, III, IV, V, VI, VII, VIII, IX, X };

const char* type_name(MeshType type);

// Parameter triple (Delta, l, t) naming the quiver Q_{Delta,l,t} and its
// mesh algebra, together with the derived quantities used throughout.
class MeshTriple {
 public:
  static MeshTriple make(Family family, int n, int l, int t);
  // "A5:l=4:t=2"
  static MeshTriple parse(const std::string& text);

  const DynkinDiagram& delta() const { return delta_; }
  Family family() const { return delta_.family; }
  int n() const { return delta_.n; }
  int l() const { return l_; }
  int t() const { return t_; }
  int k() const { return k_; }
  int c() const { return delta_.coxeter; }
  MeshType type() const { return type_; }
  bool is_type_iii() const { return type_ == MeshType::III; }
  bool is_a1() const { return delta_.family == Family::A && delta_.n == 1; }

  // gcd(c, k), c/d and k/d. For type III these refer to d0 = gcd(c, 2k-1)
  // and its cofactors; the half-integer d0/2 is never formed.
  int d() const { return d_; }
  int r() const { return r_; }
  int q() const { return q_; }

  std::string to_string() const;

  bool operator==(const MeshTriple& other) const { return key() == other.key(); }
  auto operator<=>(const MeshTriple& other) const { return key() <=> other.key(); }

 private:
  std::tuple<int, int, int, int> key() const {
    return {static_cast<int>(delta_.family), delta_.n, l_, t_};
  }

  DynkinDiagram delta_;
  int l_ = 1;
  int t_ = 1;
  int k_ = 1;
  MeshType type_ = MeshType::I;
  int d_ = 1;
  int r_ = 1;
  int q_ = 1;
};

// Every valid triple with n <= nmax per family (A_1..A_nmax, D_4..D_nmax,
// E6..E8) and k = 1..kmax, sorted.
std::vector<MeshTriple> triple_grid(int nmax, int kmax);

}  // namespace meshk0
