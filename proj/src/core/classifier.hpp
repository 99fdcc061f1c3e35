#pragma once

#include <optional>
#include <set>
#include <string>

#include <gmpxx.h>

#include "core/abelian_group.hpp"
#include "core/dynkin.hpp"

namespace meshk0 {

enum class Characteristic { Zero, Two };

using Rational = mpq_class;

// Stable-equivalence invariants of one mesh algebra. Fields that are not
// defined for the triple are empty.
struct InvariantProfile {
  MeshTriple triple;
  Characteristic characteristic = Characteristic::Zero;
  // Nonprojective summand count of a maximal stable rigid object.
  std::optional<long> a;
  // Possible orders of [-2] composed with the Serre functor.
  std::optional<std::set<long>> b;
  std::optional<std::set<Rational>> c;
  AbelianGroup d_group;
  std::optional<bool> has_ct;
  // Order of the shift functor.
  std::optional<long> e;
  std::optional<std::set<Rational>> f;
  std::optional<std::string> subtype;

  bool operator==(const InvariantProfile&) const = default;
};

long invariant_a(const MeshTriple& triple);
std::set<long> invariant_b(const MeshTriple& triple);
long invariant_e(const MeshTriple& triple, Characteristic characteristic);
// Value of (e) listed for the triple's subtype: 6q, 12q or 3q.
long tabulated_e(const MeshTriple& triple, Characteristic characteristic);
std::string subtype(const MeshTriple& triple);
// True where the shift-order invariants apply: types I, II, IV, V without
// A1, A2, A3.
bool has_shift_invariants(const MeshTriple& triple);

InvariantProfile invariant_profile(const MeshTriple& triple, Characteristic characteristic);

struct Verdict {
  enum class Kind { SameQuiver, BothA1, DistinguishedBy, Indistinguishable };
  Kind kind = Kind::Indistinguishable;
  // Name of the separating invariant when kind == DistinguishedBy.
  std::string separator;

  bool operator==(const Verdict&) const = default;
};

const char* verdict_kind_name(Verdict::Kind kind);

Verdict distinguish(const InvariantProfile& p1, const InvariantProfile& p2);
Verdict distinguish(const MeshTriple& t1, const MeshTriple& t2, Characteristic characteristic);

}  // namespace meshk0
