#include "core/classifier.hpp"

#include <algorithm>
#include <numeric>

#include "core/errors.hpp"
#include "core/grothendieck.hpp"
#include "core/quiver.hpp"

namespace meshk0 {

namespace {

bool small_a(const MeshTriple& t) { return t.family() == Family::A && t.n() <= 3; }

template <class T>
bool disjoint(const std::set<T>& x, const std::set<T>& y) {
  return std::none_of(x.begin(), x.end(), [&](const T& v) { return y.count(v) > 0; });
}

void require_not_a1(const MeshTriple& triple, const char* what) {
  if (triple.is_a1()) throw UndefinedInvariantError(std::string(what) + " is undefined for A1");
}

void require_shift(const MeshTriple& triple) {
  if (!has_shift_invariants(triple))
    throw UndefinedInvariantError("shift invariants are undefined for " + triple.to_string());
}

}  // namespace

long invariant_a(const MeshTriple& triple) {
  const long n = triple.n(), k = triple.k();
  if (triple.is_type_iii()) return n * (n - 2) * (2 * k - 1) / 4;
  return n * (triple.c() - 2) * k / 2;
}

std::set<long> invariant_b(const MeshTriple& triple) {
  require_not_a1(triple, "(b)");
  if (triple.is_type_iii()) return {triple.l(), 2L * triple.l()};
  return {triple.l()};
}

bool has_shift_invariants(const MeshTriple& triple) {
  switch (triple.type()) {
    case MeshType::I:
    case MeshType::II:
    case MeshType::IV:
    case MeshType::V:
      return !small_a(triple);
    default:
      return false;
  }
}

long invariant_e(const MeshTriple& triple, Characteristic characteristic) {
  require_shift(triple);
  TranslationQuiver quiver(triple);
  QuiverAutomorphism pi = automorphism(quiver, AutomorphismName::Pi);
  QuiverAutomorphism tau = automorphism(quiver, AutomorphismName::Tau);
  const long u = automorphism_order(pi.after(tau.inverse()));
  return characteristic == Characteristic::Two ? 3 * u : std::lcm(3 * u, 2L);
}

std::string subtype(const MeshTriple& triple) {
  require_shift(triple);
  const long d = triple.d(), r = triple.r();
  const bool k_even = triple.k() % 2 == 0;
  switch (triple.type()) {
    case MeshType::I:
      if (r % 2 == 0) return d == 1 ? "I-1" : "I-2";
      return "I-3";
    case MeshType::II:
      if (r % 4 == 0) return d == 1 ? "II-1" : "II-2";
      if (r % 4 == 2) return "II-3";
      return "II-4";
    case MeshType::IV:
      if (k_even && r % 2 == 0) return r == 2 ? "IV-1" : "IV-2";
      if (k_even) return r == 1 ? "IV-3" : "IV-4";
      return r % 4 == 0 ? "IV-5" : "IV-6";
    case MeshType::V:
      if (k_even && r % 4 == 0) return "V-1";
      if (k_even && r % 4 == 2) return "V-2";
      if (k_even) return "V-3";
      if (r == 2) return "V-4";
      return d == 1 ? "V-6" : "V-5";
    default:
      break;
  }
  throw InternalError("no subtype row matches " + triple.to_string());
}

long tabulated_e(const MeshTriple& triple, Characteristic characteristic) {
  const std::string s = subtype(triple);
  const long q = triple.q();
  if (s == "II-4" || s == "V-3") return 12 * q;
  if (characteristic == Characteristic::Two && (s == "II-3" || s == "IV-6" || s == "V-2")) return 3 * q;
  return 6 * q;
}

InvariantProfile invariant_profile(const MeshTriple& triple, Characteristic characteristic) {
  InvariantProfile p{.triple = triple, .characteristic = characteristic};
  p.d_group = k0_closed_form(triple);
  if (triple.is_a1()) return p;
  p.a = invariant_a(triple);
  p.b = invariant_b(triple);
  p.c.emplace();
  for (long b : *p.b) p.c->insert(Rational(*p.a, b));
  for (auto& v : *p.c) const_cast<Rational&>(v).canonicalize();
  p.has_ct = !triple.is_type_iii();
  if (has_shift_invariants(triple)) {
    p.e = invariant_e(triple, characteristic);
    Rational f(*p.a, *p.e);
    f.canonicalize();
    p.f = std::set<Rational>{f};
    p.subtype = subtype(triple);
  }
  return p;
}

const char* verdict_kind_name(Verdict::Kind kind) {
  static constexpr const char* kNames[] = {"SameQuiver", "BothA1", "DistinguishedBy", "Indistinguishable"};
  return kNames[static_cast<int>(kind)];
}

Verdict distinguish(const InvariantProfile& p1, const InvariantProfile& p2) {
  using Kind = Verdict::Kind;
  if (p1.triple.is_a1() && p2.triple.is_a1()) return {Kind::BothA1, ""};
  if (p1.triple == p2.triple) return {Kind::SameQuiver, ""};
  auto by = [](const char* name) { return Verdict{Kind::DistinguishedBy, name}; };
  // Invariants undefined on either side (A1) are skipped.
  const bool both = !p1.triple.is_a1() && !p2.triple.is_a1();
  if (both && *p1.has_ct != *p2.has_ct) return by("ClusterTilting");
  if (both && disjoint(*p1.c, *p2.c)) return by("QuotientAB");
  if (!(p1.d_group == p2.d_group)) return by("GrothendieckGroup");
  if (both && *p1.a != *p2.a) return by("RigidCount");
  if (both && disjoint(*p1.b, *p2.b)) return by("SerreOrder");
  if (p1.e && p2.e) {
    if (*p1.e != *p2.e) return by("ShiftOrder");
    if (disjoint(*p1.f, *p2.f)) return by("ShiftQuotient");
  }
  return {Kind::Indistinguishable, ""};
}

Verdict distinguish(const MeshTriple& t1, const MeshTriple& t2, Characteristic characteristic) {
  return distinguish(invariant_profile(t1, characteristic), invariant_profile(t2, characteristic));
}

}  // namespace meshk0
