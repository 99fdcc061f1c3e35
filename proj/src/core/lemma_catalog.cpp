#include "core/lemma_catalog.hpp"

#include <numeric>
#include <sstream>

#include "core/circulant.hpp"
#include "core/errors.hpp"
#include "core/smith.hpp"

namespace meshk0 {

namespace {

struct CaseInfo {
  LemmaCase id;
  const char* name;
};

constexpr CaseInfo kCases[] = {
    {LemmaCase::PowerSingle, "power_single"},
    {LemmaCase::PowerPair, "power_pair"},
    {LemmaCase::OneMinusPower, "one_minus_power"},
    {LemmaCase::ScaledOneMinusPower, "scaled_one_minus_power"},
    {LemmaCase::OneMinusPowerWithScalar, "one_minus_power_with_scalar"},
    {LemmaCase::OnePlusPower, "one_plus_power"},
    {LemmaCase::SignFlipSingle, "sign_flip_single"},
    {LemmaCase::SignFlipPair, "sign_flip_pair"},
    {LemmaCase::AbsorbSingle, "absorb_single"},
    {LemmaCase::AbsorbPair, "absorb_pair"},
    {LemmaCase::ScaledAllOnes, "scaled_all_ones"},
    {LemmaCase::AllOnesWithScalar, "all_ones_with_scalar"},
    {LemmaCase::DecomposeSingle, "decompose_single"},
    {LemmaCase::DecomposePair, "decompose_pair"},
    {LemmaCase::AlternatingSum, "alternating_sum"},
    {LemmaCase::TypeI, "type_i"},
    {LemmaCase::TypeII, "type_ii"},
    {LemmaCase::TypeV1, "type_v_1"},
    {LemmaCase::TypeV2, "type_v_2"},
    {LemmaCase::TypeV3, "type_v_3"},
    {LemmaCase::TypeVII, "type_vii"},
    {LemmaCase::TypeVIII1, "type_viii_1"},
    {LemmaCase::TypeVIII2a, "type_viii_2a"},
    {LemmaCase::TypeVIII2b, "type_viii_2b"},
    {LemmaCase::TypeX, "type_x"},
};

ZPoly x(long e) { return ZPoly::monomial(e); }

long gcd0(long a, long b) { return std::gcd(a, b); }

IntMatrix eval(const ZPoly& f, long m) { return f.evaluate(m); }

IntMatrix eval_row(std::initializer_list<ZPoly> entries, long m) { return PolyMatrix{entries}.evaluate(m); }

AbelianGroup coker_of(const IntMatrix& m) { return cokernel(m); }

AbelianGroup group(long rank, long count, long order) {
  return {rank, std::vector<Integer>(static_cast<std::size_t>(count), order)};
}

const ZPoly& need(const std::optional<ZPoly>& f, const char* what) {
  if (!f) throw ParameterError(std::string("missing polynomial ") + what);
  return *f;
}

ZPoly geometric_sum_1_3_6_9() { return 1 + x(3) + x(6) + x(9); }

}  // namespace

const char* lemma_case_name(LemmaCase c) {
  for (const auto& info : kCases)
    if (info.id == c) return info.name;
  return "unknown";
}

std::optional<LemmaCase> lemma_case_from_name(const std::string& name) {
  for (const auto& info : kCases)
    if (name == info.name) return info.id;
  return std::nullopt;
}

std::string LemmaParams::describe() const {
  std::ostringstream out;
  out << "m=" << m << " p=" << p << " l=" << l << " n=" << n << " k=" << k;
  if (f) out << " f=" << f->to_string();
  if (g) out << " g=" << g->to_string();
  return out.str();
}

bool lemma_hypotheses_hold(LemmaCase c, const LemmaParams& s) {
  switch (c) {
    case LemmaCase::PowerSingle:
    case LemmaCase::AbsorbSingle:
      return s.m >= 1 && s.f.has_value();
    case LemmaCase::PowerPair:
    case LemmaCase::AbsorbPair:
      return s.m >= 1 && s.f.has_value() && s.g.has_value();
    case LemmaCase::OneMinusPower:
    case LemmaCase::OnePlusPower:
      return s.m >= 1;
    case LemmaCase::ScaledOneMinusPower:
    case LemmaCase::OneMinusPowerWithScalar:
    case LemmaCase::ScaledAllOnes:
    case LemmaCase::AllOnesWithScalar:
      return s.m >= 1 && s.l >= 1;
    case LemmaCase::SignFlipSingle:
      return s.m >= 1 && s.m % 2 == 0 && s.f.has_value();
    case LemmaCase::SignFlipPair:
      return s.m >= 1 && s.m % 2 == 0 && s.f.has_value() && s.g.has_value();
    case LemmaCase::DecomposeSingle:
      return s.m >= 1 && gcd0(s.p, s.m) >= 2 && s.f.has_value();
    case LemmaCase::DecomposePair:
      return s.m >= 1 && gcd0(s.p, s.m) >= 2 && s.f.has_value() && s.g.has_value();
    case LemmaCase::AlternatingSum:
      return s.m >= 1 && s.p >= 1;
    case LemmaCase::TypeI:
    case LemmaCase::TypeII:
      return s.n >= 1 && s.n % 2 == 1 && s.k >= 1;
    case LemmaCase::TypeV1:
      return s.n >= 4 && s.k >= 1;
    case LemmaCase::TypeV2:
      return s.n >= 4 && s.n % 2 == 1 && s.k >= 1;
    case LemmaCase::TypeV3:
      return s.n >= 4 && s.n % 2 == 0 && s.k >= 1;
    case LemmaCase::TypeVII:
    case LemmaCase::TypeVIII1:
    case LemmaCase::TypeVIII2a:
    case LemmaCase::TypeVIII2b:
    case LemmaCase::TypeX:
      return s.k >= 1;
  }
  return false;
}

IntMatrix lemma_matrix(LemmaCase c, const LemmaParams& s) {
  if (!lemma_hypotheses_hold(c, s)) throw ParameterError(std::string("hypotheses of ") + lemma_case_name(c) + " fail");
  const long m = s.m, p = s.p, k = s.k, n = s.n;
  const Integer l = s.l;
  switch (c) {
    case LemmaCase::PowerSingle:
      return eval(s.f->substitute_power(p), m);
    case LemmaCase::PowerPair:
      return eval_row({s.f->substitute_power(p), s.g->substitute_power(p)}, m);
    case LemmaCase::OneMinusPower:
      return eval(1 - x(p), m);
    case LemmaCase::ScaledOneMinusPower:
      return eval(1 - x(p), m).scaled(l);
    case LemmaCase::OneMinusPowerWithScalar:
      return eval(1 - x(p), m).hconcat(IntMatrix::scalar(m, l));
    case LemmaCase::OnePlusPower:
      return eval(1 + x(p), m);
    case LemmaCase::SignFlipSingle:
      return eval(*s.f, m);
    case LemmaCase::SignFlipPair:
      return eval_row({*s.f, *s.g}, m);
    case LemmaCase::AbsorbSingle:
      return eval_row({*s.f, 1 - x(p)}, m);
    case LemmaCase::AbsorbPair:
      return eval_row({*s.f, *s.g, 1 - x(p)}, m);
    case LemmaCase::ScaledAllOnes:
      return eval(alternating_sum(m).negate_variable(), m).scaled(l);
    case LemmaCase::AllOnesWithScalar:
      return eval(alternating_sum(m).negate_variable(), m).hconcat(IntMatrix::scalar(m, l));
    case LemmaCase::DecomposeSingle:
      return eval((1 - x(1)) * s.f->substitute_power(p), m);
    case LemmaCase::DecomposePair:
      return eval_row({(1 - x(1)) * s.f->substitute_power(p), s.g->substitute_power(p)}, m);
    case LemmaCase::AlternatingSum:
      return eval(alternating_sum(p), m);
    case LemmaCase::TypeI:
      return eval((1 - x(1)) * (1 + x((n + 1) / 2)), k);
    case LemmaCase::TypeII:
      return eval_row({(1 - x(1)) * (1 + x((n + 1) / 2)), 1 + x(k - (n + 1) / 2)}, 2 * k);
    case LemmaCase::TypeV1:
      return eval_row({1 + x(n - 1), 1 - x(k)}, 2 * k);
    case LemmaCase::TypeV2:
      return eval_row({alternating_sum(2 * n - 2), 1 + x(k - (n - 1))}, 2 * k);
    case LemmaCase::TypeV3:
      return eval_row({1 + x(n - 1), (1 - x(k)) * alternating_sum(n - 1)}, 2 * k);
    case LemmaCase::TypeVII:
      return eval((1 - x(1)) * geometric_sum_1_3_6_9(), k);
    case LemmaCase::TypeVIII1:
      return eval_row({(1 - x(1)) * geometric_sum_1_3_6_9(), 1 + x(k - 6)}, 2 * k);
    case LemmaCase::TypeVIII2a:
      return eval_row({1 + x(6), 1 + x(k - 6)}, 2 * k);
    case LemmaCase::TypeVIII2b:
      return eval_row({1 + x(2), 1 + x(k - 6)}, 2 * k);
    case LemmaCase::TypeX:
      return eval((1 - x(1) + x(2)) * (1 + x(5)), k);
  }
  throw InternalError("unknown lemma case");
}

AbelianGroup lemma_coker(LemmaCase c, const LemmaParams& s) {
  if (!lemma_hypotheses_hold(c, s)) throw ParameterError(std::string("hypotheses of ") + lemma_case_name(c) + " fail");
  const long m = s.m, p = s.p, l = s.l, n = s.n, k = s.k;
  const long d = gcd0(p, m);
  const long q = m / d;
  switch (c) {
    case LemmaCase::PowerSingle:
      return power(coker_of(eval(need(s.f, "f"), q)), d);
    case LemmaCase::PowerPair:
      return power(coker_of(eval_row({*s.f, *s.g}, q)), d);
    case LemmaCase::OneMinusPower:
      return AbelianGroup::free(d);
    case LemmaCase::ScaledOneMinusPower:
      return group(d, m - d, l);
    case LemmaCase::OneMinusPowerWithScalar:
      return group(0, d, l);
    case LemmaCase::OnePlusPower:
      return q % 2 == 1 ? group(0, d, 2) : AbelianGroup::free(d);
    case LemmaCase::SignFlipSingle:
      return coker_of(eval(s.f->negate_variable(), m));
    case LemmaCase::SignFlipPair:
      return coker_of(eval_row({s.f->negate_variable(), s.g->negate_variable()}, m));
    case LemmaCase::AbsorbSingle:
      return coker_of(eval(*s.f, d));
    case LemmaCase::AbsorbPair:
      return coker_of(eval_row({*s.f, *s.g}, d));
    case LemmaCase::ScaledAllOnes:
      return group(m - 1, 1, l);
    case LemmaCase::AllOnesWithScalar:
      return group(0, m - 1, l);
    case LemmaCase::DecomposeSingle:
      return power(coker_of(eval(*s.f, q)), d - 1) + coker_of(eval((1 - x(1)) * *s.f, q));
    case LemmaCase::DecomposePair:
      return power(coker_of(eval_row({*s.f, *s.g}, q)), d - 1) +
             coker_of(eval_row({(1 - x(1)) * *s.f, *s.g}, q));
    case LemmaCase::AlternatingSum: {
      const long dd = gcd0(p, m), r = p / dd;
      if (m % 2 == 0) return AbelianGroup(dd - 1, {r});
      if (p % 2 == 0) return AbelianGroup::free(dd);
      return group(0, dd - 1, 2);
    }
    case LemmaCase::TypeI: {
      const long dd = gcd0(n + 1, k), r = (n + 1) / dd;
      if (r % 2 == 0) return group(1, dd - 1, 2);
      return AbelianGroup::free((dd + 2) / 2);
    }
    case LemmaCase::TypeII: {
      const long dd = gcd0(n + 1, k), r = (n + 1) / dd;
      if (r % 4 == 0) return group(0, dd - 1, 2) + AbelianGroup(0, {4});
      if (r % 4 == 2) return group(0, dd + 1, 2);
      return AbelianGroup::free(dd / 2);
    }
    case LemmaCase::TypeV1: {
      const long dd = gcd0(2 * n - 2, k), r = (2 * n - 2) / dd;
      if (k % 2 == 0 && r % 2 == 1) return AbelianGroup::free(dd / 2);
      return group(0, dd, 2);
    }
    case LemmaCase::TypeV2: {
      const long dd = gcd0(2 * n - 2, k), r = (2 * n - 2) / dd;
      if (k % 2 == 1) return AbelianGroup(dd - 1, {r});
      if (r % 4 == 0) return AbelianGroup::free(dd);
      if (r % 4 == 2) return group(0, 2 * dd - 1, 2);
      return AbelianGroup::free(dd / 2);
    }
    case LemmaCase::TypeV3: {
      const long dd = gcd0(2 * n - 2, k), r = (2 * n - 2) / dd;
      if (k % 2 == 0) return AbelianGroup::free(dd / 2);
      return AbelianGroup(dd - 1, {r});
    }
    case LemmaCase::TypeVII: {
      const long dd = gcd0(12, k);
      if (dd == 1 || dd == 3) return group(1, dd - 1, 4);
      if (dd == 2 || dd == 6) return group((dd + 2) / 2, (dd - 2) / 2, 2);
      return AbelianGroup::free((3 * dd + 4) / 4);
    }
    case LemmaCase::TypeVIII1: {
      const long dd = gcd0(12, k);
      if (dd == 1 || dd == 3) return AbelianGroup::free(dd);
      if (dd == 2 || dd == 6) return group(0, (3 * dd + 2) / 2, 2);
      return AbelianGroup::free(dd / 2);
    }
    case LemmaCase::TypeVIII2a: {
      const long dd = gcd0(12, k);
      if (dd == 4 || dd == 12) return AbelianGroup::free(dd / 2);
      return group(0, dd, 2);
    }
    case LemmaCase::TypeVIII2b: {
      const long dd = gcd0(12, k);
      if (dd == 1 || dd == 3) return group(0, 1, 2);
      if (dd == 2 || dd == 6) return group(0, 2, 2);
      return AbelianGroup::free(2);
    }
    case LemmaCase::TypeX: {
      const long dd = gcd0(30, k);
      if (dd == 1 || dd == 3 || dd == 5) return group(0, dd, 2);
      if (dd == 15) return group(0, 7, 2);
      if (dd == 30) return AbelianGroup::free(7);
      return AbelianGroup::free(dd / 2);
    }
  }
  throw InternalError("unknown lemma case");
}

std::vector<ZPoly> polynomial_battery() {
  std::vector<ZPoly> out{1 - x(1), 1 + x(1)};
  for (long j = 2; j <= 6; ++j) {
    out.push_back(1 + x(j));
    out.push_back(1 - x(j));
  }
  for (long j = 1; j <= 6; ++j) {
    out.push_back(alternating_sum(j));
    out.push_back(alternating_sum(j).negate_variable());
  }
  for (int n = 4; n <= 8; ++n) {
    StandardBlocks b = standard_blocks(n);
    out.push_back(b.f);
    out.push_back(b.g);
  }
  return out;
}

std::vector<ZPoly> companion_battery() { return {1 + x(1), 1 - x(2), 2, 1 + x(3), alternating_sum(3)}; }

std::vector<LemmaParams> lemma_sweep(LemmaCase c, long bound) {
  std::vector<LemmaParams> out;
  const std::vector<ZPoly> fs = polynomial_battery();
  const std::vector<ZPoly> gs = companion_battery();
  auto push = [&](LemmaParams s) {
    if (lemma_hypotheses_hold(c, s)) out.push_back(std::move(s));
  };
  auto with_polys = [&](LemmaParams s, bool pair) {
    for (const ZPoly& f : fs) {
      s.f = f;
      if (!pair) {
        push(s);
        continue;
      }
      for (const ZPoly& g : gs) {
        s.g = g;
        push(s);
      }
    }
  };
  const bool pair = c == LemmaCase::PowerPair || c == LemmaCase::SignFlipPair || c == LemmaCase::AbsorbPair ||
                    c == LemmaCase::DecomposePair;
  const bool polys = pair || c == LemmaCase::PowerSingle || c == LemmaCase::SignFlipSingle ||
                     c == LemmaCase::AbsorbSingle || c == LemmaCase::DecomposeSingle;
  const bool scalar = c == LemmaCase::ScaledOneMinusPower || c == LemmaCase::OneMinusPowerWithScalar ||
                      c == LemmaCase::ScaledAllOnes || c == LemmaCase::AllOnesWithScalar;
  const bool uses_p = c != LemmaCase::SignFlipSingle && c != LemmaCase::SignFlipPair &&
                      c != LemmaCase::ScaledAllOnes && c != LemmaCase::AllOnesWithScalar;

  switch (c) {
    case LemmaCase::TypeI:
    case LemmaCase::TypeII:
    case LemmaCase::TypeV1:
    case LemmaCase::TypeV2:
    case LemmaCase::TypeV3:
      for (long n = 1; n <= bound; ++n)
        for (long k = 1; k <= bound; ++k) push({.n = n, .k = k});
      return out;
    case LemmaCase::TypeVII:
    case LemmaCase::TypeVIII1:
    case LemmaCase::TypeVIII2a:
    case LemmaCase::TypeVIII2b:
    case LemmaCase::TypeX:
      // Every residue of gcd(k, 12) or gcd(k, 30) needs k up to 30.
      for (long k = 1; k <= std::max(bound, c == LemmaCase::TypeX ? 30L : 12L); ++k) push({.k = k});
      return out;
    default:
      break;
  }
  for (long m = 1; m <= bound; ++m) {
    const long p_lo = uses_p ? (c == LemmaCase::AlternatingSum ? 1 : -2) : 0;
    const long p_hi = uses_p ? bound : 0;
    for (long p = p_lo; p <= p_hi; ++p) {
      if (scalar) {
        for (long l = 1; l <= bound; ++l) push({.m = m, .p = p, .l = l});
      } else if (polys) {
        with_polys({.m = m, .p = p}, pair);
      } else {
        push({.m = m, .p = p});
      }
    }
  }
  return out;
}

}  // namespace meshk0
