#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/abelian_group.hpp"
#include "core/int_matrix.hpp"
#include "core/zpoly.hpp"

namespace meshk0 {

// Cokernel identities for circulant polynomial matrices. Each case pairs an
// explicit left-hand matrix with a predicted group.
enum class LemmaCase {
  PowerSingle,              // f(X_m^p) ~ f(X_q)^d
  PowerPair,                // [f(X_m^p) | g(X_m^p)] ~ [f(X_q) | g(X_q)]^d
  OneMinusPower,            // 1 - X_m^p
  ScaledOneMinusPower,      // l (1 - X_m^p)
  OneMinusPowerWithScalar,  // [1 - X_m^p | l]
  OnePlusPower,             // 1 + X_m^p
  SignFlipSingle,           // f(X_m) ~ f(-X_m), m even
  SignFlipPair,
  AbsorbSingle,             // [f(X_m) | 1 - X_m^p] ~ f(X_d)
  AbsorbPair,               // [f(X_m) | g(X_m) | 1 - X_m^p] ~ [f(X_d) | g(X_d)]
  ScaledAllOnes,            // l s_m(-X_m)
  AllOnesWithScalar,        // [s_m(-X_m) | l]
  DecomposeSingle,          // (1 - X_m) f(X_m^p), gcd(p, m) >= 2
  DecomposePair,            // [(1 - X_m) f(X_m^p) | g(X_m^p)], gcd(p, m) >= 2
  AlternatingSum,           // s_p(X_m)
  TypeI,
  TypeII,
  TypeV1,
  TypeV2,
  TypeV3,
  TypeVII,
  TypeVIII1,
  TypeVIII2a,
  TypeVIII2b,
  TypeX,
};

inline constexpr LemmaCase kAllLemmaCases[] = {
    LemmaCase::PowerSingle,     LemmaCase::PowerPair,    LemmaCase::OneMinusPower,
    LemmaCase::ScaledOneMinusPower, LemmaCase::OneMinusPowerWithScalar, LemmaCase::OnePlusPower,
    LemmaCase::SignFlipSingle,  LemmaCase::SignFlipPair, LemmaCase::AbsorbSingle,
    LemmaCase::AbsorbPair,      LemmaCase::ScaledAllOnes, LemmaCase::AllOnesWithScalar,
    LemmaCase::DecomposeSingle, LemmaCase::DecomposePair, LemmaCase::AlternatingSum,
    LemmaCase::TypeI,           LemmaCase::TypeII,       LemmaCase::TypeV1,
    LemmaCase::TypeV2,          LemmaCase::TypeV3,       LemmaCase::TypeVII,
    LemmaCase::TypeVIII1,       LemmaCase::TypeVIII2a,   LemmaCase::TypeVIII2b,
    LemmaCase::TypeX,
};

const char* lemma_case_name(LemmaCase c);
std::optional<LemmaCase> lemma_case_from_name(const std::string& name);

struct LemmaParams {
  long m = 1;
  long p = 0;
  long l = 1;
  long n = 1;
  long k = 1;
  std::optional<ZPoly> f;
  std::optional<ZPoly> g;

  std::string describe() const;
};

bool lemma_hypotheses_hold(LemmaCase c, const LemmaParams& params);

// Left-hand side as an explicit integer matrix.
IntMatrix lemma_matrix(LemmaCase c, const LemmaParams& params);

// Predicted cokernel. Throws ParameterError when the hypotheses fail.
AbelianGroup lemma_coker(LemmaCase c, const LemmaParams& params);

// Polynomials substituted for f: 1 -+ x, 1 -+ x^j, s_j(x), s_j(-x), f_n, g_n.
std::vector<ZPoly> polynomial_battery();
// Shorter list used for the second polynomial in two-block cases.
std::vector<ZPoly> companion_battery();

// Every hypothesis-satisfying parameter set with m, p, l, n, k <= bound.
std::vector<LemmaParams> lemma_sweep(LemmaCase c, long bound);

}  // namespace meshk0
