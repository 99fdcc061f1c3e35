#include "core/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "core/circulant.hpp"
#include "core/classifier.hpp"
#include "core/errors.hpp"
#include "core/exact_rank.hpp"
#include "core/grothendieck.hpp"
#include "core/lemma_catalog.hpp"
#include "core/mesh_oracle.hpp"
#include "core/path_elimination.hpp"
#include "core/quiver.hpp"
#include "core/smith.hpp"

namespace meshk0 {

namespace {

constexpr std::size_t kMaxSamples = 8;

// Thread-safe tally of checks and failures for one criterion.
class Tally {
 public:
  void pass() { ++checks_; }

  void fail(const std::string& what) {
    ++checks_;
    ++failures_;
    std::lock_guard lock(mutex_);
    if (samples_.size() < kMaxSamples) samples_.push_back(what);
  }

  void expect(bool ok, const std::function<std::string()>& what) { ok ? pass() : fail(what()); }

  void fill(CriterionResult& r) const {
    r.checks = checks_;
    r.failures = failures_;
    r.samples = samples_;
    r.passed = failures_ == 0 && checks_ > 0;
  }

 private:
  std::atomic<long> checks_{0};
  std::atomic<long> failures_{0};
  std::mutex mutex_;
  std::vector<std::string> samples_;
};

void guarded(Tally& tally, const std::string& label, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    tally.fail(label + ": " + e.what());
  }
}

std::string mismatch(const MeshTriple& t, const AbelianGroup& got, const AbelianGroup& want) {
  return t.to_string() + ": " + got.to_text() + " != " + want.to_text();
}

void route_against_closed(Tally& tally, const std::vector<MeshTriple>& grid, unsigned jobs, Route route) {
  parallel_for(grid.size(), jobs, [&](std::size_t i) {
    const MeshTriple& t = grid[i];
    guarded(tally, t.to_string(), [&] {
      AbelianGroup got = k0(t, route);
      AbelianGroup want = k0_closed_form(t);
      tally.expect(got == want, [&] { return mismatch(t, got, want); });
    });
  });
}

void check_generators(Tally& tally, const VerifyOptions& o) {
  route_against_closed(tally, triple_grid(o.nmax, o.kmax), o.jobs, Route::GeneratorMatrix);
}

void check_reduced(Tally& tally, const VerifyOptions& o) {
  route_against_closed(tally, triple_grid(o.nmax, o.kmax), o.jobs, Route::ReducedPresentation);
}

void check_cartan(Tally& tally, const VerifyOptions& o) {
  route_against_closed(tally, oracle_grid(), o.jobs, Route::Cartan);
  const auto grid = bruteforce_grid();
  const Field fields[] = {Field::Rationals, Field::Mod2, Field::Mod3};
  parallel_for(grid.size() * 3, o.jobs, [&](std::size_t job) {
    const MeshTriple& t = grid[job / 3];
    const Field field = fields[job % 3];
    guarded(tally, t.to_string(), [&] {
      HomTable knit = hom_dims_knitting(t);
      HomTable brute = hom_dims_bruteforce(t, 2 * t.c(), field);
      tally.expect(knit == brute, [&] {
        return t.to_string() + ": knitting and path elimination disagree (field " +
               std::to_string(static_cast<int>(field)) + ")";
      });
    });
  });
}

void check_lemmas(Tally& tally, const VerifyOptions& o) {
  std::vector<std::pair<LemmaCase, LemmaParams>> work;
  for (LemmaCase c : kAllLemmaCases)
    for (auto& p : lemma_sweep(c, 12)) work.emplace_back(c, std::move(p));
  parallel_for(work.size(), o.jobs, [&](std::size_t i) {
    const auto& [c, p] = work[i];
    const std::string label = std::string(lemma_case_name(c)) + " " + p.describe();
    guarded(tally, label, [&] {
      AbelianGroup got = cokernel(lemma_matrix(c, p));
      AbelianGroup want = lemma_coker(c, p);
      tally.expect(got == want, [&] { return label + ": " + got.to_text() + " != " + want.to_text(); });
    });
  });
}

void check_automorphisms(Tally& tally, const VerifyOptions& o) {
  const auto grid = triple_grid(o.nmax, o.kmax);
  parallel_for(grid.size(), o.jobs, [&](std::size_t i) {
    const MeshTriple& t = grid[i];
    const DynkinDiagram& delta = t.delta();
    const int n = delta.n;
    guarded(tally, t.to_string(), [&] {
      TranslationQuiver quiver(t);
      auto id = automorphism(quiver, AutomorphismName::Tau).pow(0);
      auto tau = automorphism(quiver, AutomorphismName::Tau);
      auto label = [&](const char* what) { return [&t, what] { return t.to_string() + ": " + what + " fails"; }; };

      // An automorphism that does not descend to this quotient is checked on the cover only.
      auto on_quiver = [&](AutomorphismName name) -> std::optional<QuiverAutomorphism> {
        try {
          return automorphism(quiver, name);
        } catch (const ParameterError&) {
          return std::nullopt;
        }
      };

      bool has_psi = (delta.family == Family::A && n % 2 == 1) || delta.family == Family::D ||
                     (delta.family == Family::E && n == 6);
      if (has_psi) {
        tally.expect(psi_map(delta).pow(2) == CoverMap::identity(n), label("psi^2 = id on the cover"));
        if (auto psi = on_quiver(AutomorphismName::Psi))
          tally.expect(psi->pow(2).same_vertex_map(id), label("psi^2 = id"));
      }
      if (delta.family == Family::A && n % 2 == 0) {
        tally.expect(phi_map(delta).pow(2) == CoverMap::tau_power(n, -1), label("phi^2 = tau^-1 on the cover"));
        if (auto phi = on_quiver(AutomorphismName::Phi))
          tally.expect(phi->pow(2).same_vertex_map(tau.inverse()), label("phi^2 = tau^-1"));
      }
      if (delta.family == Family::D && n == 4) {
        tally.expect(chi_map(delta).pow(3) == CoverMap::identity(n), label("chi^3 = id on the cover"));
        if (auto chi = on_quiver(AutomorphismName::Chi))
          tally.expect(chi->pow(3).same_vertex_map(id), label("chi^3 = id"));
      }
      CoverMap pt = nakayama_map(delta).after(CoverMap::tau_power(n, -1));
      tally.expect(pt.pow(2) == CoverMap::tau_power(n, -t.c()), label("(pi tau^-1)^2 = tau^-c on the cover"));
      auto pi = automorphism(quiver, AutomorphismName::Pi);
      tally.expect(pi.after(tau.inverse()).pow(2).same_vertex_map(tau.pow(-t.c())), label("(pi tau^-1)^2 = tau^-c"));
    });
  });
}

void check_shift_order(Tally& tally, const VerifyOptions& o) {
  std::vector<MeshTriple> grid;
  for (const auto& t : triple_grid(o.nmax, o.kmax))
    if (has_shift_invariants(t)) grid.push_back(t);
  parallel_for(grid.size() * 2, o.jobs, [&](std::size_t job) {
    const MeshTriple& t = grid[job / 2];
    const Characteristic ch = job % 2 ? Characteristic::Two : Characteristic::Zero;
    guarded(tally, t.to_string(), [&] {
      long got = invariant_e(t, ch);
      long want = tabulated_e(t, ch);
      tally.expect(got == want, [&] {
        return t.to_string() + " " + subtype(t) + " char " + (ch == Characteristic::Two ? "2" : "0") +
               ": quiver gives " + std::to_string(got) + ", table gives " + std::to_string(want);
      });
    });
  });
}

void check_classification(Tally& tally, const VerifyOptions& o) {
  const auto grid = triple_grid(o.nmax, o.kmax);
  for (Characteristic ch : {Characteristic::Zero, Characteristic::Two}) {
    std::vector<std::optional<InvariantProfile>> profiles(grid.size());
    parallel_for(grid.size(), o.jobs, [&](std::size_t i) {
      guarded(tally, grid[i].to_string(), [&] { profiles[i] = invariant_profile(grid[i], ch); });
    });
    const std::size_t count = grid.size();
    parallel_for(count, o.jobs, [&](std::size_t i) {
      if (!profiles[i]) return;
      for (std::size_t j = 0; j < count; ++j) {
        if (!profiles[j]) continue;
        Verdict v = distinguish(*profiles[i], *profiles[j]);
        Verdict::Kind want = grid[i].is_a1() && grid[j].is_a1() ? Verdict::Kind::BothA1
                             : i == j                            ? Verdict::Kind::SameQuiver
                                                                 : Verdict::Kind::DistinguishedBy;
        tally.expect(v.kind == want, [&] {
          return grid[i].to_string() + " vs " + grid[j].to_string() + ": " + verdict_kind_name(v.kind);
        });
      }
    });
  }
}

IntMatrix random_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim(1, 30);
  std::uniform_int_distribution<int> style(0, 3);
  std::uniform_int_distribution<long> big(-1000000, 1000000);
  std::uniform_int_distribution<long> small(-3, 3);
  const std::size_t rows = dim(rng), cols = dim(rng);
  IntMatrix m(rows, cols);
  const int s = style(rng);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = s == 0 ? big(rng) : small(rng);
  if (s == 2 && rows > 1) {
    // Rank-deficient: repeat combinations of earlier rows.
    for (std::size_t r = rows / 2; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = m(r - rows / 2, c) * small(rng) + m(0, c);
  }
  if (s == 3) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) *= 1 + (r + c) % 4;
  }
  return m;
}

std::string snf_defect(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m, true);
  if (*s.u * m * *s.v != s.d) return "U M V != D";
  Integer du = determinant(*s.u), dv = determinant(*s.v);
  if (abs(du) != 1 || abs(dv) != 1) return "transform not unimodular";
  for (std::size_t r = 0; r < s.d.rows(); ++r)
    for (std::size_t c = 0; c < s.d.cols(); ++c)
      if (r != c && s.d(r, c) != 0) return "D not diagonal";
  const std::size_t diag = std::min(s.d.rows(), s.d.cols());
  for (std::size_t i = 0; i < diag; ++i) {
    if (s.d(i, i) < 0) return "negative invariant factor";
    if ((i < s.rank) != (s.d(i, i) != 0)) return "rank does not match nonzero diagonal";
    if (i + 1 < s.rank && s.d(i + 1, i + 1) % s.d(i, i) != 0) return "divisibility chain broken";
  }
  if (s.rank != rational_rank(m)) return "rank differs from rational elimination";
  return "";
}

void check_smith(Tally& tally, const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::vector<IntMatrix> samples;
  for (int i = 0; i < o.snf_samples; ++i) samples.push_back(random_matrix(rng));
  parallel_for(samples.size(), o.jobs, [&](std::size_t i) {
    const std::string label = "sample " + std::to_string(i) + " (seed " + std::to_string(o.seed) + ")";
    guarded(tally, label, [&] {
      std::string defect = snf_defect(samples[i]);
      tally.expect(defect.empty(), [&] { return label + ": " + defect; });
    });
  });
}

void check_full_period(Tally& tally, const VerifyOptions& o) {
  std::vector<MeshTriple> grid;
  for (const auto& t : triple_grid(o.nmax, 1)) {
    if (t.t() != 1) continue;
    grid.push_back(MeshTriple::make(t.family(), t.n(), t.c(), 1));
  }
  parallel_for(grid.size(), o.jobs, [&](std::size_t i) {
    const MeshTriple& t = grid[i];
    guarded(tally, t.to_string(), [&] {
      const AbelianGroup want = AbelianGroup::free(static_cast<long>(t.n()) * (t.c() - 2) / 2);
      for (Route route : {Route::ClosedForm, Route::GeneratorMatrix}) {
        AbelianGroup got = k0(t, route);
        tally.expect(got == want, [&] { return mismatch(t, got, want) + " (" + route_name(route) + ")"; });
      }
    });
  });
}

using Runner = void (*)(Tally&, const VerifyOptions&);

constexpr Runner kRunners[kCriterionCount] = {
    check_generators, check_reduced,  check_cartan,         check_lemmas,     check_automorphisms,
    check_shift_order, check_classification, check_smith, check_full_period,
};

constexpr const char* kTitles[kCriterionCount] = {
    "generator matrix matches closed form",
    "reduced presentations match closed form",
    "Cartan oracle and path elimination",
    "circulant lemma catalog",
    "automorphism identities",
    "shift order matches subtype table",
    "classification separates all triples",
    "Smith normal form properties",
    "full-period groups are free",
};

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.passed; });
}

const char* criterion_title(int id) {
  if (id < 1 || id > kCriterionCount) throw ParameterError("no criterion " + std::to_string(id));
  return kTitles[id - 1];
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

std::vector<MeshTriple> oracle_grid() {
  std::vector<MeshTriple> out;
  for (const auto& t : triple_grid(6, 3)) {
    bool keep = (t.family() == Family::A && t.n() <= 5) || (t.family() == Family::D && t.n() <= 5) ||
                (t.family() == Family::E && t.n() == 6 && t.k() == 1);
    if (keep) out.push_back(t);
  }
  return out;
}

std::vector<MeshTriple> bruteforce_grid() {
  std::vector<MeshTriple> out;
  for (const auto& t : triple_grid(4, 2)) {
    bool keep = (t.family() == Family::A && t.n() >= 2) || (t.family() == Family::D && t.n() == 4);
    if (keep) out.push_back(t);
  }
  return out;
}

CriterionResult run_criterion(int id, const VerifyOptions& options) {
  CriterionResult result{.id = id, .title = criterion_title(id)};
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  guarded(tally, "criterion " + std::to_string(id), [&] { kRunners[id - 1](tally, options); });
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  tally.fill(result);
  return result;
}

VerificationReport run_verification(const VerifyOptions& options) {
  VerificationReport report;
  for (int id = 1; id <= kCriterionCount; ++id)
    if (options.only.empty() || options.only.count(id)) report.criteria.push_back(run_criterion(id, options));
  return report;
}

}  // namespace meshk0
