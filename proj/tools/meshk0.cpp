#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "meshk0/meshk0.h"

using Json = nlohmann::json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;

// Carries a C API failure to main.
struct ApiFailure {
  meshk0_status status;
  std::string message;
};

void check(meshk0_status status) {
  if (status != MESHK0_OK) throw ApiFailure{status, meshk0_last_error()};
}

std::string take(char* text) {
  std::string out = text ? text : "";
  meshk0_string_free(text);
  return out;
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Triple = std::unique_ptr<meshk0_triple, Deleter<meshk0_triple, meshk0_triple_free>>;
using Group = std::unique_ptr<meshk0_group, Deleter<meshk0_group, meshk0_group_free>>;
using Matrix = std::unique_ptr<meshk0_matrix, Deleter<meshk0_matrix, meshk0_matrix_free>>;
using Profile = std::unique_ptr<meshk0_profile, Deleter<meshk0_profile, meshk0_profile_free>>;

Triple parse_triple(const std::string& text) {
  meshk0_triple* t = nullptr;
  check(meshk0_triple_parse(text.c_str(), &t));
  return Triple(t);
}

Profile compute_profile(const meshk0_triple* t, int characteristic) {
  meshk0_profile* p = nullptr;
  check(meshk0_profile_compute(t, characteristic, &p));
  return Profile(p);
}

std::string triple_name(const meshk0_triple* t) {
  char* s = nullptr;
  check(meshk0_triple_string(t, &s));
  return take(s);
}

// Runs a call that may write a report and still signal a mismatch.
int with_report(meshk0_status status, char* report, const std::function<void(const Json&)>& print) {
  std::string text = take(report);
  if (status != MESHK0_OK && status != MESHK0_ERR_MISMATCH) check(status);
  print(Json::parse(text));
  return status == MESHK0_ERR_MISMATCH ? kExitMismatch : 0;
}

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

int run_k0(const Options& o, const std::string& triple_text, const std::string& route_arg) {
  Triple t = parse_triple(triple_text);
  std::vector<meshk0_route> routes;
  if (route_arg == "all") {
    routes = {MESHK0_ROUTE_CLOSED, MESHK0_ROUTE_MATRIX, MESHK0_ROUTE_REDUCED, MESHK0_ROUTE_CARTAN};
  } else {
    for (auto r : {MESHK0_ROUTE_CLOSED, MESHK0_ROUTE_MATRIX, MESHK0_ROUTE_REDUCED, MESHK0_ROUTE_CARTAN})
      if (route_arg == meshk0_route_name(r)) routes.push_back(r);
  }

  Json groups = Json::object();
  std::vector<std::pair<std::string, std::string>> lines;
  std::vector<Group> results;
  bool agree = true;
  for (auto route : routes) {
    meshk0_group* g = nullptr;
    check(meshk0_k0(t.get(), route, &g));
    results.emplace_back(g);
    if (results.size() > 1) {
      int same = 0;
      check(meshk0_group_equal(results.front().get(), g, &same));
      agree &= same != 0;
    }
    char* s = nullptr;
    check(meshk0_group_json(g, &s));
    groups[meshk0_route_name(route)] = Json::parse(take(s));
    check(meshk0_group_text(g, &s));
    lines.emplace_back(meshk0_route_name(route), take(s));
  }

  char* described = nullptr;
  check(meshk0_triple_describe(t.get(), &described));
  const bool wrap = Json::parse(take(described))["negative_exponent_wrap"].get<bool>();

  if (o.json()) {
    std::cout << Json{{"triple", triple_name(t.get())}, {"groups", groups}, {"agree", agree},
                      {"negative_exponent_wrap", wrap}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << triple_name(t.get()) << "\n";
    for (const auto& [route, text] : lines) std::printf("  %-8s %s\n", route.c_str(), text.c_str());
    std::cout << "agree: " << (agree ? "true" : "false") << "\n";
    if (wrap) std::cout << "note: exponent k-6 is negative and is read modulo l\n";
  }
  return 0;
}

int run_cartan(const Options& o, const std::string& triple_text) {
  Triple t = parse_triple(triple_text);
  meshk0_matrix* m = nullptr;
  check(meshk0_cartan_matrix(t.get(), &m));
  Matrix owned(m);
  char* s = nullptr;
  if (o.json()) {
    check(meshk0_matrix_json(m, &s));
    std::cout << take(s) << "\n";
  } else {
    check(meshk0_matrix_text(m, &s));
    std::cout << take(s);
  }
  return 0;
}

int run_invariants(const Options& o, const std::string& triple_text, int characteristic) {
  Triple t = parse_triple(triple_text);
  Profile p = compute_profile(t.get(), characteristic);
  char* s = nullptr;
  check(o.json() ? meshk0_profile_json(p.get(), &s) : meshk0_profile_text(p.get(), &s));
  std::cout << take(s) << (o.json() ? "\n" : "");
  return 0;
}

int run_classify_pair(const Options& o, const std::vector<std::string>& triples, int characteristic) {
  Triple t1 = parse_triple(triples[0]), t2 = parse_triple(triples[1]);
  Profile p1 = compute_profile(t1.get(), characteristic), p2 = compute_profile(t2.get(), characteristic);
  char* s = nullptr;
  check(meshk0_distinguish(p1.get(), p2.get(), &s));
  Json verdict = Json::parse(take(s));
  if (o.json()) {
    std::cout << verdict.dump(2) << "\n";
  } else {
    std::cout << triples[0] << " vs " << triples[1] << ": " << verdict["kind"].get<std::string>();
    if (!verdict["separator"].is_null()) std::cout << " (" << verdict["separator"].get<std::string>() << ")";
    std::cout << "\n";
  }
  return 0;
}

int run_classify_grid(const Options& o, const std::vector<int>& grid, int characteristic, unsigned jobs) {
  char* s = nullptr;
  meshk0_status status = meshk0_classify_grid(grid[0], grid[1], characteristic, jobs, &s);
  return with_report(status, s, [&](const Json& r) {
    if (o.json()) {
      std::cout << r.dump(2) << "\n";
      return;
    }
    std::cout << r["triples"] << " triples, char " << r["char"].get<std::string>() << "\n";
    for (const auto& [kind, n] : r["kinds"].items()) std::cout << "  " << kind << ": " << n << "\n";
    for (const auto& [sep, n] : r["separators"].items()) std::cout << "    by " << sep << ": " << n << "\n";
    for (const auto& f : r["failures"])
      std::cout << "  NOT SEPARATED " << f["first"].get<std::string>() << " vs " << f["second"].get<std::string>()
                << "\n";
  });
}

int run_table(const Options& o, const std::string& family, int nmax, int kmax) {
  char* s = nullptr;
  meshk0_status status = meshk0_table(family.c_str(), nmax, kmax, &s);
  return with_report(status, s, [&](const Json& r) {
    if (o.json()) {
      std::cout << r.dump(2) << "\n";
      return;
    }
    for (const auto& row : r["rows"]) {
      std::printf("%-14s k=%-2d d=%-2d r=%-2d %s%s\n", row["triple"].get<std::string>().c_str(),
                  row["k"].get<int>(), row["d"].get<int>(), row["r"].get<int>(),
                  row["closed_text"].get<std::string>().c_str(), row["agree"].get<bool>() ? "" : "  MISMATCH");
    }
  });
}

int run_verify(const Options& o, const std::vector<int>& grid, unsigned jobs, std::uint64_t seed,
               const std::vector<int>& criteria) {
  char* s = nullptr;
  meshk0_status status =
      meshk0_verify(grid[0], grid[1], jobs, seed, criteria.empty() ? nullptr : criteria.data(), criteria.size(), &s);
  return with_report(status, s, [&](const Json& r) {
    if (o.json()) {
      std::cout << r.dump(2) << "\n";
      return;
    }
    for (const auto& c : r["criteria"]) {
      std::printf("%s  %d. %s (%ld checks, %ld failures, %.1fs)\n", c["passed"].get<bool>() ? "PASS" : "FAIL",
                  c["id"].get<int>(), c["title"].get<std::string>().c_str(), c["checks"].get<long>(),
                  c["failures"].get<long>(), c["seconds"].get<double>());
      for (const auto& sample : c["samples"]) std::cout << "      " << sample.get<std::string>() << "\n";
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grothendieck groups of stable categories of mesh algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string triple_text, route = "all", family;
  std::vector<std::string> pair;
  std::vector<int> grid{8, 6}, criteria;
  int characteristic = 0, nmax = 8, kmax = 6;
  unsigned jobs = 0;
  std::uint64_t seed = 20240611;
  auto char_check = CLI::IsMember({0, 2});

  auto* k0 = app.add_subcommand("k0", "K0 of the stable category by one or all routes");
  k0->add_option("triple", triple_text, "Triple such as A5:l=4:t=2")->required();
  k0->add_option("--route", route)->check(CLI::IsMember({"all", "closed", "matrix", "reduced", "cartan"}));

  auto* cartan = app.add_subcommand("cartan", "Cartan matrix of the mesh algebra");
  cartan->add_option("triple", triple_text)->required();

  auto* invariants = app.add_subcommand("invariants", "Stable-equivalence invariants of one triple");
  invariants->add_option("triple", triple_text)->required();
  invariants->add_option("--char", characteristic)->check(char_check);

  auto* classify = app.add_subcommand("classify", "Decide whether triples are separated by invariants");
  classify->add_option("triples", pair)->expected(2);
  classify->add_option("--char", characteristic)->check(char_check);
  auto* classify_grid = classify->add_option("--grid", grid, "nmax kmax")->expected(2);
  classify->add_option("--jobs", jobs);

  auto* table = app.add_subcommand("table", "Closed-form groups for one type over a grid");
  table->add_option("--family", family, "Type I..X")->required();
  table->add_option("--nmax", nmax);
  table->add_option("--kmax", kmax);

  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--grid", grid, "nmax kmax")->expected(2);
  verify->add_option("--jobs", jobs);
  verify->add_option("--seed", seed);
  verify->add_option("--criterion", criteria, "Run only these criteria")->check(CLI::Range(1, 9));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (k0->parsed()) return run_k0(o, triple_text, route);
    if (cartan->parsed()) return run_cartan(o, triple_text);
    if (invariants->parsed()) return run_invariants(o, triple_text, characteristic);
    if (classify->parsed()) {
      if (classify_grid->count() > 0) return run_classify_grid(o, grid, characteristic, jobs);
      if (pair.size() != 2) {
        std::cerr << "classify needs two triples or --grid nmax kmax\n";
        return kExitUsage;
      }
      return run_classify_pair(o, pair, characteristic);
    }
    if (table->parsed()) return run_table(o, family, nmax, kmax);
    if (verify->parsed()) return run_verify(o, grid, jobs, seed, criteria);
  } catch (const ApiFailure& e) {
    std::cerr << "error: " << meshk0_status_name(e.status) << ": " << e.message << "\n";
    switch (e.status) {
      case MESHK0_ERR_PARSE:
      case MESHK0_ERR_PARAMETER:
      case MESHK0_ERR_UNDEFINED:
      case MESHK0_ERR_NULL:
        return kExitUsage;
      case MESHK0_ERR_MISMATCH:
        return kExitMismatch;
      default:
        return kExitFailure;
    }
  }
  return 0;
}
