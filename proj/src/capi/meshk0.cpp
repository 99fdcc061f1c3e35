#include "meshk0/meshk0.h"

#include <cstring>
#include <map>
#include <string>

#include "core/circulant.hpp"
#include "core/classifier.hpp"
#include "core/errors.hpp"
#include "core/grothendieck.hpp"
#include "core/mesh_oracle.hpp"
#include "core/quiver.hpp"
#include "core/serialization.hpp"
#include "core/smith.hpp"
#include "core/verification.hpp"

using namespace meshk0;

struct meshk0_triple {
  MeshTriple value;
};
struct meshk0_group {
  AbelianGroup value;
};
struct meshk0_matrix {
  IntMatrix value;
};
struct meshk0_profile {
  InvariantProfile value;
};

namespace {

thread_local std::string last_error;

meshk0_status fail(meshk0_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
meshk0_status guard(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const ParseError& e) {
    return fail(MESHK0_ERR_PARSE, e.what());
  } catch (const ParameterError& e) {
    return fail(MESHK0_ERR_PARAMETER, e.what());
  } catch (const UndefinedInvariantError& e) {
    return fail(MESHK0_ERR_UNDEFINED, e.what());
  } catch (const SizeError& e) {
    return fail(MESHK0_ERR_SIZE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MESHK0_ERR_SIZE, "out of memory");
  } catch (const Json::exception& e) {
    return fail(MESHK0_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(MESHK0_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

meshk0_status emit(char** out, const std::string& s) {
  *out = copy_string(s);
  return MESHK0_OK;
}

template <class... P>
bool any_null(const P*... p) {
  return ((p == nullptr) || ...);
}

meshk0_status null_argument() { return fail(MESHK0_ERR_NULL, "null argument"); }

Characteristic characteristic_of(int value) {
  if (value == 0) return Characteristic::Zero;
  if (value == 2) return Characteristic::Two;
  throw ParameterError("characteristic must be 0 or 2");
}

Route route_of(meshk0_route route) {
  switch (route) {
    case MESHK0_ROUTE_CLOSED:
      return Route::ClosedForm;
    case MESHK0_ROUTE_MATRIX:
      return Route::GeneratorMatrix;
    case MESHK0_ROUTE_REDUCED:
      return Route::ReducedPresentation;
    case MESHK0_ROUTE_CARTAN:
      return Route::Cartan;
  }
  throw ParameterError("unknown route");
}

Json report_to_json(const VerificationReport& report) {
  Json criteria = Json::array();
  for (const auto& c : report.criteria) {
    criteria.push_back({{"id", c.id},
                        {"title", c.title},
                        {"passed", c.passed},
                        {"checks", c.checks},
                        {"failures", c.failures},
                        {"samples", c.samples},
                        {"seconds", c.seconds}});
  }
  return {{"passed", report.all_passed()}, {"criteria", criteria}};
}

}  // namespace

extern "C" {

const char* meshk0_last_error(void) { return last_error.c_str(); }

const char* meshk0_status_name(meshk0_status status) {
  switch (status) {
    case MESHK0_OK:
      return "ok";
    case MESHK0_ERR_PARSE:
      return "parse error";
    case MESHK0_ERR_PARAMETER:
      return "invalid parameter";
    case MESHK0_ERR_UNDEFINED:
      return "undefined invariant";
    case MESHK0_ERR_SIZE:
      return "size limit exceeded";
    case MESHK0_ERR_MISMATCH:
      return "mismatch";
    case MESHK0_ERR_INTERNAL:
      return "internal error";
    case MESHK0_ERR_NULL:
      return "null argument";
  }
  return "unknown status";
}

void meshk0_string_free(char* text) { delete[] text; }

meshk0_status meshk0_triple_parse(const char* text, meshk0_triple** out) {
  if (any_null(text, out)) return null_argument();
  return guard([&] {
    *out = new meshk0_triple{MeshTriple::parse(text)};
    return MESHK0_OK;
  });
}

meshk0_status meshk0_triple_make(char family, int n, int l, int t, meshk0_triple** out) {
  if (out == nullptr) return null_argument();
  return guard([&] {
    static const std::map<char, Family> kFamilies{{'A', Family::A}, {'D', Family::D}, {'E', Family::E}};
    auto it = kFamilies.find(family);
    if (it == kFamilies.end()) throw ParameterError(std::string("unknown Dynkin family '") + family + "'");
    *out = new meshk0_triple{MeshTriple::make(it->second, n, l, t)};
    return MESHK0_OK;
  });
}

void meshk0_triple_free(meshk0_triple* triple) { delete triple; }

meshk0_status meshk0_triple_string(const meshk0_triple* triple, char** out) {
  if (any_null(triple, out)) return null_argument();
  return guard([&] { return emit(out, triple->value.to_string()); });
}

meshk0_status meshk0_triple_describe(const meshk0_triple* triple, char** out_json) {
  if (any_null(triple, out_json)) return null_argument();
  return guard([&] {
    const MeshTriple& t = triple->value;
    Json j{{"triple", t.to_string()}, {"type", type_name(t.type())}, {"n", t.n()}, {"l", t.l()},
           {"t", t.t()},  {"k", t.k()},  {"c", t.c()}, {"d", t.d()}, {"r", t.r()}, {"q", t.q()},
           {"vertices", TranslationQuiver(t).vertex_count()},
           {"negative_exponent_wrap", uses_negative_exponent_wrap(t)}};
    return emit(out_json, j.dump());
  });
}

meshk0_status meshk0_triple_grid(int nmax, int kmax, char** out_json) {
  if (out_json == nullptr) return null_argument();
  return guard([&] {
    Json j = Json::array();
    for (const auto& t : triple_grid(nmax, kmax)) j.push_back(t.to_string());
    return emit(out_json, j.dump());
  });
}

meshk0_status meshk0_k0(const meshk0_triple* triple, meshk0_route route, meshk0_group** out) {
  if (any_null(triple, out)) return null_argument();
  return guard([&] {
    *out = new meshk0_group{k0(triple->value, route_of(route))};
    return MESHK0_OK;
  });
}

const char* meshk0_route_name(meshk0_route route) {
  try {
    return route_name(route_of(route));
  } catch (const std::exception&) {
    return "unknown";
  }
}

void meshk0_group_free(meshk0_group* group) { delete group; }

meshk0_status meshk0_group_equal(const meshk0_group* a, const meshk0_group* b, int* out) {
  if (any_null(a, b, out)) return null_argument();
  *out = a->value == b->value ? 1 : 0;
  return MESHK0_OK;
}

meshk0_status meshk0_group_rank(const meshk0_group* group, long* out) {
  if (any_null(group, out)) return null_argument();
  *out = group->value.free_rank();
  return MESHK0_OK;
}

meshk0_status meshk0_group_json(const meshk0_group* group, char** out) {
  if (any_null(group, out)) return null_argument();
  return guard([&] { return emit(out, group_to_json(group->value).dump()); });
}

meshk0_status meshk0_group_text(const meshk0_group* group, char** out) {
  if (any_null(group, out)) return null_argument();
  return guard([&] { return emit(out, group->value.to_text()); });
}

meshk0_status meshk0_group_from_json(const char* json, meshk0_group** out) {
  if (any_null(json, out)) return null_argument();
  return guard([&] {
    *out = new meshk0_group{group_from_json(Json::parse(json))};
    return MESHK0_OK;
  });
}

meshk0_status meshk0_cartan_matrix(const meshk0_triple* triple, meshk0_matrix** out) {
  if (any_null(triple, out)) return null_argument();
  return guard([&] {
    *out = new meshk0_matrix{cartan_matrix(triple->value)};
    return MESHK0_OK;
  });
}

meshk0_status meshk0_generator_matrix(const meshk0_triple* triple, meshk0_matrix** out) {
  if (any_null(triple, out)) return null_argument();
  return guard([&] {
    *out = new meshk0_matrix{assemble_generator_matrix(triple->value)};
    return MESHK0_OK;
  });
}

void meshk0_matrix_free(meshk0_matrix* matrix) { delete matrix; }

meshk0_status meshk0_matrix_shape(const meshk0_matrix* matrix, size_t* rows, size_t* cols) {
  if (any_null(matrix, rows, cols)) return null_argument();
  *rows = matrix->value.rows();
  *cols = matrix->value.cols();
  return MESHK0_OK;
}

meshk0_status meshk0_matrix_entry(const meshk0_matrix* matrix, size_t row, size_t col, char** out) {
  if (any_null(matrix, out)) return null_argument();
  if (row >= matrix->value.rows() || col >= matrix->value.cols())
    return fail(MESHK0_ERR_PARAMETER, "matrix index out of range");
  return guard([&] { return emit(out, matrix->value(row, col).get_str()); });
}

meshk0_status meshk0_matrix_json(const meshk0_matrix* matrix, char** out) {
  if (any_null(matrix, out)) return null_argument();
  return guard([&] { return emit(out, matrix_to_json(matrix->value).dump()); });
}

meshk0_status meshk0_matrix_text(const meshk0_matrix* matrix, char** out) {
  if (any_null(matrix, out)) return null_argument();
  return guard([&] { return emit(out, matrix->value.to_text()); });
}

meshk0_status meshk0_matrix_cokernel(const meshk0_matrix* matrix, meshk0_group** out) {
  if (any_null(matrix, out)) return null_argument();
  return guard([&] {
    *out = new meshk0_group{cokernel(matrix->value)};
    return MESHK0_OK;
  });
}

meshk0_status meshk0_profile_compute(const meshk0_triple* triple, int characteristic, meshk0_profile** out) {
  if (any_null(triple, out)) return null_argument();
  return guard([&] {
    *out = new meshk0_profile{invariant_profile(triple->value, characteristic_of(characteristic))};
    return MESHK0_OK;
  });
}

void meshk0_profile_free(meshk0_profile* profile) { delete profile; }

meshk0_status meshk0_profile_json(const meshk0_profile* profile, char** out) {
  if (any_null(profile, out)) return null_argument();
  return guard([&] { return emit(out, profile_to_json(profile->value).dump()); });
}

meshk0_status meshk0_profile_text(const meshk0_profile* profile, char** out) {
  if (any_null(profile, out)) return null_argument();
  return guard([&] { return emit(out, profile_to_text(profile->value)); });
}

meshk0_status meshk0_distinguish(const meshk0_profile* first, const meshk0_profile* second, char** out_json) {
  if (any_null(first, second, out_json)) return null_argument();
  return guard([&] {
    if (first->value.characteristic != second->value.characteristic)
      throw ParameterError("profiles were computed for different characteristics");
    Verdict v = distinguish(first->value, second->value);
    return emit(out_json, verdict_to_json(v, first->value, second->value).dump());
  });
}

meshk0_status meshk0_classify_grid(int nmax, int kmax, int characteristic, unsigned jobs, char** out_json) {
  if (out_json == nullptr) return null_argument();
  return guard([&] {
    const Characteristic ch = characteristic_of(characteristic);
    const auto grid = triple_grid(nmax, kmax);
    std::vector<InvariantProfile> profiles(grid.size());
    parallel_for(grid.size(), jobs, [&](std::size_t i) { profiles[i] = invariant_profile(grid[i], ch); });

    std::map<std::string, long> kinds, separators;
    Json failures = Json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t j = i + 1; j < grid.size(); ++j) {
        Verdict v = distinguish(profiles[i], profiles[j]);
        ++kinds[verdict_kind_name(v.kind)];
        if (v.kind == Verdict::Kind::DistinguishedBy) ++separators[v.separator];
        const bool expected = grid[i].is_a1() && grid[j].is_a1() ? v.kind == Verdict::Kind::BothA1
                                                                 : v.kind == Verdict::Kind::DistinguishedBy;
        if (!expected)
          failures.push_back({{"first", grid[i].to_string()}, {"second", grid[j].to_string()},
                              {"kind", verdict_kind_name(v.kind)}});
      }
    }
    Json j{{"char", characteristic_name(ch)}, {"triples", grid.size()}, {"kinds", kinds},
           {"separators", separators}, {"failures", failures}};
    emit(out_json, j.dump());
    if (!failures.empty()) return fail(MESHK0_ERR_MISMATCH, "some pairs of triples are not separated");
    return MESHK0_OK;
  });
}

meshk0_status meshk0_table(const char* type, int nmax, int kmax, char** out_json) {
  if (any_null(type, out_json)) return null_argument();
  return guard([&] {
    const std::string wanted = type;
    bool known = false;
    for (int i = 0; i <= static_cast<int>(MeshType::X); ++i) known |= wanted == type_name(static_cast<MeshType>(i));
    if (!known) throw ParseError("type must be one of I..X, got '" + wanted + "'");
    Json rows = Json::array();
    bool agree = true;
    for (const auto& t : triple_grid(nmax, kmax)) {
      if (wanted != type_name(t.type())) continue;
      AbelianGroup closed = k0_closed_form(t);
      AbelianGroup matrix = k0_from_generators(t);
      agree &= closed == matrix;
      rows.push_back({{"triple", t.to_string()}, {"k", t.k()}, {"d", t.d()}, {"r", t.r()},
                      {"closed", group_to_json(closed)}, {"closed_text", closed.to_text()},
                      {"matrix", group_to_json(matrix)}, {"agree", closed == matrix}});
    }
    emit(out_json, Json{{"type", wanted}, {"rows", rows}, {"agree", agree}}.dump());
    if (!agree) return fail(MESHK0_ERR_MISMATCH, "closed form and generator matrix disagree");
    return MESHK0_OK;
  });
}

meshk0_status meshk0_verify(int nmax, int kmax, unsigned jobs, uint64_t seed, const int* criteria, size_t count,
                            char** out_json) {
  if (out_json == nullptr || (count > 0 && criteria == nullptr)) return null_argument();
  return guard([&] {
    VerifyOptions options{.nmax = nmax, .kmax = kmax, .jobs = jobs, .seed = seed};
    for (size_t i = 0; i < count; ++i) {
      criterion_title(criteria[i]);
      options.only.insert(criteria[i]);
    }
    VerificationReport report = run_verification(options);
    emit(out_json, report_to_json(report).dump());
    if (!report.all_passed()) return fail(MESHK0_ERR_MISMATCH, "acceptance criteria failed");
    return MESHK0_OK;
  });
}

}  // extern "C"
