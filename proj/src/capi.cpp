#include "nilgraded/nilgraded.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "nilgraded/catalog.hpp"
#include "nilgraded/cohomology.hpp"
#include "nilgraded/errors.hpp"
#include "nilgraded/invariants.hpp"
#include "nilgraded/liecore.hpp"
#include "nilgraded/mcdsl.hpp"
#include "nilgraded/verify.hpp"

struct nlg_algebra {
  nilgraded::LieAlgebra g;
};

namespace {

using nlohmann::ordered_json;
using namespace nilgraded;

thread_local std::string last_error;
thread_local std::size_t last_line = 0;
thread_local std::size_t last_column = 0;

nlg_status fail(nlg_status s, const std::string& what) {
  last_error = what;
  return s;
}

template <class F>
nlg_status guarded(F&& body) {
  last_error.clear();
  last_line = last_column = 0;
  try {
    body();
    return NLG_OK;
  } catch (const SyntaxError& e) {
    last_line = e.line();
    last_column = e.column();
    return fail(NLG_SYNTAX_ERROR, e.what());
  } catch (const InputError& e) {
    return fail(NLG_INPUT_ERROR, e.what());
  } catch (const ParameterError& e) {
    return fail(NLG_PARAMETER_ERROR, e.what());
  } catch (const PreconditionError& e) {
    return fail(NLG_PRECONDITION_ERROR, e.what());
  } catch (const NotNilpotentError& e) {
    return fail(NLG_NOT_NILPOTENT, e.what());
  } catch (const std::exception& e) {
    return fail(NLG_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(NLG_INTERNAL_ERROR, "unknown exception");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw InputError(std::string(what) + " is null");
}

ordered_json vec_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::vector<int> weights_for(const LieAlgebra& g, const int* weights, std::size_t count) {
  if (weights) {
    if (count != g.dim())
      throw InputError(std::to_string(count) + " weights given for dimension " + std::to_string(g.dim()));
    return std::vector<int>(weights, weights + count);
  }
  if (!g.weights()) throw PreconditionError("no weights given and none attached to the algebra");
  return *g.weights();
}

}  // namespace

extern "C" {

const char* nlg_last_error(void) { return last_error.c_str(); }
size_t nlg_last_error_line(void) { return last_line; }
size_t nlg_last_error_column(void) { return last_column; }

const char* nlg_status_name(nlg_status status) {
  switch (status) {
    case NLG_OK: return "ok";
    case NLG_INPUT_ERROR: return "input error";
    case NLG_PARAMETER_ERROR: return "parameter error";
    case NLG_PRECONDITION_ERROR: return "precondition error";
    case NLG_NOT_NILPOTENT: return "not nilpotent";
    case NLG_SYNTAX_ERROR: return "syntax error";
    case NLG_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

void nlg_string_free(char* s) { std::free(s); }

uint64_t nlg_default_seed(void) { return kDefaultSeed; }

nlg_status nlg_algebra_from_mc(const char* text, nlg_algebra** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new nlg_algebra{parse_mc(text)};
  });
}

nlg_status nlg_algebra_from_json(const char* text, nlg_algebra** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new nlg_algebra{from_json(text)};
  });
}

nlg_status nlg_model_build(const char* model_id, nlg_algebra** out) {
  return guarded([&] {
    require(model_id, "model id");
    require(out, "out");
    *out = new nlg_algebra{build_model(parse_model_id(model_id))};
  });
}

void nlg_algebra_free(nlg_algebra* g) { delete g; }

size_t nlg_algebra_dim(const nlg_algebra* g) { return g ? g->g.dim() : 0; }

nlg_status nlg_algebra_to_json(const nlg_algebra* g, char** out) {
  return guarded([&] {
    require(g, "algebra");
    require(out, "out");
    *out = dup(to_json(g->g));
  });
}

nlg_status nlg_algebra_to_mc(const nlg_algebra* g, char** out) {
  return guarded([&] {
    require(g, "algebra");
    require(out, "out");
    *out = dup(render_mc(g->g));
  });
}

nlg_status nlg_jacobi_json(const nlg_algebra* g, char** out) {
  return guarded([&] {
    require(g, "algebra");
    require(out, "out");
    ordered_json a = ordered_json::array();
    for (const auto& d : jacobi_defects(g->g))
      a.push_back({{"triple", {d.i + 1, d.j + 1, d.k + 1}}, {"defect", vec_json(d.defect)}});
    *out = dup(a.dump(2));
  });
}

nlg_status nlg_invariants_json(const nlg_algebra* g, uint64_t seed, char** out) {
  return guarded([&] {
    require(g, "algebra");
    require(out, "out");
    const LieAlgebra& a = g->g;
    const Filtration f = lower_central_series(a);
    const auto cs = characteristic_sequence(a, seed);
    ordered_json j;
    j["dim"] = a.dim();
    j["series_dims"] = f.dims();
    j["nilindex"] = f.stages.size() - 1;
    const auto z = center(a);
    j["center_dim"] = z.size();
    j["center"] = ordered_json::array();
    for (const auto& v : z) j["center"].push_back(vec_json(v));
    j["characteristic_sequence"] = cs.sequence.parts;
    j["witness"] = vec_json(cs.witness);
    j["candidates_examined"] = cs.candidates_examined;
    j["seed"] = seed;
    j["linear"] = is_linear(cs.sequence);
    j["split"] = has_abelian_direct_factor(a);
    *out = dup(j.dump(2));
  });
}

nlg_status nlg_graded_certificate(const nlg_algebra* g, const int* weights, size_t count, int* ok, char** reason) {
  return guarded([&] {
    require(g, "algebra");
    require(ok, "ok");
    const auto r = check_graded(g->g, weights_for(g->g, weights, count));
    *ok = r.ok ? 1 : 0;
    if (reason) *reason = dup(r.reason);
  });
}

nlg_status nlg_h2_json(const nlg_algebra* g, char** out) {
  return guarded([&] {
    require(g, "algebra");
    require(out, "out");
    const auto s = cocycle_spaces(g->g);
    ordered_json j;
    j["z2_dim"] = s.z2_basis.size();
    j["b2_dim"] = s.b2_basis.size();
    j["h2_dim"] = s.h2_dim;
    j["z2_basis"] = ordered_json::array();
    for (const auto& c : s.z2_basis) j["z2_basis"].push_back(c.to_string());
    j["b2_basis"] = ordered_json::array();
    for (const auto& c : s.b2_basis) j["b2_basis"].push_back(c.to_string());
    *out = dup(j.dump(2));
  });
}

nlg_status nlg_extensions_json(const nlg_algebra* g, const int* weights, size_t count, int max_weight,
                               uint64_t seed, char** out) {
  return guarded([&] {
    require(g, "algebra");
    require(out, "out");
    ExtensionSearchOptions options;
    options.seed = seed;
    if (max_weight > 0) options.max_weight = max_weight;
    const auto search = search_graded_linear_extensions(g->g, weights_for(g->g, weights, count), options);
    ordered_json j;
    j["seed"] = seed;
    j["weights_searched"] = search.weights_searched;
    j["cocycles_tried"] = search.cocycles_tried;
    j["candidates"] = ordered_json::array();
    for (const auto& c : search.candidates) {
      ordered_json e;
      e["cocycle"] = c.cocycle.to_string();
      e["new_weight"] = c.new_weight;
      e["dim"] = c.profile.dim;
      e["characteristic_sequence"] = c.profile.sequence.parts;
      e["series_dims"] = c.profile.series_dims;
      e["h2_dim"] = c.profile.h2_dim;
      j["candidates"].push_back(std::move(e));
    }
    *out = dup(j.dump(2));
  });
}

nlg_status nlg_enumerate_json(size_t dim, char** out) {
  return guarded([&] {
    require(out, "out");
    if (dim < 3) throw InputError("dimension must be at least 3");
    const auto models = enumerate_models(dim);
    ordered_json j;
    j["dim"] = dim;
    j["count"] = models.size();
    j["models"] = ordered_json::array();
    for (const auto& id : models) j["models"].push_back({{"id", id.to_string()}, {"filiform", is_filiform(id)}});
    *out = dup(j.dump(2));
  });
}

nlg_status nlg_verify_paper(size_t max_dim, uint64_t seed, int as_json, const char* corrupt_model, int* passed,
                            char** report) {
  return guarded([&] {
    require(passed, "passed");
    require(report, "report");
    VerifyOptions options;
    options.seed = seed;
    if (corrupt_model) options.corrupt = parse_model_id(corrupt_model);
    const auto r = verify_paper(max_dim, options);
    *passed = r.pass ? 1 : 0;
    *report = dup(as_json ? render_json(r) : render_text(r));
  });
}

}  // extern "C"
