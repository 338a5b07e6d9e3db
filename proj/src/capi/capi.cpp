#include "nsla/nsla.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <json.hpp>
#include <sstream>
#include <string>

#include "core/analyze.hpp"
#include "core/catalog.hpp"
#include "core/conformance.hpp"
#include "core/fileio.hpp"

struct nsla_algebra {
  nsla::NLieSuperalgebra a;
};

namespace {

thread_local std::string g_error;

int map_code(nsla::Err e) {
  using nsla::Err;
  switch (e) {
    case Err::FieldMismatch: return NSLA_ERR_FIELD_MISMATCH;
    case Err::DivisionByZero: return NSLA_ERR_DIVISION_BY_ZERO;
    case Err::BadField: return NSLA_ERR_BAD_FIELD;
    case Err::Parse: return NSLA_ERR_PARSE;
    case Err::BadArity: return NSLA_ERR_BAD_ARITY;
    case Err::ArityMismatch: return NSLA_ERR_ARITY_MISMATCH;
    case Err::ParityObstruction: return NSLA_ERR_PARITY_OBSTRUCTION;
    case Err::AmbientMismatch: return NSLA_ERR_AMBIENT_MISMATCH;
    case Err::NotAnIdeal: return NSLA_ERR_NOT_AN_IDEAL;
    case Err::NotASubalgebra: return NSLA_ERR_NOT_A_SUBALGEBRA;
    case Err::NotHMC: return NSLA_ERR_NOT_BRACKET_CLOSED;
    case Err::BadDecomposition: return NSLA_ERR_BAD_DECOMPOSITION;
    case Err::IncompatibleAlgebras: return NSLA_ERR_INCOMPATIBLE_ALGEBRAS;
    case Err::InvalidRepresentation: return NSLA_ERR_INVALID_REPRESENTATION;
    case Err::HypothesisNotMet: return NSLA_ERR_HYPOTHESIS_NOT_MET;
    case Err::BudgetExceeded: return NSLA_ERR_BUDGET_EXCEEDED;
    case Err::FiniteFieldRequired: return NSLA_ERR_FINITE_FIELD_REQUIRED;
    case Err::Internal: return NSLA_ERR_INTERNAL;
  }
  return NSLA_ERR_INTERNAL;
}

template <class F>
int guarded(F&& fn) {
  try {
    fn();
    return NSLA_OK;
  } catch (const nsla::Error& e) {
    g_error = e.what();
    return map_code(e.code);
  } catch (const std::exception& e) {
    g_error = e.what();
    return NSLA_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

int set_out(char** out, const std::string& s) {
  *out = dup_string(s);
  if (!*out) {
    g_error = "out of memory";
    return NSLA_ERR_INTERNAL;
  }
  return NSLA_OK;
}

nsla::Budget to_budget(const nsla_budget* b) {
  nsla::Budget r;
  if (b) {
    r.max_subspaces = b->max_subspaces;
    r.max_tuples = b->max_tuples;
    r.samples = b->samples;
    r.max_assignments = b->max_assignments;
    r.seed = b->seed;
  }
  return r;
}

nsla::Field parse_field_name(const char* field) {
  std::string s = field ? field : "";
  if (s == "Q") return nsla::Field{};
  if (s.size() >= 2 && s[0] == 'F') {
    try {
      return nsla::field_prime(static_cast<uint32_t>(std::stoul(s.substr(1))));
    } catch (const nsla::Error&) {
      throw;
    } catch (const std::exception&) {
    }
  }
  throw nsla::Error(nsla::Err::BadField, "field must be Q or F<prime>: '" + s + "'");
}

int require(bool cond) {
  if (!cond) {
    g_error = "null argument";
    return NSLA_ERR_NULL_ARGUMENT;
  }
  return NSLA_OK;
}

}  // namespace

extern "C" {

const char* nsla_version(void) { return "1.0.0"; }

const char* nsla_last_error(void) { return g_error.c_str(); }

const char* nsla_status_name(int status) {
  switch (status) {
    case NSLA_OK: return "ok";
    case NSLA_ERR_FIELD_MISMATCH: return "field mismatch";
    case NSLA_ERR_DIVISION_BY_ZERO: return "division by zero";
    case NSLA_ERR_BAD_FIELD: return "bad field";
    case NSLA_ERR_PARSE: return "parse error";
    case NSLA_ERR_BAD_ARITY: return "bad arity";
    case NSLA_ERR_ARITY_MISMATCH: return "arity mismatch";
    case NSLA_ERR_PARITY_OBSTRUCTION: return "parity obstruction";
    case NSLA_ERR_AMBIENT_MISMATCH: return "ambient mismatch";
    case NSLA_ERR_NOT_AN_IDEAL: return "not an ideal";
    case NSLA_ERR_NOT_A_SUBALGEBRA: return "not a subalgebra";
    case NSLA_ERR_NOT_BRACKET_CLOSED: return "not closed under the bracket";
    case NSLA_ERR_BAD_DECOMPOSITION: return "bad decomposition";
    case NSLA_ERR_INCOMPATIBLE_ALGEBRAS: return "incompatible algebras";
    case NSLA_ERR_INVALID_REPRESENTATION: return "invalid representation";
    case NSLA_ERR_HYPOTHESIS_NOT_MET: return "hypothesis not met";
    case NSLA_ERR_BUDGET_EXCEEDED: return "budget exceeded";
    case NSLA_ERR_FINITE_FIELD_REQUIRED: return "finite field required";
    case NSLA_ERR_INTERNAL: return "internal error";
    case NSLA_ERR_IO: return "i/o error";
    case NSLA_ERR_NULL_ARGUMENT: return "null argument";
  }
  return "unknown status";
}

void nsla_string_free(char* s) { std::free(s); }

void nsla_budget_default(nsla_budget* out) {
  if (!out) return;
  nsla::Budget d;
  out->max_subspaces = d.max_subspaces;
  out->max_tuples = d.max_tuples;
  out->samples = d.samples;
  out->max_assignments = d.max_assignments;
  out->seed = d.seed;
}

int nsla_algebra_parse(const char* text, nsla_algebra** out) {
  if (int rc = require(text && out)) return rc;
  return guarded([&] {
    std::istringstream is{std::string(text)};
    *out = new nsla_algebra{nsla::parse_algebra(is)};
  });
}

int nsla_algebra_load(const char* path, nsla_algebra** out) {
  if (int rc = require(path && out)) return rc;
  return guarded([&] { *out = new nsla_algebra{nsla::load_algebra(path)}; });
}

int nsla_algebra_serialize(const nsla_algebra* a, char** out) {
  if (int rc = require(a && out)) return rc;
  std::string s;
  if (int rc = guarded([&] { s = nsla::serialize_algebra(a->a); })) return rc;
  return set_out(out, s);
}

int nsla_algebra_save(const nsla_algebra* a, const char* path) {
  if (int rc = require(a && path)) return rc;
  return guarded([&] { nsla::save_algebra(a->a, path); });
}

void nsla_algebra_free(nsla_algebra* a) { delete a; }

int nsla_algebra_field(const nsla_algebra* a, char** out) {
  if (int rc = require(a && out)) return rc;
  return set_out(out, a->a.field.str());
}

int nsla_algebra_arity(const nsla_algebra* a, int* out) {
  if (int rc = require(a && out)) return rc;
  *out = a->a.n;
  return NSLA_OK;
}

int nsla_algebra_dims(const nsla_algebra* a, size_t* dim_even, size_t* dim_odd) {
  if (int rc = require(a && dim_even && dim_odd)) return rc;
  *dim_even = a->a.gdims().d0;
  *dim_odd = a->a.gdims().d1;
  return NSLA_OK;
}

int nsla_catalog_names(char** out) {
  if (int rc = require(out)) return rc;
  std::string s;
  for (const std::string& n : nsla::catalog_names()) {
    s += n;
    s += "\n";
  }
  return set_out(out, s);
}

int nsla_catalog_build(const char* name, const long long* params, size_t nparams,
                       const char* field, nsla_algebra** out) {
  if (int rc = require(name && field && out && (params || nparams == 0))) return rc;
  return guarded([&] {
    std::vector<long long> p(params, params + nparams);
    *out = new nsla_algebra{nsla::build_catalog(name, p, parse_field_name(field))};
  });
}

int nsla_validate(const nsla_algebra* a, int machine, char** report, int* ok) {
  if (int rc = require(a && report && ok)) return rc;
  std::string s;
  if (int rc = guarded([&] {
        *ok = nsla::validate_algebra(a->a).ok() ? 1 : 0;
        s = machine ? nsla::validation_json(a->a) : nsla::validation_text(a->a);
      }))
    return rc;
  return set_out(report, s);
}

int nsla_analyze(const nsla_algebra* a, const nsla_budget* budget, int machine, char** report) {
  if (int rc = require(a && report)) return rc;
  std::string s;
  if (int rc = guarded([&] {
        nsla::Budget b = to_budget(budget);
        s = machine ? nsla::analyze_json(a->a, b) : nsla::analyze_text(a->a, b);
      }))
    return rc;
  return set_out(report, s);
}

int nsla_lattice(const nsla_algebra* a, const nsla_budget* budget, int machine, char** report) {
  if (int rc = require(a && report)) return rc;
  std::string s;
  if (int rc = guarded([&] {
        nsla::Budget b = to_budget(budget);
        s = machine ? nsla::lattice_json(a->a, b) : nsla::lattice_text(a->a, b);
      }))
    return rc;
  return set_out(report, s);
}

int nsla_conformance(const nsla_algebra* a, const nsla_budget* budget, int machine, char** report,
                     int* all_ok) {
  if (int rc = require(a && report && all_ok)) return rc;
  std::string s;
  if (int rc = guarded([&] {
        nsla::ConformanceReport r = nsla::check_conformance(a->a, to_budget(budget));
        *all_ok = r.all_ok() ? 1 : 0;
        s = machine ? nsla::conformance_json(a->a, r) : nsla::conformance_text(a->a, r);
      }))
    return rc;
  return set_out(report, s);
}

int nsla_conformance_corpus(const char* dir, const nsla_budget* budget, int machine, char** report,
                            int* all_ok) {
  if (int rc = require(dir && report && all_ok)) return rc;
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  {
    std::error_code ec;
    fs::directory_iterator it(dir, ec), end;
    if (ec) {
      g_error = "cannot read directory " + std::string(dir) + ": " + ec.message();
      return NSLA_ERR_IO;
    }
    for (; it != end; it.increment(ec)) {
      if (ec) {
        g_error = "cannot read directory " + std::string(dir) + ": " + ec.message();
        return NSLA_ERR_IO;
      }
      if (it->is_regular_file() && it->path().extension() == ".nsla") files.push_back(it->path());
    }
  }
  std::string s;
  if (int rc = guarded([&] {
        std::sort(files.begin(), files.end());
        nsla::Budget b = to_budget(budget);
        bool ok = true;
        nlohmann::ordered_json jfiles = nlohmann::ordered_json::array();
        std::ostringstream text;
        for (const fs::path& p : files) {
          nsla::NLieSuperalgebra A = nsla::load_algebra(p.string());
          nsla::ConformanceReport r = nsla::check_conformance(A, b);
          ok = ok && r.all_ok();
          if (machine) {
            nlohmann::ordered_json e;
            e["file"] = p.filename().string();
            e["report"] = nlohmann::ordered_json::parse(nsla::conformance_json(A, r));
            jfiles.push_back(std::move(e));
          } else {
            text << "== " << p.filename().string() << "\n" << nsla::conformance_text(A, r);
          }
        }
        *all_ok = ok ? 1 : 0;
        if (machine) {
          nlohmann::ordered_json out;
          out["format"] = "nsla-conformance-corpus-v1";
          out["files_checked"] = jfiles.size();
          out["files"] = std::move(jfiles);
          out["all_ok"] = ok;
          s = out.dump(2) + "\n";
        } else {
          text << "corpus: " << files.size() << " files, "
               << (ok ? "all laws hold" : "FAILURES present") << "\n";
          s = text.str();
        }
      }))
    return rc;
  return set_out(report, s);
}

int nsla_enumerate(size_t dim_even, size_t dim_odd, int arity, unsigned prime,
                   const nsla_budget* budget, nsla_enum_callback cb, void* user,
                   uint64_t* constants, uint64_t* assignments, uint64_t* valid) {
  if (int rc = require(cb != nullptr)) return rc;
  return guarded([&] {
    nsla::Budget b = to_budget(budget);
    nsla::EnumerationStats st = nsla::brute_force_enumerate(
        dim_even, dim_odd, arity, prime, b,
        [&](const nsla::NLieSuperalgebra& A, uint64_t index) {
          std::string text = nsla::serialize_algebra(A);
          cb(text.c_str(), index, user);
        });
    if (constants) *constants = st.constants;
    if (assignments) *assignments = st.assignments;
    if (valid) *valid = st.valid;
  });
}

}  // extern "C"
