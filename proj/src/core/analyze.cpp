#include "core/analyze.hpp"

#include <json.hpp>
#include <sstream>

#include "core/engel.hpp"
#include "core/lattice.hpp"
#include "core/series.hpp"

namespace nsla {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json vec_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (const Scalar& c : v) a.push_back(c.str());
  return a;
}

ordered_json tuple_json(const std::vector<Vec>& t) {
  ordered_json a = ordered_json::array();
  for (const Vec& v : t) a.push_back(vec_json(v));
  return a;
}

ordered_json gs_json(const GradedSubspace& s, const NLieSuperalgebra& A) {
  ordered_json j;
  j["dim"] = s.dim();
  j["dim_even"] = s.even.rows;
  j["dim_odd"] = s.odd.rows;
  ordered_json basis = ordered_json::array();
  for (const auto& [v, par] : gs_basis(s, A.layout)) {
    ordered_json b;
    b["parity"] = par == 0 ? "even" : "odd";
    b["coords"] = vec_json(v);
    basis.push_back(std::move(b));
  }
  j["basis"] = std::move(basis);
  return j;
}

ordered_json dims_json(const GradedSubspace& s) {
  return ordered_json{{"even", s.even.rows}, {"odd", s.odd.rows}};
}

ordered_json series_json(const SeriesReport& r) {
  ordered_json j;
  ordered_json dims = ordered_json::array();
  for (const GradedSubspace& t : r.terms) dims.push_back(dims_json(t));
  j["term_dims"] = std::move(dims);
  j["reaches_zero"] = r.reaches_zero;
  return j;
}

std::string series_dims_str(const SeriesReport& r) {
  std::ostringstream os;
  for (size_t i = 0; i < r.terms.size(); ++i) {
    if (i) os << " > ";
    os << r.terms[i].dim();
  }
  os << (r.reaches_zero ? "" : "  (stabilizes nonzero)");
  return os.str();
}

ordered_json header_json(const NLieSuperalgebra& A) {
  ordered_json j;
  j["field"] = A.field.str();
  j["arity"] = A.n;
  j["bracket_parity"] = A.alpha == 0 ? "even" : "odd";
  ordered_json basis = ordered_json::array();
  for (size_t i = 0; i < A.names.size(); ++i)
    basis.push_back(ordered_json{{"name", A.names[i]}, {"parity", A.parities[i] == 0 ? "even" : "odd"}});
  j["basis"] = std::move(basis);
  j["dim"] = ordered_json{{"even", A.gdims().d0}, {"odd", A.gdims().d1}, {"total", A.dim()}};
  return j;
}

ordered_json validation_to_json(const ValidationReport& r) {
  ordered_json j;
  j["ok"] = r.ok();
  j["grading_ok"] = r.grading_ok;
  j["skew_ok"] = r.skew_ok;
  j["filippov_jacobi_ok"] = r.fj_ok;
  j["char2_caveat"] = r.char2_caveat;
  ordered_json w = ordered_json::array();
  for (const ValidationWitness& x : r.witnesses) {
    ordered_json e;
    e["kind"] = x.kind;
    e["outer"] = x.outer;
    e["inner"] = x.inner;
    e["detail"] = x.detail;
    w.push_back(std::move(e));
  }
  j["witnesses"] = std::move(w);
  return j;
}

void validation_to_text(const ValidationReport& r, std::ostream& os) {
  auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
  os << "grading: " << flag(r.grading_ok) << "\n";
  os << "skew symmetry: " << flag(r.skew_ok) << "\n";
  os << "Filippov-Jacobi identity: " << flag(r.fj_ok) << "\n";
  if (r.char2_caveat)
    os << "note: characteristic 2, repeated-argument vanishing not enforced\n";
  for (const ValidationWitness& x : r.witnesses) {
    os << "  witness (" << x.kind << "): " << x.detail << "\n";
  }
  os << "valid: " << (r.ok() ? "yes" : "no") << "\n";
}

void header_to_text(const NLieSuperalgebra& A, std::ostream& os) {
  os << "field " << A.field.str() << ", arity " << A.n << ", "
     << (A.alpha == 0 ? "even" : "odd") << " bracket\n";
  os << "basis:";
  for (size_t i = 0; i < A.names.size(); ++i)
    os << " " << A.names[i] << (A.parities[i] ? "(odd)" : "(even)");
  os << "\n";
  os << "dim " << A.dim() << " = " << A.gdims().d0 << " even + " << A.gdims().d1 << " odd\n";
}

bool resource_limit(const Error& e) {
  return e.code == Err::FiniteFieldRequired || e.code == Err::BudgetExceeded;
}

// The lattice-dependent slice of the survey; null when not enumerable.
struct LatticeSection {
  bool available = false;
  std::string skip_reason;
  LatticeCatalog cat;
  StarReport star;
  SStarReport dichotomy;
  bool invariance_available = false;
  std::string invariance_skip;
  InvarianceReport invariance;
};

LatticeSection lattice_section(const NLieSuperalgebra& A, const Budget& budget) {
  LatticeSection s;
  try {
    s.cat = build_lattice(A, budget);
  } catch (const Error& e) {
    if (!resource_limit(e)) throw;
    s.skip_reason = e.what();
    return s;
  }
  s.available = true;
  s.star = condition_star(A, s.cat);
  s.dichotomy = is_s_star(A, s.cat, budget);
  try {
    s.invariance = invariance_number(A, s.cat, budget);
    s.invariance_available = true;
  } catch (const Error& e) {
    if (!resource_limit(e)) throw;
    s.invariance_skip = e.what();
  }
  return s;
}

ordered_json analysis_json_obj(const NLieSuperalgebra& A, const Budget& budget) {
  ordered_json j = header_json(A);
  ordered_json out;
  out["format"] = "nsla-analysis-v1";
  for (auto& [k, v] : j.items()) out[k] = v;

  ValidationReport val = validate_algebra(A);
  out["validation"] = validation_to_json(val);
  if (!val.ok()) {
    out["analysis"] = nullptr;
    out["note"] = "not a valid algebra; structural analysis skipped";
    return out;
  }

  GradedSubspace a2 = derived_subspace(A);
  ordered_json d = gs_json(a2, A);
  d["codim"] = A.dim() - a2.dim();
  out["derived_subspace"] = std::move(d);

  GradedSubspace full = gs_full(A.field, A.gdims());
  out["lower_central"] = series_json(lower_central_series(A, full));
  std::optional<size_t> cls = nilpotency_class(A);
  out["nilpotent"] = cls.has_value();
  out["nilpotency_class"] = cls ? ordered_json(*cls) : ordered_json(nullptr);

  ordered_json ds = ordered_json::array();
  for (size_t k = 2; k <= size_t(A.n); ++k) {
    SeriesReport r = derived_series(A, full, k);
    ordered_json e = series_json(r);
    e["k"] = k;
    e["solvable"] = r.reaches_zero;
    if (r.reaches_zero) e["derived_length"] = r.terms.size() - 1;
    ds.push_back(std::move(e));
  }
  out["derived_series"] = std::move(ds);

  EngelReport eng = engel_scan(A, budget);
  {
    ordered_json e;
    e["exhaustive"] = eng.exhaustive;
    e["all_left_multiplications_nilpotent"] = tri_name(eng.verdict);
    e["tuples_scanned"] = eng.tuple_count;
    e["witness"] = eng.verdict == Tri::no ? tuple_json(eng.witness) : ordered_json(nullptr);
    out["engel"] = std::move(e);
  }

  StarStarReport ss = condition_star_star(A, budget);
  {
    ordered_json e;
    e["exhaustive"] = ss.exhaustive;
    e["holds"] = tri_name(ss.verdict);
    e["tuples_scanned"] = ss.tuple_count;
    e["witness"] = ss.verdict == Tri::no ? tuple_json(ss.witness) : ordered_json(nullptr);
    out["null_component_condition"] = std::move(e);
  }

  LatticeSection ls = lattice_section(A, budget);
  ordered_json lat;
  if (!ls.available) {
    lat["status"] = "skipped";
    lat["reason"] = ls.skip_reason;
  } else {
    lat["status"] = "ok";
    lat["subspaces"] = ls.cat.items.size();
    lat["subalgebras"] = ls.cat.subalgebras.size();
    lat["ideals"] = ls.cat.ideals.size();
    lat["maximal_subalgebras"] = ls.cat.maximal_subalgebras.size();
    lat["maximal_ideals"] = ls.cat.maximal_ideals.size();
    lat["frattini"] = gs_json(ls.cat.frattini, A);
    lat["frattini_ideal"] = gs_json(ls.cat.frattini_ideal, A);
    lat["jacobson"] = gs_json(ls.cat.jacobson, A);
    {
      ordered_json e;
      e["holds"] = tri_name(ls.star.verdict);
      e["witness"] =
          ls.star.witness ? gs_json(*ls.star.witness, A) : ordered_json(nullptr);
      lat["sum_condition"] = std::move(e);
    }
    {
      ordered_json e;
      e["holds"] = tri_name(ls.dichotomy.verdict);
      e["violator"] =
          ls.dichotomy.violator ? gs_json(*ls.dichotomy.violator, A) : ordered_json(nullptr);
      if (!ls.dichotomy.note.empty()) e["note"] = ls.dichotomy.note;
      lat["subalgebra_dichotomy"] = std::move(e);
    }
    if (ls.invariance_available) {
      ordered_json e;
      e["v"] = ls.invariance.v;
      ordered_json chain = ordered_json::array();
      for (const GradedSubspace& w : ls.invariance.chain) chain.push_back(dims_json(w));
      e["chain_dims"] = std::move(chain);
      lat["invariance_number"] = std::move(e);
    } else {
      lat["invariance_number"] = ordered_json{{"status", "skipped"}, {"reason", ls.invariance_skip}};
    }
  }
  out["lattice"] = std::move(lat);
  return out;
}

}  // namespace

std::string validation_json(const NLieSuperalgebra& A) {
  ordered_json out;
  out["format"] = "nsla-validation-v1";
  ordered_json h = header_json(A);
  for (auto& [k, v] : h.items()) out[k] = v;
  out["validation"] = validation_to_json(validate_algebra(A));
  return out.dump(2) + "\n";
}

std::string validation_text(const NLieSuperalgebra& A) {
  std::ostringstream os;
  header_to_text(A, os);
  validation_to_text(validate_algebra(A), os);
  return os.str();
}

std::string analyze_json(const NLieSuperalgebra& A, const Budget& budget) {
  return analysis_json_obj(A, budget).dump(2) + "\n";
}

std::string analyze_text(const NLieSuperalgebra& A, const Budget& budget) {
  std::ostringstream os;
  header_to_text(A, os);
  ValidationReport val = validate_algebra(A);
  validation_to_text(val, os);
  if (!val.ok()) {
    os << "not a valid algebra; structural analysis skipped\n";
    return os.str();
  }

  GradedSubspace a2 = derived_subspace(A);
  os << "derived subspace: dim " << a2.dim() << " (" << a2.even.rows << " even, " << a2.odd.rows
     << " odd), codim " << A.dim() - a2.dim() << "\n";
  GradedSubspace full = gs_full(A.field, A.gdims());
  os << "lower central series dims: " << series_dims_str(lower_central_series(A, full)) << "\n";
  std::optional<size_t> cls = nilpotency_class(A);
  if (cls)
    os << "nilpotent: yes, class " << *cls << "\n";
  else
    os << "nilpotent: no\n";
  for (size_t k = 2; k <= size_t(A.n); ++k) {
    SeriesReport r = derived_series(A, full, k);
    os << k << "-derived series dims: " << series_dims_str(r);
    if (r.reaches_zero)
      os << "  -> " << k << "-solvable, length " << r.terms.size() - 1;
    os << "\n";
  }

  EngelReport eng = engel_scan(A, budget);
  os << "left multiplications nilpotent: " << tri_name(eng.verdict) << " ("
     << (eng.exhaustive ? "exhaustive" : "sampled") << ", " << eng.tuple_count << " tuples)\n";
  StarStarReport ss = condition_star_star(A, budget);
  os << "null-component condition: " << tri_name(ss.verdict) << " ("
     << (ss.exhaustive ? "exhaustive" : "sampled") << ", " << ss.tuple_count << " tuples)\n";

  LatticeSection ls = lattice_section(A, budget);
  if (!ls.available) {
    os << "lattice: skipped (" << ls.skip_reason << ")\n";
    return os.str();
  }
  os << "lattice: " << ls.cat.items.size() << " graded subspaces, " << ls.cat.subalgebras.size()
     << " subalgebras, " << ls.cat.ideals.size() << " ideals, " << ls.cat.maximal_subalgebras.size()
     << " maximal subalgebras, " << ls.cat.maximal_ideals.size() << " maximal ideals\n";
  os << "frattini subalgebra: dim " << ls.cat.frattini.dim() << "; frattini ideal: dim "
     << ls.cat.frattini_ideal.dim() << "; jacobson radical: dim " << ls.cat.jacobson.dim() << "\n";
  os << "sum condition: " << tri_name(ls.star.verdict);
  if (ls.star.witness) os << " (witness subalgebra of dim " << ls.star.witness->dim() << ")";
  os << "\n";
  os << "subalgebra dichotomy: " << tri_name(ls.dichotomy.verdict);
  if (ls.dichotomy.violator) os << " (violator of dim " << ls.dichotomy.violator->dim() << ")";
  if (!ls.dichotomy.note.empty()) os << " -- " << ls.dichotomy.note;
  os << "\n";
  if (ls.invariance_available) {
    os << "invariance number: " << ls.invariance.v << " (maximal chain dims";
    for (const GradedSubspace& w : ls.invariance.chain) os << " " << w.dim();
    os << ")\n";
  } else {
    os << "invariance number: skipped (" << ls.invariance_skip << ")\n";
  }
  return os.str();
}

std::string lattice_json(const NLieSuperalgebra& A, const Budget& budget) {
  ordered_json out;
  out["format"] = "nsla-lattice-v1";
  ordered_json h = header_json(A);
  for (auto& [k, v] : h.items()) out[k] = v;
  LatticeCatalog cat = build_lattice(A, budget);
  out["subspaces"] = cat.items.size();
  out["subalgebras"] = cat.subalgebras.size();
  out["ideals"] = cat.ideals.size();
  out["maximal_subalgebras"] = cat.maximal_subalgebras.size();
  out["maximal_ideals"] = cat.maximal_ideals.size();
  out["frattini"] = gs_json(cat.frattini, A);
  out["frattini_ideal"] = gs_json(cat.frattini_ideal, A);
  out["jacobson"] = gs_json(cat.jacobson, A);
  ordered_json items = ordered_json::array();
  for (const SubspaceInfo& it : cat.items) {
    ordered_json e = gs_json(it.space, A);
    e["subalgebra"] = it.subalgebra;
    e["ideal"] = it.ideal;
    e["weak_ideal"] = it.weak_ideal;
    e["abelian_ideal"] = it.abelian_ideal;
    e["maximal_subalgebra"] = it.maximal_subalgebra;
    e["maximal_ideal"] = it.maximal_ideal;
    e["subinvariant"] = it.subinvariant;
    items.push_back(std::move(e));
  }
  out["items"] = std::move(items);
  return out.dump(2) + "\n";
}

std::string lattice_text(const NLieSuperalgebra& A, const Budget& budget) {
  std::ostringstream os;
  header_to_text(A, os);
  LatticeCatalog cat = build_lattice(A, budget);
  os << "graded subspaces: " << cat.items.size() << " (subalgebras " << cat.subalgebras.size()
     << ", ideals " << cat.ideals.size() << ", maximal subalgebras "
     << cat.maximal_subalgebras.size() << ", maximal ideals " << cat.maximal_ideals.size() << ")\n";
  os << "frattini subalgebra: dim " << cat.frattini.dim() << "; frattini ideal: dim "
     << cat.frattini_ideal.dim() << "; jacobson radical: dim " << cat.jacobson.dim() << "\n";
  for (const SubspaceInfo& it : cat.items) {
    os << "dim " << it.space.dim() << " (" << it.space.even.rows << "|" << it.space.odd.rows
       << ")";
    if (it.subalgebra) os << " subalgebra";
    if (it.ideal) os << " ideal";
    if (it.weak_ideal && !it.ideal) os << " weak-ideal";
    if (it.abelian_ideal) os << " abelian";
    if (it.maximal_subalgebra) os << " maximal-subalgebra";
    if (it.maximal_ideal) os << " maximal-ideal";
    if (it.subinvariant) os << " subinvariant";
    os << "\n";
    for (const auto& [v, par] : gs_basis(it.space, A.layout)) {
      os << "    " << (par ? "odd " : "even");
      for (const Scalar& c : v) os << " " << c.str();
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace nsla
