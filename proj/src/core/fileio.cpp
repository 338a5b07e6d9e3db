#include "core/fileio.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace nsla {

namespace {

struct Line {
  size_t no;
  std::vector<std::string> tok;
};

[[noreturn]] void fail(size_t line, const std::string& msg) {
  throw Error(Err::Parse, "line " + std::to_string(line) + ": " + msg);
}

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    Line l{no, {}};
    std::string t;
    while (ls >> t) l.tok.push_back(t);
    if (!l.tok.empty()) out.push_back(std::move(l));
  }
  return out;
}

Field parse_field_token(const Line& l, const std::string& s) {
  if (s == "Q") return field_rational();
  if (s.size() >= 2 && s[0] == 'F') {
    try {
      return field_prime(uint32_t(std::stoul(s.substr(1))));
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(l.no, "bad field descriptor: " + s);
    }
  }
  fail(l.no, "bad field descriptor: " + s);
}

long long parse_int_token(const Line& l, const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) fail(l.no, std::string("bad ") + what + ": " + s);
    return v;
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(l.no, std::string("bad ") + what + ": " + s);
  }
}

struct Header {
  Field field;
  int n = 0, alpha = 0;
  std::vector<std::pair<std::string, int>> basis;
  std::map<std::string, size_t> index;
  size_t next = 0;  // first unconsumed line
};

/* Shared prefix of both formats: tag, field, arity, alpha, basis list. */
Header parse_header(const std::vector<Line>& lines, const std::string& tag) {
  if (lines.empty()) throw Error(Err::Parse, "empty input, expected " + tag);
  if (lines[0].tok.size() != 1 || lines[0].tok[0] != tag)
    fail(lines[0].no, "expected format tag " + tag);
  Header h;
  bool have_field = false, have_arity = false, have_alpha = false;
  size_t i = 1;
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const std::string& key = l.tok[0];
    if (key == "field") {
      if (l.tok.size() != 2) fail(l.no, "field takes one value");
      if (have_field) fail(l.no, "duplicate field line");
      h.field = parse_field_token(l, l.tok[1]);
      have_field = true;
    } else if (key == "arity") {
      if (l.tok.size() != 2) fail(l.no, "arity takes one value");
      if (have_arity) fail(l.no, "duplicate arity line");
      h.n = int(parse_int_token(l, l.tok[1], "arity"));
      have_arity = true;
    } else if (key == "alpha") {
      if (l.tok.size() != 2) fail(l.no, "alpha takes one value");
      if (have_alpha) fail(l.no, "duplicate alpha line");
      h.alpha = int(parse_int_token(l, l.tok[1], "alpha"));
      if (h.alpha != 0 && h.alpha != 1) fail(l.no, "alpha must be 0 or 1");
      have_alpha = true;
    } else if (key == "basis") {
      if (!have_field || !have_arity || !have_alpha)
        fail(l.no, "field, arity and alpha must precede basis lines");
      if (l.tok.size() != 3) fail(l.no, "basis takes a name and a parity");
      int par;
      if (l.tok[2] == "even")
        par = 0;
      else if (l.tok[2] == "odd")
        par = 1;
      else
        fail(l.no, "parity must be even or odd");
      if (h.index.count(l.tok[1])) fail(l.no, "duplicate basis name " + l.tok[1]);
      h.index[l.tok[1]] = h.basis.size();
      h.basis.push_back({l.tok[1], par});
    } else {
      break;
    }
  }
  if (!have_field) throw Error(Err::Parse, "missing field line");
  if (!have_arity) throw Error(Err::Parse, "missing arity line");
  if (!have_alpha) throw Error(Err::Parse, "missing alpha line");
  h.next = i;
  return h;
}

size_t name_to_index(const Line& l, const std::map<std::string, size_t>& index,
                     const std::string& nm, const char* what) {
  auto it = index.find(nm);
  if (it == index.end()) fail(l.no, std::string("unknown ") + what + " name " + nm);
  return it->second;
}

/* `NAME:COEFF ...` or a single `0`, over the given name table. */
Vec parse_value(const Line& l, size_t from, Field f, const std::map<std::string, size_t>& index,
                size_t dim) {
  Vec v = zero_vec(f, dim);
  if (from == l.tok.size()) fail(l.no, "missing value after =");
  if (l.tok.size() == from + 1 && l.tok[from] == "0") return v;
  for (size_t k = from; k < l.tok.size(); ++k) {
    const std::string& term = l.tok[k];
    auto colon = term.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == term.size())
      fail(l.no, "value terms look like NAME:COEFF, got " + term);
    size_t j = name_to_index(l, index, term.substr(0, colon), "basis");
    Scalar c;
    try {
      c = Scalar::parse(f, term.substr(colon + 1));
    } catch (const Error& e) {
      fail(l.no, e.what());
    }
    v[j] = v[j] + c;
  }
  return v;
}

std::string coeff_str(const Scalar& c) { return c.str(); }

std::string value_str(const Vec& v, const std::vector<std::string>& names) {
  std::string out;
  for (size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    if (!out.empty()) out += ' ';
    out += names[j] + ':' + coeff_str(v[j]);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

NLieSuperalgebra parse_algebra(std::istream& in) {
  auto lines = tokenize(in);
  Header h = parse_header(lines, "nsla-v1");
  NLieSuperalgebra A = make_algebra(h.field, h.n, h.alpha, h.basis);
  for (size_t i = h.next; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tok[0] != "bracket") fail(l.no, "expected a bracket line, got " + l.tok[0]);
    size_t args = size_t(h.n);
    if (l.tok.size() < 1 + args + 1 || l.tok[1 + args] != "=")
      fail(l.no, "bracket takes " + std::to_string(args) + " names, then =");
    Tuple t;
    for (size_t k = 1; k <= args; ++k)
      t.push_back(int(name_to_index(l, h.index, l.tok[k], "basis")));
    Vec v = parse_value(l, 1 + args + 1, h.field, h.index, A.dim());
    try {
      A.set_entry(t, v);
    } catch (const Error& e) {
      fail(l.no, e.what());
    }
  }
  return A;
}

NLieSuperalgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::Parse, "cannot open " + path);
  return parse_algebra(in);
}

std::string serialize_algebra(const NLieSuperalgebra& A) {
  std::ostringstream out;
  out << "nsla-v1\n";
  out << "field " << A.field.str() << "\n";
  out << "arity " << A.n << "\n";
  out << "alpha " << A.alpha << "\n";
  for (size_t i = 0; i < A.dim(); ++i)
    out << "basis " << A.names[i] << ' ' << (A.parities[i] ? "odd" : "even") << "\n";
  for_each_canonical(int(A.dim()), A.n, [&](const Tuple& t, size_t rank) {
    if (A.entry_is_zero(rank)) return;
    out << "bracket";
    for (int j : t) out << ' ' << A.names[size_t(j)];
    out << " = " << value_str(A.value(rank), A.names) << "\n";
  });
  return out.str();
}

void save_algebra(const NLieSuperalgebra& A, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Err::Parse, "cannot write " + path);
  out << serialize_algebra(A);
}

Representation parse_representation(std::istream& in) {
  auto lines = tokenize(in);
  Header h = parse_header(lines, "nsla-rep-v1");
  NLieSuperalgebra A = make_algebra(h.field, h.n, h.alpha, h.basis);

  Representation R;
  std::map<std::string, size_t> mindex;
  size_t i = h.next;
  bool in_modules = true;
  std::vector<std::pair<Line, bool>> deferred;  // bracket (true) / rho (false)
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tok[0] == "module") {
      if (!in_modules) fail(l.no, "module lines must precede bracket and rho lines");
      if (l.tok.size() != 3) fail(l.no, "module takes a name and a parity");
      int par;
      if (l.tok[2] == "even")
        par = 0;
      else if (l.tok[2] == "odd")
        par = 1;
      else
        fail(l.no, "parity must be even or odd");
      if (mindex.count(l.tok[1])) fail(l.no, "duplicate module name " + l.tok[1]);
      mindex[l.tok[1]] = R.module_names.size();
      R.module_names.push_back(l.tok[1]);
      R.module_parities.push_back(par);
    } else if (l.tok[0] == "bracket" || l.tok[0] == "rho") {
      in_modules = false;
      deferred.push_back({l, l.tok[0] == "bracket"});
    } else {
      fail(l.no, "expected a module, bracket or rho line, got " + l.tok[0]);
    }
  }
  R.module_layout = ParityLayout::from(R.module_parities);
  size_t m = R.module_names.size();
  R.idx = TupleIndexer(int(A.dim()), h.n - 1);
  R.table.assign(R.idx.size(), Matrix(h.field, m, m));

  for (auto& [l, is_bracket] : deferred) {
    if (is_bracket) {
      size_t args = size_t(h.n);
      if (l.tok.size() < 1 + args + 1 || l.tok[1 + args] != "=")
        fail(l.no, "bracket takes " + std::to_string(args) + " names, then =");
      Tuple t;
      for (size_t k = 1; k <= args; ++k)
        t.push_back(int(name_to_index(l, h.index, l.tok[k], "basis")));
      Vec v = parse_value(l, 1 + args + 1, h.field, h.index, A.dim());
      try {
        A.set_entry(t, v);
      } catch (const Error& e) {
        fail(l.no, e.what());
      }
    } else {
      size_t args = size_t(h.n) - 1;
      if (l.tok.size() < 1 + args + 3 || l.tok[1 + args] != "on" || l.tok[1 + args + 2] != "=")
        fail(l.no, "rho takes " + std::to_string(args) + " names, `on NAME =`, then a value");
      Tuple t;
      for (size_t k = 1; k <= args; ++k)
        t.push_back(int(name_to_index(l, h.index, l.tok[k], "basis")));
      if (!is_canonical(t)) fail(l.no, "rho tuple not in non-decreasing order");
      size_t col = name_to_index(l, mindex, l.tok[1 + args + 1], "module");
      Vec v = parse_value(l, 1 + args + 3, h.field, mindex, m);
      Matrix& M = R.table[R.idx.rank(t)];
      for (size_t r = 0; r < m; ++r) M.at(r, col) = v[r];
    }
  }
  R.algebra = std::move(A);
  return R;
}

Representation load_representation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::Parse, "cannot open " + path);
  return parse_representation(in);
}

std::string serialize_representation(const Representation& R) {
  const NLieSuperalgebra& A = R.algebra;
  std::ostringstream out;
  out << "nsla-rep-v1\n";
  out << "field " << A.field.str() << "\n";
  out << "arity " << A.n << "\n";
  out << "alpha " << A.alpha << "\n";
  for (size_t i = 0; i < A.dim(); ++i)
    out << "basis " << A.names[i] << ' ' << (A.parities[i] ? "odd" : "even") << "\n";
  for (size_t j = 0; j < R.module_names.size(); ++j)
    out << "module " << R.module_names[j] << ' ' << (R.module_parities[j] ? "odd" : "even")
        << "\n";
  for_each_canonical(int(A.dim()), A.n, [&](const Tuple& t, size_t rank) {
    if (A.entry_is_zero(rank)) return;
    out << "bracket";
    for (int j : t) out << ' ' << A.names[size_t(j)];
    out << " = " << value_str(A.value(rank), A.names) << "\n";
  });
  size_t m = R.module_names.size();
  for_each_canonical(int(A.dim()), A.n - 1, [&](const Tuple& t, size_t rank) {
    const Matrix& M = R.table[rank];
    for (size_t col = 0; col < m; ++col) {
      Vec v = zero_vec(A.field, m);
      bool nonzero = false;
      for (size_t r = 0; r < m; ++r) {
        v[r] = M.at(r, col);
        nonzero = nonzero || !v[r].is_zero();
      }
      if (!nonzero) continue;
      out << "rho";
      for (int j : t) out << ' ' << A.names[size_t(j)];
      out << " on " << R.module_names[col] << " = " << value_str(v, R.module_names) << "\n";
    }
  });
  return out.str();
}

void save_representation(const Representation& R, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Err::Parse, "cannot write " + path);
  out << serialize_representation(R);
}

}  // namespace nsla
