// Copyright 2026 The mres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mres/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace mres::io {

namespace {

std::string path_join(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string path_join(const std::string& base, std::size_t i) {
  return base + "/" + std::to_string(i);
}

bool is_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// Renders "c*m" for a term with coefficient magnitude text c (empty for 1)
// and monomial text m (empty for 1).
std::string join_term(const std::string& c, const std::string& m) {
  if (m.empty()) return c.empty() ? "1" : c;
  if (c.empty()) return m;
  return c + "*" + m;
}

std::string monomial_text(std::span<const std::uint16_t> e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += names.at(v);
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

// Sign-separated sum of terms; neg[k] tells whether term k is negative and
// body[k] is its unsigned text.
std::string join_sum(const std::vector<bool>& neg, const std::vector<std::string>& body) {
  if (body.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < body.size(); ++k) {
    if (k == 0)
      out += neg[k] ? "-" + body[k] : body[k];
    else
      out += (neg[k] ? " - " : " + ") + body[k];
  }
  return out;
}

template <class C>
std::string number_text(const C& v) {
  return v.get_str();
}

template <class C>
int number_sign(const C& v) {
  return sgn(v);
}

template <class C>
std::string geometric_text(const MPoly<C>& p, const std::vector<std::string>& vars,
                           const ParamSpace* names) {
  std::vector<bool> neg;
  std::vector<std::string> body;
  for (std::size_t k = 0; k < p.size(); ++k) {
    std::string m = monomial_text(p.raw_exponents(k), vars);
    const C& c = p.coeff(k);
    if constexpr (std::is_same_v<C, ParamPoly>) {
      if (c.size() == 1) {
        std::string t = to_text(c, *names);
        bool n = t[0] == '-';
        if (n) t.erase(0, 1);
        neg.push_back(n);
        body.push_back(t == "1" ? join_term("", m) : join_term(t, m));
      } else {
        neg.push_back(false);
        body.push_back(join_term("(" + to_text(c, *names) + ")", m));
      }
    } else {
      neg.push_back(number_sign(c) < 0);
      C a = abs(c);
      body.push_back(join_term(a == 1 ? "" : number_text(a), m));
    }
  }
  return join_sum(neg, body);
}

}  // namespace

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Generic:
      return "generic";
    case Mode::Integer:
      return "integer";
    case Mode::Rational:
      return "rational";
  }
  return "generic";
}

Integer parse_integer(const std::string& s) {
  if (!is_integer_text(s)) throw ParseError("", "not an integer: '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  std::string ds = s.substr(slash + 1);
  if (!is_integer_text(ds) || ds[0] == '-' || ds[0] == '+')
    throw ParseError("", "not a rational: '" + s + "'");
  Integer den(ds, 10);
  if (den == 0) throw ParseError("", "zero denominator: '" + s + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

InputDocument parse_input(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("", "document must be a JSON object");

  InputDocument doc;
  if (!j.contains("degrees")) throw ParseError("/degrees", "missing");
  const Json& jd = j["degrees"];
  if (!jd.is_array() || jd.empty()) throw ParseError("/degrees", "must be a nonempty array");
  std::vector<int> degs;
  for (std::size_t i = 0; i < jd.size(); ++i) {
    if (!jd[i].is_number_integer() || jd[i].get<long long>() < 1 || jd[i].get<long long>() > 1000)
      throw ParseError(path_join("/degrees", i), "degree must be an integer in [1, 1000]");
    degs.push_back(jd[i].get<int>());
  }
  doc.degrees = DegreeSystem(degs);
  const int n = doc.degrees.n();

  std::string mode = "generic";
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw ParseError("/mode", "must be a string");
    mode = j["mode"].get<std::string>();
  }
  if (mode == "generic")
    doc.mode = Mode::Generic;
  else if (mode == "integer")
    doc.mode = Mode::Integer;
  else if (mode == "rational")
    doc.mode = Mode::Rational;
  else
    throw ParseError("/mode", "unknown mode '" + mode + "'");

  if (j.contains("t") && !j["t"].is_null()) {
    if (!j["t"].is_number_integer() || j["t"].get<long long>() < 0 ||
        j["t"].get<long long>() > 1000000)
      throw ParseError("/t", "must be a nonnegative integer");
    doc.t = j["t"].get<int>();
  }

  if (!j.contains("polys")) {
    if (doc.mode != Mode::Generic) throw ParseError("/polys", "required in " + mode + " mode");
    return doc;
  }
  const Json& jp = j["polys"];
  if (!jp.is_array() || jp.size() != static_cast<std::size_t>(n))
    throw ParseError("/polys", "must be an array of " + std::to_string(n) + " polynomials");
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const std::string pi = path_join("/polys", i);
    if (!jp[i].is_array() || jp[i].empty()) throw ParseError(pi, "must be a nonempty array of terms");
    std::vector<InputTerm> terms;
    for (std::size_t k = 0; k < jp[i].size(); ++k) {
      const std::string pk = path_join(pi, k);
      const Json& jt = jp[i][k];
      if (!jt.is_object()) throw ParseError(pk, "term must be an object");
      InputTerm term;
      if (!jt.contains("e")) throw ParseError(path_join(pk, "e"), "missing");
      const Json& je = jt["e"];
      if (!je.is_array() || je.size() != static_cast<std::size_t>(n))
        throw ParseError(path_join(pk, "e"), "must have " + std::to_string(n) + " exponents");
      for (std::size_t v = 0; v < je.size(); ++v) {
        if (!je[v].is_number_integer() || je[v].get<long long>() < 0 ||
            je[v].get<long long>() > 1000)
          throw ParseError(path_join(path_join(pk, "e"), v), "exponent must be a nonnegative integer");
        term.exps.push_back(je[v].get<int>());
      }
      if (total_degree(term.exps) != doc.degrees.d(static_cast<int>(i) + 1))
        throw ParseError(path_join(pk, "e"),
                         "term degree " + std::to_string(total_degree(term.exps)) +
                             " does not match declared degree " +
                             std::to_string(doc.degrees.d(static_cast<int>(i) + 1)));
      if (doc.mode != Mode::Generic) {
        if (!jt.contains("c") || !jt["c"].is_string())
          throw ParseError(path_join(pk, "c"), "coefficient must be a string");
        term.coeff = jt["c"].get<std::string>();
        try {
          if (doc.mode == Mode::Integer)
            parse_integer(term.coeff);
          else
            parse_rational(term.coeff);
        } catch (const ParseError& e) {
          throw ParseError(path_join(pk, "c"), e.what());
        }
      }
      terms.push_back(std::move(term));
    }
    doc.polys.push_back(std::move(terms));
  }
  return doc;
}

namespace {

template <class C>
PolySystem<C> numeric_system(const InputDocument& doc, C (*parse)(const std::string&)) {
  if (doc.polys.empty()) throw ParseError("/polys", "required for a numeric system");
  const int n = doc.degrees.n();
  std::vector<MPoly<C>> polys;
  for (std::size_t i = 0; i < doc.polys.size(); ++i) {
    std::vector<std::pair<ExpVec, C>> terms;
    for (const auto& t : doc.polys[i]) terms.emplace_back(t.exps, parse(t.coeff));
    auto p = MPoly<C>::from_terms(n, std::move(terms));
    if (p.is_zero()) throw ParseError(path_join("/polys", i), "polynomial is zero");
    polys.push_back(std::move(p));
  }
  return PolySystem<C>(doc.degrees, std::move(polys));
}

}  // namespace

PolySystem<Integer> integer_system(const InputDocument& doc) {
  if (doc.mode == Mode::Generic) throw ScalarKindMismatch("document is in generic mode");
  if (doc.mode == Mode::Rational) throw ScalarKindMismatch("document is in rational mode");
  return numeric_system<Integer>(doc, parse_integer);
}

PolySystem<Rational> rational_system(const InputDocument& doc) {
  if (doc.mode == Mode::Generic) throw ScalarKindMismatch("document is in generic mode");
  return numeric_system<Rational>(doc, parse_rational);
}

PolySystem<ParamPoly> parametric_system(const InputDocument& doc, ParamSpace* names) {
  if (doc.mode != Mode::Generic) throw ScalarKindMismatch("document is not in generic mode");
  PolySystem<ParamPoly> full = generic_system(doc.degrees, names);
  if (doc.polys.empty()) return full;
  const int n = doc.degrees.n();
  std::vector<MPoly<ParamPoly>> polys;
  for (std::size_t i = 0; i < doc.polys.size(); ++i) {
    std::set<ExpVec> keep;
    for (const auto& t : doc.polys[i]) keep.insert(t.exps);
    const auto& f = full.f(static_cast<int>(i) + 1);
    std::vector<std::pair<ExpVec, ParamPoly>> terms;
    for (std::size_t k = 0; k < f.size(); ++k)
      if (keep.count(f.exponents(k))) terms.emplace_back(f.exponents(k), f.coeff(k));
    polys.push_back(MPoly<ParamPoly>::from_terms(n, std::move(terms)));
  }
  return PolySystem<ParamPoly>(doc.degrees, std::move(polys));
}

std::string to_text(const Integer& v) { return v.get_str(); }
std::string to_text(const Rational& v) { return v.get_str(); }

std::string to_text(const ParamPoly& p, const ParamSpace& names) {
  if (p.nvars() > static_cast<int>(names.size()))
    throw VariableCountMismatch("parameter polynomial has more variables than names");
  std::vector<bool> neg;
  std::vector<std::string> body;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Integer& c = p.coeff(k);
    Integer a = abs(c);
    neg.push_back(sgn(c) < 0);
    body.push_back(join_term(a == 1 ? "" : a.get_str(), monomial_text(p.raw_exponents(k), names.names())));
  }
  return join_sum(neg, body);
}

std::string to_text(const MPoly<Integer>& p, const std::vector<std::string>& vars,
                    const ParamSpace* names) {
  return geometric_text(p, vars, names);
}
std::string to_text(const MPoly<Rational>& p, const std::vector<std::string>& vars) {
  return geometric_text(p, vars, nullptr);
}
std::string to_text(const MPoly<ParamPoly>& p, const std::vector<std::string>& vars,
                    const ParamSpace& names) {
  return geometric_text(p, vars, &names);
}

ParamPoly parse_param_poly(const std::string& s, const ParamSpace& names) {
  const int nv = static_cast<int>(names.size());
  std::vector<std::pair<ExpVec, Integer>> terms;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("", what + " at offset " + std::to_string(pos) + " in '" + s + "'");
  };
  skip_ws();
  if (s.substr(pos) == "0") return ParamPoly(nv);
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == s.size()) {
      if (first) throw fail("empty polynomial");
      break;
    }
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
      skip_ws();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Integer coeff(1);
    ExpVec e(static_cast<std::size_t>(nv), 0);
    bool factor_expected = true;
    while (factor_expected) {
      skip_ws();
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        std::size_t b = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        coeff *= Integer(s.substr(b, pos - b), 10);
      } else if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
        std::size_t b = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
          ++pos;
        std::string name = s.substr(b, pos - b);
        int idx = names.index_of(name);
        if (idx < 0) throw fail("unknown parameter '" + name + "'");
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          std::size_t pb = pos;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
          if (pb == pos) throw fail("expected exponent");
          power = std::stoi(s.substr(pb, pos - pb));
        }
        e[static_cast<std::size_t>(idx)] += power;
      } else {
        throw fail("expected a number or a parameter");
      }
      skip_ws();
      factor_expected = pos < s.size() && s[pos] == '*';
      if (factor_expected) ++pos;
    }
    terms.emplace_back(std::move(e), negative ? Integer(-coeff) : coeff);
  }
  return ParamPoly::from_terms(nv, std::move(terms));
}

std::vector<std::string> variable_names(int n, bool with_y) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("X" + std::to_string(i));
  if (with_y)
    for (int i = 1; i <= n; ++i) out.push_back("Y" + std::to_string(i));
  return out;
}

template <class C>
std::string scalar_text(const C& v, const ParamSpace* names) {
  if constexpr (std::is_same_v<C, ParamPoly>) {
    if (!names) throw InvalidArgument("parameter names required");
    return to_text(v, *names);
  } else {
    return to_text(v);
  }
}

template <class C>
C scalar_from_text(const std::string& s, const ParamSpace* names) {
  if constexpr (std::is_same_v<C, ParamPoly>) {
    if (!names) throw InvalidArgument("parameter names required");
    return parse_param_poly(s, *names);
  } else if constexpr (std::is_same_v<C, Integer>) {
    return parse_integer(s);
  } else {
    return parse_rational(s);
  }
}

template <class C>
Json poly_to_json(const MPoly<C>& p, const ParamSpace* names) {
  Json terms = Json::array();
  for (std::size_t k = 0; k < p.size(); ++k)
    terms.push_back({{"c", scalar_text(p.coeff(k), names)}, {"e", p.exponents(k)}});
  return terms;
}

template <class C>
MPoly<C> poly_from_json(const Json& j, int nvars, const ParamSpace* names) {
  if (!j.is_array()) throw ParseError("", "polynomial must be an array of terms");
  std::vector<std::pair<ExpVec, C>> terms;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const Json& t = j[k];
    if (!t.is_object() || !t.contains("c") || !t.contains("e") || !t["c"].is_string() ||
        !t["e"].is_array() || t["e"].size() != static_cast<std::size_t>(nvars))
      throw ParseError(path_join("", k), "malformed term");
    C c = scalar_from_text<C>(t["c"].get<std::string>(), names);
    if constexpr (std::is_same_v<C, ParamPoly>) c = c.lifted(static_cast<int>(names->size()));
    terms.emplace_back(t["e"].get<ExpVec>(), std::move(c));
  }
  return MPoly<C>::from_terms(nvars, std::move(terms));
}

template <class C>
Json matrix_to_json(const LabeledMatrix<C>& m, const ParamSpace* names) {
  Json rows = Json::array(), cols = Json::array(), entries = Json::array();
  for (const auto& l : m.row_labels) rows.push_back(l.to_string());
  for (const auto& l : m.col_labels) cols.push_back(l.to_string());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_text(m.entries(i, j), names));
    entries.push_back(std::move(row));
  }
  Json out;
  out["size"] = {m.rows(), m.cols()};
  out["rows"] = std::move(rows);
  out["cols"] = std::move(cols);
  out["blocks"] = {{"delta_cols", m.blocks.delta_cols},
                   {"sylvester_cols", m.blocks.sylvester_cols},
                   {"top_rows", m.blocks.top_rows},
                   {"dual_rows", m.blocks.dual_rows}};
  out["entries"] = std::move(entries);
  return out;
}

template <class C>
LabeledMatrix<C> matrix_from_json(const Json& j, const ParamSpace* names) {
  LabeledMatrix<C> m;
  try {
    for (const auto& s : j.at("rows")) m.row_labels.push_back(Label::parse(s.get<std::string>()));
    for (const auto& s : j.at("cols")) m.col_labels.push_back(Label::parse(s.get<std::string>()));
    const Json& b = j.at("blocks");
    m.blocks.delta_cols = b.at("delta_cols").get<std::size_t>();
    m.blocks.sylvester_cols = b.at("sylvester_cols").get<std::size_t>();
    m.blocks.top_rows = b.at("top_rows").get<std::size_t>();
    m.blocks.dual_rows = b.at("dual_rows").get<std::size_t>();
    const Json& e = j.at("entries");
    m.entries = Matrix<C>(m.row_labels.size(), m.col_labels.size());
    if (e.size() != m.rows()) throw ParseError("/entries", "row count mismatch");
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (e[r].size() != m.cols()) throw ParseError(path_join("/entries", r), "column count mismatch");
      for (std::size_t c = 0; c < m.cols(); ++c) {
        C v = scalar_from_text<C>(e[r][c].get<std::string>(), names);
        if constexpr (std::is_same_v<C, ParamPoly>)
          if (!v.is_zero()) v = v.lifted(static_cast<int>(names->size()));
        m.entries(r, c) = std::move(v);
      }
    }
  } catch (const Json::exception& ex) {
    throw ParseError("", std::string("malformed matrix: ") + ex.what());
  }
  m.validate();
  return m;
}

#define MRES_INSTANTIATE_IO(C)                                                    \
  template std::string scalar_text(const C&, const ParamSpace*);                  \
  template C scalar_from_text(const std::string&, const ParamSpace*);             \
  template Json poly_to_json(const MPoly<C>&, const ParamSpace*);                 \
  template MPoly<C> poly_from_json(const Json&, int, const ParamSpace*);          \
  template Json matrix_to_json(const LabeledMatrix<C>&, const ParamSpace*);       \
  template LabeledMatrix<C> matrix_from_json(const Json&, const ParamSpace*);

MRES_INSTANTIATE_IO(Integer)
MRES_INSTANTIATE_IO(Rational)
MRES_INSTANTIATE_IO(ParamPoly)

}  // namespace mres::io
