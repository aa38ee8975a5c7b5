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

#include <algorithm>

#include "mres/corering.hpp"

namespace mres {

std::strong_ordering monomial_cmp(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size())
    throw VariableCountMismatch("monomial_cmp: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + " variables");
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da <=> db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

int total_degree(std::span<const int> e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

std::vector<ExpVec> monomials_of_degree(int nvars, int degree) {
  std::vector<ExpVec> out;
  if (degree < 0 || nvars < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  // Lex-descending enumeration: first exponent runs from degree down to 0.
  ExpVec e(nvars, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == nvars - 1) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, degree);
  return out;
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (sgn(b) == 0) throw InvalidArgument("division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw InexactDivision("integer division leaves a remainder");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rational exact_div(const Rational& a, const Rational& b) {
  if (sgn(b) == 0) throw InvalidArgument("division by zero");
  return Rational(a / b);
}

ParamSpace::ParamSpace(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<int>(i)).second)
      throw InvalidArgument("duplicate parameter name '" + names_[i] + "'");
  }
}

int ParamSpace::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

ParamPoly ParamSpace::variable(const std::string& name) const {
  int i = index_of(name);
  if (i < 0) throw MissingParameter("unknown parameter '" + name + "'");
  return ParamPoly::variable(static_cast<int>(size()), i);
}

std::string generic_param_name(int poly, int rank) {
  return "a_" + std::to_string(poly) + "_" + std::to_string(rank);
}

Integer specialize(const ParamPoly& p, std::span<const Integer> values) {
  if (p.nvars() > static_cast<int>(values.size()))
    throw MissingParameter("specialize: " + std::to_string(values.size()) + " values for " +
                           std::to_string(p.nvars()) + " parameters");
  Integer sum = 0, term, pw;
  for (std::size_t k = 0; k < p.size(); ++k) {
    term = p.coeff(k);
    auto e = p.raw_exponents(k);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(pw.get_mpz_t(), values[i].get_mpz_t(), e[i]);
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

namespace {

std::vector<Integer> assignment_vector(const ParamPoly& p, const ParamSpace& space,
                                       const std::map<std::string, Integer>& assignment) {
  std::vector<Integer> v(space.size(), Integer(0));
  std::vector<bool> used(space.size(), false);
  for (std::size_t k = 0; k < p.size(); ++k) {
    auto e = p.raw_exponents(k);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) used[i] = true;
  }
  for (std::size_t i = 0; i < space.size(); ++i) {
    auto it = assignment.find(space.name(i));
    if (it != assignment.end())
      v[i] = it->second;
    else if (used[i])
      throw MissingParameter("no value for parameter '" + space.name(i) + "'");
  }
  return v;
}

}  // namespace

Integer specialize(const ParamPoly& p, const ParamSpace& space,
                   const std::map<std::string, Integer>& assignment) {
  if (p.nvars() != 0 && p.nvars() != static_cast<int>(space.size()))
    throw VariableCountMismatch("parameter polynomial does not match parameter space");
  return specialize(p, assignment_vector(p, space, assignment));
}

MPoly<Integer> specialize(const MPoly<ParamPoly>& p, std::span<const Integer> values) {
  std::vector<std::pair<ExpVec, Integer>> terms;
  terms.reserve(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    Integer c = specialize(p.coeff(k), values);
    if (sgn(c) != 0) terms.emplace_back(p.exponents(k), std::move(c));
  }
  return MPoly<Integer>::from_terms(p.nvars(), std::move(terms));
}

MPoly<Integer> specialize(const MPoly<ParamPoly>& p, const ParamSpace& space,
                          const std::map<std::string, Integer>& assignment) {
  ParamPoly all(static_cast<int>(space.size()));
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.coeff(k).nvars() != 0 && p.coeff(k).nvars() != static_cast<int>(space.size()))
      throw VariableCountMismatch("coefficient does not match parameter space");
    for (std::size_t m = 0; m < p.coeff(k).size(); ++m) {
      ExpVec e(space.size(), 0);
      auto raw = p.coeff(k).raw_exponents(m);
      std::copy(raw.begin(), raw.end(), e.begin());
      all += ParamPoly::term(e, Integer(1));
    }
  }
  return specialize(p, assignment_vector(all, space, assignment));
}

}  // namespace mres
