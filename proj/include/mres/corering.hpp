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

// Exact coefficient rings and sparse multivariate polynomials.
//
// Three coefficient rings are used throughout: arbitrary-precision integers,
// normalized rationals, and ParamPoly, the ring Z[a] of integer polynomials in
// named parameters (the generic coefficients of an input system). MPoly<C> is
// a sparse polynomial in the geometric variables with coefficients in C.
//
// Terms are stored in ascending canonical order (see monomial_cmp) with no
// zero coefficients, so structural equality is polynomial equality.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mres/errors.hpp"

namespace mres {

using Integer = mpz_class;
using Rational = mpq_class;
using ExpVec = std::vector<int>;

// Canonical monomial order: total degree ascending, ties broken by
// lexicographic order descending, so X1 < X2 < ... < X1^2 < X1*X2 < ...
// Throws VariableCountMismatch on length mismatch.
std::strong_ordering monomial_cmp(std::span<const int> a, std::span<const int> b);

int total_degree(std::span<const int> e);

// All exponent vectors of the given total degree, sorted by monomial_cmp.
// Empty for negative degree.
std::vector<ExpVec> monomials_of_degree(int nvars, int degree);

// ---------------------------------------------------------------------------
// Coefficient ring operations. Every ring used as a coefficient provides
// is_zero, exact_div, add_product and sub_product overloads.

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

Integer exact_div(const Integer& a, const Integer& b);
Rational exact_div(const Rational& a, const Rational& b);

inline void add_product(Integer& acc, const Integer& a, const Integer& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void sub_product(Integer& acc, const Integer& a, const Integer& b) {
  mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void add_product(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }
inline void sub_product(Rational& acc, const Rational& a, const Rational& b) { acc -= a * b; }

template <class C>
class SparsePoly;

template <class C>
struct RingTraits;

template <>
struct RingTraits<Integer> {
  static Integer zero() { return Integer(0); }
  static Integer one() { return Integer(1); }
  static Integer from_int(long v) { return Integer(v); }
  static constexpr bool is_field = false;
};

template <>
struct RingTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long v) { return Rational(v); }
  static constexpr bool is_field = true;
};

// ---------------------------------------------------------------------------

template <class C>
class SparsePoly {
 public:
  using Coeff = C;
  using Exp = std::uint16_t;

  // The zero polynomial with no variables. Polynomials with zero variables
  // act as constants and are lifted to the other operand's variable count.
  SparsePoly() = default;
  explicit SparsePoly(int nvars);

  static SparsePoly constant(int nvars, C c);
  static SparsePoly term(std::span<const int> exps, C c);
  static SparsePoly variable(int nvars, int index);
  // Builds a polynomial from unordered terms; equal monomials are combined.
  static SparsePoly from_terms(int nvars, std::vector<std::pair<ExpVec, C>> terms);

  int nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept;

  ExpVec exponents(std::size_t k) const;
  std::span<const Exp> raw_exponents(std::size_t k) const {
    return {exps_.data() + k * stride() + 1, static_cast<std::size_t>(nvars_)};
  }
  int term_degree(std::size_t k) const { return exps_[k * stride()]; }
  const C& coeff(std::size_t k) const { return coeffs_[k]; }
  C coeff_of(std::span<const int> exps) const;

  // Maximal total degree, -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  // Maximal degree of a term restricted to the given variables.
  int degree_in(std::span<const int> vars) const;
  int min_degree_in(std::span<const int> vars) const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    return SparsePoly::multiply(a, b);
  }
  bool operator==(const SparsePoly& o) const;

  SparsePoly scaled(const C& c) const;
  // Returns this polynomial in nvars variables; only valid when the current
  // variable count is 0 or already nvars.
  SparsePoly lifted(int nvars) const;

  static SparsePoly multiply(const SparsePoly& a, const SparsePoly& b);
  // Exact quotient a / b. Throws InexactDivision if b does not divide a.
  static SparsePoly divide(const SparsePoly& a, const SparsePoly& b);

 private:
  std::size_t stride() const noexcept { return static_cast<std::size_t>(nvars_) + 1; }
  void push_term(const Exp* e, C c);
  static int compare_raw(const Exp* a, const Exp* b, int nvars) noexcept;
  static void unify(SparsePoly& a, SparsePoly& b);
  void align_with(const SparsePoly& o);

  int nvars_ = 0;
  std::vector<Exp> exps_;  // stride nvars_+1 per term, slot 0 holds the degree
  std::vector<C> coeffs_;
};

template <class C>
bool is_zero(const SparsePoly<C>& p) {
  return p.is_zero();
}
template <class C>
SparsePoly<C> exact_div(const SparsePoly<C>& a, const SparsePoly<C>& b) {
  return SparsePoly<C>::divide(a, b);
}
template <class C>
void add_product(SparsePoly<C>& acc, const SparsePoly<C>& a, const SparsePoly<C>& b) {
  acc += a * b;
}
template <class C>
void sub_product(SparsePoly<C>& acc, const SparsePoly<C>& a, const SparsePoly<C>& b) {
  acc -= a * b;
}

template <class C>
struct RingTraits<SparsePoly<C>> {
  static SparsePoly<C> zero() { return SparsePoly<C>(); }
  static SparsePoly<C> one() { return SparsePoly<C>::constant(0, RingTraits<C>::one()); }
  static SparsePoly<C> from_int(long v) {
    return SparsePoly<C>::constant(0, RingTraits<C>::from_int(v));
  }
  static constexpr bool is_field = false;
};

// The generic-coefficient ring Z[a].
using ParamPoly = SparsePoly<Integer>;

template <class C>
using MPoly = SparsePoly<C>;

// ---------------------------------------------------------------------------
// Parameters

// Names of the parameters of a ParamPoly, indexed by variable position.
class ParamSpace {
 public:
  ParamSpace() = default;
  explicit ParamSpace(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  // -1 if absent.
  int index_of(const std::string& name) const;
  ParamPoly variable(const std::string& name) const;

  bool operator==(const ParamSpace& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

// Canonical generic parameter name: polynomial i (1-based), exponent rank k
// (1-based, under monomial_cmp among the degree-d_i monomials).
std::string generic_param_name(int poly, int rank);

// Evaluates p with parameter j set to values[j].
Integer specialize(const ParamPoly& p, std::span<const Integer> values);
// Throws MissingParameter if a parameter occurring in p is unassigned.
Integer specialize(const ParamPoly& p, const ParamSpace& space,
                   const std::map<std::string, Integer>& assignment);
MPoly<Integer> specialize(const MPoly<ParamPoly>& p, const ParamSpace& space,
                          const std::map<std::string, Integer>& assignment);
MPoly<Integer> specialize(const MPoly<ParamPoly>& p, std::span<const Integer> values);

// ---------------------------------------------------------------------------
// Scalar: a runtime-tagged exact value used at module boundaries.

class Scalar {
 public:
  enum class Kind { Integer, Rational, Parametric };

  Scalar() : value_(Integer(0)) {}
  Scalar(Integer v) : value_(std::move(v)) {}
  Scalar(Rational v);
  Scalar(ParamPoly v) : value_(std::move(v)) {}

  Kind kind() const noexcept { return static_cast<Kind>(value_.index()); }
  const Integer& as_integer() const;
  const Rational& as_rational() const;
  const ParamPoly& as_param() const;

  bool is_zero() const;
  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  // Exact division; throws InexactDivision when not exact.
  friend Scalar exact_div(const Scalar& a, const Scalar& b);
  bool operator==(const Scalar& o) const;

 private:
  std::variant<Integer, Rational, ParamPoly> value_;
};

std::string kind_name(Scalar::Kind k);

}  // namespace mres
