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

// Input documents, text rendering of exact values, and JSON encoding of
// results.
//
// Input schema:
//   {"degrees": [d1, ..., dn],
//    "mode": "generic" | "integer" | "rational",
//    "polys": [[{"c": "<coefficient>", "e": [exponents]}, ...], ...],
//    "t": <int, optional>}
// In generic mode "polys" may be omitted (full generic system); when given,
// its exponents select the monomials that receive a parameter and "c" is
// ignored.
//
// Parameter polynomials print as terms ascending in the canonical monomial
// order on parameter exponents, e.g. "a_1_1*a_2_2 - 3*a_1_2^2".

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mres/bezoutian.hpp"
#include "mres/corering.hpp"
#include "mres/linalg.hpp"

namespace mres::io {

using Json = nlohmann::ordered_json;

enum class Mode { Generic, Integer, Rational };

std::string mode_name(Mode m);

struct InputTerm {
  std::string coeff;
  ExpVec exps;
};

struct InputDocument {
  DegreeSystem degrees{std::vector<int>{1}};
  Mode mode = Mode::Generic;
  std::vector<std::vector<InputTerm>> polys;  // empty: full generic system
  std::optional<int> t;
};

// Throws ParseError with a JSON-pointer-like field path.
InputDocument parse_input(std::string_view text);

PolySystem<Integer> integer_system(const InputDocument& doc);
PolySystem<Rational> rational_system(const InputDocument& doc);
// Parameters are named canonically a_i_k over all degree-d_i monomials.
PolySystem<ParamPoly> parametric_system(const InputDocument& doc, ParamSpace* names);

// Text of exact values.
std::string to_text(const Integer& v);
std::string to_text(const Rational& v);
std::string to_text(const ParamPoly& p, const ParamSpace& names);
// Geometric polynomials with variable names; coefficients that are not a
// single number are parenthesized.
std::string to_text(const MPoly<Integer>& p, const std::vector<std::string>& vars,
                    const ParamSpace* names = nullptr);
std::string to_text(const MPoly<Rational>& p, const std::vector<std::string>& vars);
std::string to_text(const MPoly<ParamPoly>& p, const std::vector<std::string>& vars,
                    const ParamSpace& names);

Integer parse_integer(const std::string& s);
Rational parse_rational(const std::string& s);
// Inverse of to_text for parameter polynomials; throws ParseError.
ParamPoly parse_param_poly(const std::string& s, const ParamSpace& names);

// Geometric variable names X1..Xn, optionally followed by Y1..Yn.
std::vector<std::string> variable_names(int n, bool with_y);

// Polynomials as term lists [{"c": text, "e": [...]}].
template <class C>
Json poly_to_json(const MPoly<C>& p, const ParamSpace* names);
template <class C>
MPoly<C> poly_from_json(const Json& j, int nvars, const ParamSpace* names);

// {"rows": [labels], "cols": [labels], "blocks": {...}, "entries": [[text]]}.
template <class C>
Json matrix_to_json(const LabeledMatrix<C>& m, const ParamSpace* names);
template <class C>
LabeledMatrix<C> matrix_from_json(const Json& j, const ParamSpace* names);

template <class C>
std::string scalar_text(const C& v, const ParamSpace* names);
template <class C>
C scalar_from_text(const std::string& s, const ParamSpace* names);

}  // namespace mres::io
