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

#include <type_traits>

#include "mres/corering.hpp"

namespace mres {

namespace {

[[noreturn]] void kind_mismatch(Scalar::Kind a, Scalar::Kind b) {
  throw ScalarKindMismatch("cannot combine " + kind_name(a) + " and " + kind_name(b) +
                           " scalars");
}

template <class F>
Scalar binary(const Scalar& a, const Scalar& b, F f) {
  if (a.kind() != b.kind()) kind_mismatch(a.kind(), b.kind());
  switch (a.kind()) {
    case Scalar::Kind::Integer:
      return Scalar(f(a.as_integer(), b.as_integer()));
    case Scalar::Kind::Rational:
      return Scalar(f(a.as_rational(), b.as_rational()));
    case Scalar::Kind::Parametric:
      return Scalar(f(a.as_param(), b.as_param()));
  }
  throw Error("unreachable scalar kind");
}

}  // namespace

std::string kind_name(Scalar::Kind k) {
  switch (k) {
    case Scalar::Kind::Integer:
      return "integer";
    case Scalar::Kind::Rational:
      return "rational";
    case Scalar::Kind::Parametric:
      return "parametric";
  }
  return "unknown";
}

Scalar::Scalar(Rational v) {
  v.canonicalize();
  value_ = std::move(v);
}

const Integer& Scalar::as_integer() const {
  if (kind() != Kind::Integer) kind_mismatch(kind(), Kind::Integer);
  return std::get<Integer>(value_);
}

const Rational& Scalar::as_rational() const {
  if (kind() != Kind::Rational) kind_mismatch(kind(), Kind::Rational);
  return std::get<Rational>(value_);
}

const ParamPoly& Scalar::as_param() const {
  if (kind() != Kind::Parametric) kind_mismatch(kind(), Kind::Parametric);
  return std::get<ParamPoly>(value_);
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { return mres::is_zero(v); }, value_);
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& v) { return Scalar(std::decay_t<decltype(v)>(-v)); }, value_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return std::decay_t<decltype(x)>(x + y); });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return std::decay_t<decltype(x)>(x - y); });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return std::decay_t<decltype(x)>(x * y); });
}

Scalar exact_div(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return mres::exact_div(x, y); });
}

bool Scalar::operator==(const Scalar& o) const {
  if (kind() != o.kind()) return false;
  return value_ == o.value_;
}

}  // namespace mres
