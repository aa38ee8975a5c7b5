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
#include <numeric>

#include "mres/corering.hpp"

namespace mres {

namespace {

constexpr std::uint32_t kMaxExp = 0xffff;

}  // namespace

template <class C>
SparsePoly<C>::SparsePoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw InvalidArgument("negative variable count");
}

template <class C>
SparsePoly<C> SparsePoly<C>::constant(int nvars, C c) {
  SparsePoly p(nvars);
  if (mres::is_zero(c)) return p;
  std::vector<Exp> e(p.stride(), 0);
  p.push_term(e.data(), std::move(c));
  return p;
}

template <class C>
SparsePoly<C> SparsePoly<C>::term(std::span<const int> exps, C c) {
  SparsePoly p(static_cast<int>(exps.size()));
  if (mres::is_zero(c)) return p;
  std::vector<Exp> e(p.stride(), 0);
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || static_cast<std::uint32_t>(exps[i]) > kMaxExp)
      throw InvalidArgument("exponent out of range");
    e[i + 1] = static_cast<Exp>(exps[i]);
    deg += static_cast<std::uint32_t>(exps[i]);
  }
  if (deg > kMaxExp) throw InvalidArgument("total degree out of range");
  e[0] = static_cast<Exp>(deg);
  p.push_term(e.data(), std::move(c));
  return p;
}

template <class C>
SparsePoly<C> SparsePoly<C>::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw InvalidArgument("variable index out of range");
  ExpVec e(nvars, 0);
  e[index] = 1;
  return term(e, RingTraits<C>::one());
}

template <class C>
SparsePoly<C> SparsePoly<C>::from_terms(int nvars, std::vector<std::pair<ExpVec, C>> terms) {
  SparsePoly p(nvars);
  for (const auto& [e, c] : terms)
    if (static_cast<int>(e.size()) != nvars)
      throw VariableCountMismatch("term has " + std::to_string(e.size()) +
                                  " exponents, expected " + std::to_string(nvars));
  std::vector<std::size_t> order(terms.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return monomial_cmp(terms[a].first, terms[b].first) < 0;
  });
  std::size_t k = 0;
  while (k < order.size()) {
    C acc = std::move(terms[order[k]].second);
    std::size_t m = k + 1;
    while (m < order.size() && monomial_cmp(terms[order[m]].first, terms[order[k]].first) == 0) {
      acc += terms[order[m]].second;
      ++m;
    }
    if (!mres::is_zero(acc)) {
      SparsePoly t = term(terms[order[k]].first, std::move(acc));
      p.push_term(t.exps_.data(), std::move(t.coeffs_[0]));
    }
    k = m;
  }
  return p;
}

template <class C>
bool SparsePoly<C>::is_constant() const noexcept {
  return coeffs_.empty() || (coeffs_.size() == 1 && exps_[0] == 0);
}

template <class C>
ExpVec SparsePoly<C>::exponents(std::size_t k) const {
  auto raw = raw_exponents(k);
  return ExpVec(raw.begin(), raw.end());
}

template <class C>
C SparsePoly<C>::coeff_of(std::span<const int> exps) const {
  if (static_cast<int>(exps.size()) != nvars_)
    throw VariableCountMismatch("coeff_of: exponent length mismatch");
  std::vector<Exp> key(stride());
  int deg = 0;
  for (int i = 0; i < nvars_; ++i) {
    if (exps[i] < 0 || static_cast<std::uint32_t>(exps[i]) > kMaxExp) return RingTraits<C>::zero();
    key[i + 1] = static_cast<Exp>(exps[i]);
    deg += exps[i];
  }
  if (deg > static_cast<int>(kMaxExp)) return RingTraits<C>::zero();
  key[0] = static_cast<Exp>(deg);
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    int c = compare_raw(exps_.data() + mid * stride(), key.data(), nvars_);
    if (c == 0) return coeffs_[mid];
    if (c < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return RingTraits<C>::zero();
}

template <class C>
int SparsePoly<C>::degree() const noexcept {
  return coeffs_.empty() ? -1 : term_degree(size() - 1);
}

template <class C>
bool SparsePoly<C>::is_homogeneous() const noexcept {
  return coeffs_.empty() || term_degree(0) == term_degree(size() - 1);
}

template <class C>
int SparsePoly<C>::degree_in(std::span<const int> vars) const {
  int best = -1;
  for (std::size_t k = 0; k < size(); ++k) {
    int d = 0;
    for (int v : vars) d += exps_[k * stride() + 1 + v];
    best = std::max(best, d);
  }
  return best;
}

template <class C>
int SparsePoly<C>::min_degree_in(std::span<const int> vars) const {
  int best = -1;
  for (std::size_t k = 0; k < size(); ++k) {
    int d = 0;
    for (int v : vars) d += exps_[k * stride() + 1 + v];
    best = best < 0 ? d : std::min(best, d);
  }
  return best;
}

template <class C>
int SparsePoly<C>::compare_raw(const Exp* a, const Exp* b, int nvars) noexcept {
  if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
  for (int i = 1; i <= nvars; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

template <class C>
void SparsePoly<C>::push_term(const Exp* e, C c) {
  exps_.insert(exps_.end(), e, e + stride());
  coeffs_.push_back(std::move(c));
}

template <class C>
SparsePoly<C> SparsePoly<C>::lifted(int nvars) const {
  if (nvars == nvars_) return *this;
  if (nvars_ != 0)
    throw VariableCountMismatch("cannot lift a polynomial in " + std::to_string(nvars_) +
                                " variables to " + std::to_string(nvars));
  SparsePoly p(nvars);
  if (!coeffs_.empty()) {
    std::vector<Exp> e(p.stride(), 0);
    p.push_term(e.data(), coeffs_[0]);
  }
  return p;
}

template <class C>
void SparsePoly<C>::align_with(const SparsePoly& o) {
  if (nvars_ == o.nvars_) return;
  if (nvars_ == 0) {
    *this = lifted(o.nvars_);
    return;
  }
  if (o.nvars_ == 0) return;
  throw VariableCountMismatch("variable count mismatch: " + std::to_string(nvars_) + " vs " +
                              std::to_string(o.nvars_));
}

template <class C>
void SparsePoly<C>::unify(SparsePoly& a, SparsePoly& b) {
  a.align_with(b);
  b.align_with(a);
}

template <class C>
SparsePoly<C> SparsePoly<C>::operator-() const {
  SparsePoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

template <class C>
SparsePoly<C>& SparsePoly<C>::operator+=(const SparsePoly& o) {
  if (o.is_zero()) {
    align_with(o);
    return *this;
  }
  SparsePoly rhs = o;
  unify(*this, rhs);
  if (is_zero()) {
    *this = std::move(rhs);
    return *this;
  }
  SparsePoly out(nvars_);
  out.exps_.reserve(exps_.size() + rhs.exps_.size());
  out.coeffs_.reserve(size() + rhs.size());
  std::size_t i = 0, j = 0;
  const std::size_t s = stride();
  while (i < size() || j < rhs.size()) {
    int c;
    if (i == size())
      c = 1;
    else if (j == rhs.size())
      c = -1;
    else
      c = compare_raw(exps_.data() + i * s, rhs.exps_.data() + j * s, nvars_);
    if (c < 0) {
      out.push_term(exps_.data() + i * s, std::move(coeffs_[i]));
      ++i;
    } else if (c > 0) {
      out.push_term(rhs.exps_.data() + j * s, std::move(rhs.coeffs_[j]));
      ++j;
    } else {
      C sum = std::move(coeffs_[i]);
      sum += rhs.coeffs_[j];
      if (!mres::is_zero(sum)) out.push_term(exps_.data() + i * s, std::move(sum));
      ++i;
      ++j;
    }
  }
  *this = std::move(out);
  return *this;
}

template <class C>
SparsePoly<C>& SparsePoly<C>::operator-=(const SparsePoly& o) {
  return *this += -o;
}

template <class C>
SparsePoly<C>& SparsePoly<C>::operator*=(const SparsePoly& o) {
  *this = multiply(*this, o);
  return *this;
}

template <class C>
bool SparsePoly<C>::operator==(const SparsePoly& o) const {
  if (is_zero() && o.is_zero()) return true;
  if (nvars_ != o.nvars_) {
    if (nvars_ == 0 || o.nvars_ == 0) {
      SparsePoly a = *this, b = o;
      unify(a, b);
      return a == b;
    }
    return false;
  }
  return exps_ == o.exps_ && coeffs_ == o.coeffs_;
}

template <class C>
SparsePoly<C> SparsePoly<C>::scaled(const C& c) const {
  SparsePoly r(nvars_);
  if (mres::is_zero(c)) return r;
  r.exps_ = exps_;
  r.coeffs_.reserve(size());
  for (const auto& x : coeffs_) r.coeffs_.push_back(x * c);
  // Integral domain: no product of nonzero elements vanishes.
  return r;
}

// Johnson's heap multiplication. Each row i of a keeps at most one entry in
// the heap; products come out in ascending order.
template <class C>
SparsePoly<C> SparsePoly<C>::multiply(const SparsePoly& a_in, const SparsePoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) {
    int nv = a_in.nvars_ ? a_in.nvars_ : b_in.nvars_;
    if (a_in.nvars_ && b_in.nvars_ && a_in.nvars_ != b_in.nvars_)
      throw VariableCountMismatch("variable count mismatch in product");
    return SparsePoly(nv);
  }
  SparsePoly a = a_in, b = b_in;
  unify(a, b);
  const int nv = a.nvars_;
  const std::size_t s = a.stride();
  const std::size_t m = a.size(), l = b.size();
  if (m > l) return multiply(b, a);

  SparsePoly out(nv);
  if (m == 1 && a.exps_[0] == 0) {  // constant times polynomial
    out.exps_ = b.exps_;
    for (const auto& c : b.coeffs_) out.coeffs_.push_back(a.coeffs_[0] * c);
    return out;
  }

  std::vector<Exp> pool(m * s);
  std::vector<std::size_t> jpos(m, 0);
  auto set_product = [&](std::size_t i, std::size_t j) {
    const Exp* x = a.exps_.data() + i * s;
    const Exp* y = b.exps_.data() + j * s;
    Exp* z = pool.data() + i * s;
    for (std::size_t k = 0; k < s; ++k) {
      std::uint32_t v = static_cast<std::uint32_t>(x[k]) + y[k];
      if (v > kMaxExp) throw InvalidArgument("exponent overflow in product");
      z[k] = static_cast<Exp>(v);
    }
  };
  auto greater = [&](std::size_t i, std::size_t j) {
    return compare_raw(pool.data() + i * s, pool.data() + j * s, nv) > 0;
  };
  std::vector<std::size_t> heap;
  heap.reserve(m);
  set_product(0, 0);
  heap.push_back(0);
  std::vector<Exp> cur(s);
  out.exps_.reserve(s * (m + l));
  while (!heap.empty()) {
    std::copy_n(pool.data() + heap.front() * s, s, cur.data());
    C acc = RingTraits<C>::zero();
    while (!heap.empty() && compare_raw(pool.data() + heap.front() * s, cur.data(), nv) == 0) {
      std::pop_heap(heap.begin(), heap.end(), greater);
      std::size_t i = heap.back();
      heap.pop_back();
      std::size_t j = jpos[i];
      add_product(acc, a.coeffs_[i], b.coeffs_[j]);
      if (j == 0 && i + 1 < m) {
        jpos[i + 1] = 0;
        set_product(i + 1, 0);
        heap.push_back(i + 1);
        std::push_heap(heap.begin(), heap.end(), greater);
      }
      if (j + 1 < l) {
        jpos[i] = j + 1;
        set_product(i, j + 1);
        heap.push_back(i);
        std::push_heap(heap.begin(), heap.end(), greater);
      }
    }
    if (!mres::is_zero(acc)) out.push_term(cur.data(), std::move(acc));
  }
  return out;
}

// Exact division in the style of Monagan and Pearce: quotient terms are
// produced from the top, and the products quotient*divisor are merged lazily
// through a heap holding at most one entry per quotient term.
template <class C>
SparsePoly<C> SparsePoly<C>::divide(const SparsePoly& a_in, const SparsePoly& b_in) {
  if (b_in.is_zero()) throw InvalidArgument("division by zero polynomial");
  SparsePoly a = a_in, b = b_in;
  unify(a, b);
  const int nv = a.nvars_;
  const std::size_t s = a.stride();
  if (a.is_zero()) return SparsePoly(nv);
  const std::size_t l = b.size();
  // Divisor terms in descending order: index j maps to l-1-j.
  auto bexp = [&](std::size_t j) { return b.exps_.data() + (l - 1 - j) * s; };
  auto bcoeff = [&](std::size_t j) -> const C& { return b.coeffs_[l - 1 - j]; };
  const Exp* lead = bexp(0);

  if (l == 1) {
    SparsePoly out(nv);
    out.exps_.resize(a.exps_.size());
    out.coeffs_.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      const Exp* e = a.exps_.data() + k * s;
      for (std::size_t v = 0; v < s; ++v) {
        if (e[v] < lead[v]) throw InexactDivision("monomial not divisible by divisor");
        out.exps_[k * s + v] = static_cast<Exp>(e[v] - lead[v]);
      }
      out.coeffs_.push_back(exact_div(a.coeffs_[k], bcoeff(0)));
    }
    return out;
  }

  std::vector<Exp> qexps;
  std::vector<C> qcoeffs;
  std::vector<Exp> pool;
  std::vector<std::size_t> jpos;
  auto set_product = [&](std::size_t i, std::size_t j) {
    const Exp* x = qexps.data() + i * s;
    const Exp* y = bexp(j);
    Exp* z = pool.data() + i * s;
    for (std::size_t k = 0; k < s; ++k) z[k] = static_cast<Exp>(x[k] + y[k]);
  };
  auto less = [&](std::size_t i, std::size_t j) {
    return compare_raw(pool.data() + i * s, pool.data() + j * s, nv) < 0;
  };
  std::vector<std::size_t> heap;
  std::vector<Exp> cur(s);
  std::ptrdiff_t k = static_cast<std::ptrdiff_t>(a.size()) - 1;
  while (k >= 0 || !heap.empty()) {
    const Exp* top = heap.empty() ? nullptr : pool.data() + heap.front() * s;
    const Exp* dividend = k >= 0 ? a.exps_.data() + static_cast<std::size_t>(k) * s : nullptr;
    if (top && (!dividend || compare_raw(top, dividend, nv) > 0))
      std::copy_n(top, s, cur.data());
    else
      std::copy_n(dividend, s, cur.data());
    C acc = RingTraits<C>::zero();
    if (dividend && compare_raw(dividend, cur.data(), nv) == 0) {
      acc = a.coeffs_[static_cast<std::size_t>(k)];
      --k;
    }
    while (!heap.empty() && compare_raw(pool.data() + heap.front() * s, cur.data(), nv) == 0) {
      std::pop_heap(heap.begin(), heap.end(), less);
      std::size_t i = heap.back();
      heap.pop_back();
      std::size_t j = jpos[i];
      sub_product(acc, qcoeffs[i], bcoeff(j));
      if (j + 1 < l) {
        jpos[i] = j + 1;
        set_product(i, j + 1);
        heap.push_back(i);
        std::push_heap(heap.begin(), heap.end(), less);
      }
    }
    if (mres::is_zero(acc)) continue;
    for (std::size_t v = 0; v < s; ++v)
      if (cur[v] < lead[v]) throw InexactDivision("polynomial division leaves a remainder");
    std::size_t qi = qcoeffs.size();
    for (std::size_t v = 0; v < s; ++v) qexps.push_back(static_cast<Exp>(cur[v] - lead[v]));
    qcoeffs.push_back(exact_div(acc, bcoeff(0)));
    pool.resize(qexps.size());
    jpos.push_back(1);
    set_product(qi, 1);
    heap.push_back(qi);
    std::push_heap(heap.begin(), heap.end(), less);
  }
  SparsePoly out(nv);
  const std::size_t q = qcoeffs.size();
  out.exps_.resize(qexps.size());
  out.coeffs_.reserve(q);
  for (std::size_t i = 0; i < q; ++i) {
    std::copy_n(qexps.data() + (q - 1 - i) * s, s, out.exps_.data() + i * s);
    out.coeffs_.push_back(std::move(qcoeffs[q - 1 - i]));
  }
  return out;
}

template class SparsePoly<Integer>;
template class SparsePoly<Rational>;
template class SparsePoly<ParamPoly>;
template class SparsePoly<MPoly<Rational>>;
template class SparsePoly<MPoly<ParamPoly>>;

}  // namespace mres
