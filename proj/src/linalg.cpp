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

#include "mres/linalg.hpp"

#include <map>
#include <sstream>

namespace mres {

namespace {

std::size_t entry_weight(const Integer& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }
std::size_t entry_weight(const Rational& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}
template <class C>
std::size_t entry_weight(const SparsePoly<C>& p) {
  return p.size();
}

template <class C>
void swap_rows(Matrix<C>& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// Row index >= from with a nonzero entry of least weight in column col, or
// m.rows() if the column is zero there.
template <class C>
std::size_t find_pivot(const Matrix<C>& m, std::size_t from, std::size_t col) {
  std::size_t best = m.rows(), best_w = 0;
  for (std::size_t i = from; i < m.rows(); ++i) {
    if (is_zero(m(i, col))) continue;
    std::size_t w = entry_weight(m(i, col));
    if (best == m.rows() || w < best_w) {
      best = i;
      best_w = w;
    }
  }
  return best;
}

// One fraction-free elimination step below pivot (k, col).
template <class C>
void eliminate_below(Matrix<C>& m, std::size_t k, std::size_t col, const C& prev) {
  const C& piv = m(k, col);
  const bool unit_prev = prev == RingTraits<C>::one();
  for (std::size_t i = k + 1; i < m.rows(); ++i) {
    const bool lead_zero = is_zero(m(i, col));
    for (std::size_t j = col + 1; j < m.cols(); ++j) {
      C v = piv * m(i, j);
      if (!lead_zero) sub_product(v, m(i, col), m(k, j));
      m(i, j) = unit_prev || is_zero(v) ? std::move(v) : exact_div(v, prev);
    }
    m(i, col) = RingTraits<C>::zero();
  }
}

std::string exps_text(const ExpVec& e) {
  std::string s = "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + "]";
}

ExpVec parse_exps(const std::string& s, std::size_t& pos) {
  if (pos >= s.size() || s[pos] != '[') throw InvalidArgument("bad label '" + s + "'");
  ++pos;
  ExpVec e;
  while (pos < s.size() && s[pos] != ']') {
    std::size_t used = 0;
    e.push_back(std::stoi(s.substr(pos), &used));
    pos += used;
    if (pos < s.size() && s[pos] == ',') ++pos;
  }
  if (pos >= s.size()) throw InvalidArgument("bad label '" + s + "'");
  ++pos;
  return e;
}

}  // namespace

std::string Label::to_string() const {
  switch (kind) {
    case Kind::Monomial:
      return "X^" + exps_text(exps);
    case Kind::Dual:
      return "T^" + exps_text(exps);
    case Kind::Multiple:
      return "X^" + exps_text(exps) + "*f" + std::to_string(poly);
    case Kind::DualMultiple:
      return "(X^" + exps_text(exps) + "*f" + std::to_string(poly) + ")*";
    case Kind::Named:
      return name;
  }
  return name;
}

Label Label::parse(const std::string& s) {
  try {
    std::size_t pos = 0;
    bool dual_mult = s.starts_with("(X^");
    if (dual_mult) pos = 1;
    if (s.compare(pos, 2, "X^") == 0 || s.compare(pos, 2, "T^") == 0) {
      bool is_t = s[pos] == 'T';
      pos += 2;
      ExpVec e = parse_exps(s, pos);
      if (is_t && pos == s.size()) return dual(std::move(e));
      if (!is_t && !dual_mult && pos == s.size()) return monomial(std::move(e));
      if (!is_t && s.compare(pos, 2, "*f") == 0) {
        pos += 2;
        std::size_t used = 0;
        int j = std::stoi(s.substr(pos), &used);
        pos += used;
        if (!dual_mult && pos == s.size()) return multiple(j, std::move(e));
        if (dual_mult && s.substr(pos) == ")*") return dual_multiple(j, std::move(e));
      }
    }
  } catch (const std::logic_error&) {
  }
  return named(s);
}

template <class C>
void LabeledMatrix<C>::validate() const {
  if (row_labels.size() != entries.rows() || col_labels.size() != entries.cols())
    throw InvalidArgument("label count does not match matrix dimensions");
  if (blocks.delta_cols + blocks.sylvester_cols != entries.cols() ||
      blocks.top_rows + blocks.dual_rows != entries.rows())
    throw InvalidArgument("block layout does not partition the matrix");
}

template <class C>
LabeledMatrix<C> LabeledMatrix<C>::transposed() const {
  LabeledMatrix<C> t;
  t.entries = entries.transposed();
  t.row_labels = col_labels;
  t.col_labels = row_labels;
  t.blocks = {blocks.top_rows, blocks.dual_rows, blocks.delta_cols, blocks.sylvester_cols};
  return t;
}

template <class C>
LabeledMatrix<C> submatrix(const LabeledMatrix<C>& m, const std::vector<Label>& rows,
                           const std::vector<Label>& cols) {
  auto index = [](const std::vector<Label>& labels) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i].to_string(), i);
    return idx;
  };
  auto ri = index(m.row_labels), ci = index(m.col_labels);
  auto lookup = [](const std::map<std::string, std::size_t>& idx, const Label& l) {
    auto it = idx.find(l.to_string());
    if (it == idx.end()) throw InvalidArgument("unknown label " + l.to_string());
    return it->second;
  };
  std::vector<std::size_t> r, c;
  for (const auto& l : rows) r.push_back(lookup(ri, l));
  for (const auto& l : cols) c.push_back(lookup(ci, l));
  LabeledMatrix<C> s;
  s.entries = Matrix<C>(r.size(), c.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) s.entries(i, j) = m.entries(r[i], c[j]);
  s.row_labels = rows;
  s.col_labels = cols;
  for (const auto& l : cols)
    if (l.kind == Label::Kind::Dual) ++s.blocks.delta_cols;
  s.blocks.sylvester_cols = cols.size() - s.blocks.delta_cols;
  for (const auto& l : rows)
    if (l.kind == Label::Kind::DualMultiple) ++s.blocks.dual_rows;
  s.blocks.top_rows = rows.size() - s.blocks.dual_rows;
  return s;
}

// Nonzero entry (i, j) with i, j >= k of least weight, ties broken by the
// Markowitz count. Returns {n, n} if the trailing block is zero.
template <class C>
std::pair<std::size_t, std::size_t> find_full_pivot(const Matrix<C>& m, std::size_t k) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> rc(n, 0), cc(n, 0);
  for (std::size_t i = k; i < n; ++i)
    for (std::size_t j = k; j < n; ++j)
      if (!is_zero(m(i, j))) {
        ++rc[i];
        ++cc[j];
      }
  std::size_t bi = n, bj = n, best_w = 0, best_mk = 0;
  for (std::size_t i = k; i < n; ++i)
    for (std::size_t j = k; j < n; ++j) {
      if (is_zero(m(i, j))) continue;
      const std::size_t w = entry_weight(m(i, j));
      const std::size_t mk = (rc[i] - 1) * (cc[j] - 1);
      if (bi == n || w < best_w || (w == best_w && mk < best_mk)) {
        bi = i;
        bj = j;
        best_w = w;
        best_mk = mk;
      }
    }
  return {bi, bj};
}

// Estimated coefficient operations of one elimination step at pivot (k, k):
// the two products per entry and the exact division.
template <class C>
std::size_t step_work(const Matrix<C>& m, std::size_t k) {
  const std::size_t n = m.rows(), wp = entry_weight(m(k, k));
  std::size_t work = 0;
  for (std::size_t i = k + 1; i < n; ++i) {
    const std::size_t wl = is_zero(m(i, k)) ? 0 : entry_weight(m(i, k));
    for (std::size_t j = k + 1; j < n; ++j)
      work += 2 * wp * entry_weight(m(i, j)) + wl * entry_weight(m(k, j));
  }
  return work;
}

template <class C>
C bareiss_det(Matrix<C> m, std::size_t max_work) {
  if (!m.is_square()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return RingTraits<C>::one();
  bool negate = false;
  C prev = RingTraits<C>::one();
  std::size_t work = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    auto [pi, pj] = find_full_pivot(m, k);
    if (pi == n) return RingTraits<C>::zero();
    if (pi != k) {
      swap_rows(m, pi, k);
      negate = !negate;
    }
    if (pj != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(m(i, pj), m(i, k));
      negate = !negate;
    }
    if (max_work != 0) {
      work += step_work(m, k);
      if (work > max_work)
        throw SymbolicBudgetExceeded("determinant needs more than " + std::to_string(max_work) +
                                     " coefficient operations");
    }
    eliminate_below(m, k, k, prev);
    prev = m(k, k);
  }
  C d = std::move(m(n - 1, n - 1));
  return negate ? C(-d) : d;
}

template <class C>
std::size_t rank_over_fractions(Matrix<C> m) {
  std::size_t row = 0;
  C prev = RingTraits<C>::one();
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = find_pivot(m, row, col);
    if (p == m.rows()) continue;
    if (p != row) swap_rows(m, p, row);
    eliminate_below(m, row, col, prev);
    prev = m(row, col);
    ++row;
  }
  return row;
}

template <class C>
std::vector<C> berkowitz_charpoly(const Matrix<C>& a) {
  if (!a.is_square()) throw InvalidArgument("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  // p holds coefficients from the leading one downwards.
  std::vector<C> p{RingTraits<C>::one()};
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t k = r - 1;  // index of the new row/column
    std::vector<C> toe(r + 1, RingTraits<C>::zero());
    toe[0] = RingTraits<C>::one();
    toe[1] = -a(k, k);
    // v = A_{r-1}^m * column, starting with the column itself.
    std::vector<C> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = a(i, k);
    for (std::size_t m = 0; m + 2 <= r; ++m) {
      C dot = RingTraits<C>::zero();
      for (std::size_t i = 0; i < k; ++i)
        if (!is_zero(v[i]) && !is_zero(a(k, i))) add_product(dot, a(k, i), v[i]);
      toe[m + 2] = -dot;
      if (m + 3 > r) break;
      std::vector<C> w(k, RingTraits<C>::zero());
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          if (!is_zero(v[j]) && !is_zero(a(i, j))) add_product(w[i], a(i, j), v[j]);
      v = std::move(w);
    }
    std::vector<C> q(r + 1, RingTraits<C>::zero());
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j < r && j <= i; ++j)
        if (!is_zero(toe[i - j]) && !is_zero(p[j])) add_product(q[i], toe[i - j], p[j]);
    p = std::move(q);
  }
  return std::vector<C>(p.rbegin(), p.rend());
}

template <class C>
C cofactor_det(const Matrix<C>& m) {
  if (!m.is_square()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return RingTraits<C>::one();
  if (n == 1) return m(0, 0);
  C d = RingTraits<C>::zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    Matrix<C> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    C term = m(0, j) * cofactor_det(minor);
    if (j % 2)
      d -= term;
    else
      d += term;
  }
  return d;
}

#define MRES_INSTANTIATE_LINALG(C)                                                           \
  template struct LabeledMatrix<C>;                                                          \
  template LabeledMatrix<C> submatrix(const LabeledMatrix<C>&, const std::vector<Label>&,    \
                                      const std::vector<Label>&);                            \
  template C bareiss_det(Matrix<C>, std::size_t);                                                         \
  template std::size_t rank_over_fractions(Matrix<C>);                                       \
  template std::vector<C> berkowitz_charpoly(const Matrix<C>&);                              \
  template C cofactor_det(const Matrix<C>&);

MRES_INSTANTIATE_LINALG(Integer)
MRES_INSTANTIATE_LINALG(Rational)
MRES_INSTANTIATE_LINALG(ParamPoly)
MRES_INSTANTIATE_LINALG(MPoly<Rational>)
MRES_INSTANTIATE_LINALG(MPoly<ParamPoly>)

}  // namespace mres
