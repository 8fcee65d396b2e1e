#pragma once

// Dense exact linear algebra over an abstract field (Gaussian
// elimination only; matrices here are small and exactness matters more
// than asymptotics).

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

namespace mg {

template <class K>
using Vec = std::vector<typename K::Elem>;

template <class K>
using Mat = std::vector<Vec<K>>;  // row major

template <class K>
Vec<K> zero_vec(const K& k, std::size_t n) {
  return Vec<K>(n, k.zero());
}

// Reduced row echelon form in place; returns pivot column indices.
template <class K>
std::vector<std::size_t> rref(const K& k, Mat<K>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && k.is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    auto scale = k.inv(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = k.mul(m[r][j], scale);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || k.is_zero(m[i][c])) continue;
      auto f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = k.sub(m[i][j], k.mul(f, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
std::size_t rank(const K& k, Mat<K> m) {
  return rref(k, m).size();
}

// Basis of the right null space of m (vectors of length cols).
template <class K>
Mat<K> nullspace(const K& k, Mat<K> m, std::size_t cols) {
  if (m.empty()) {
    Mat<K> basis;
    for (std::size_t c = 0; c < cols; ++c) {
      auto v = zero_vec(k, cols);
      v[c] = k.one();
      basis.push_back(v);
    }
    return basis;
  }
  assert(m[0].size() == cols);
  auto pivots = rref(k, m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat<K> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    auto v = zero_vec(k, cols);
    v[c] = k.one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = k.neg(m[r][c]);
    basis.push_back(v);
  }
  return basis;
}

// Solve m x = b; returns one solution if consistent.
template <class K>
std::optional<Vec<K>> solve(const K& k, Mat<K> m, Vec<K> b) {
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  auto pivots = rref(k, m);
  Vec<K> x = zero_vec(k, cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;  // pivot in the constant column
    x[pivots[r]] = m[r][cols];
  }
  return x;
}

// Dimension of the span of the given row vectors.
template <class K>
std::size_t span_dim(const K& k, const Mat<K>& rows) {
  if (rows.empty()) return 0;
  return rank(k, rows);
}

// Does v lie in the span of the rows?
template <class K>
bool in_span(const K& k, const Mat<K>& rows, const Vec<K>& v) {
  Mat<K> cols;  // transpose so the span is a column space and we solve
  std::size_t n = v.size();
  cols.assign(n, zero_vec(k, rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) cols[j][i] = rows[i][j];
  return solve(k, cols, v).has_value();
}

template <class K>
Vec<K> mat_apply(const K& k, const Mat<K>& m, const Vec<K>& v) {
  Vec<K> out = zero_vec(k, m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out[i] = k.add(out[i], k.mul(m[i][j], v[j]));
  return out;
}

}  // namespace mg
