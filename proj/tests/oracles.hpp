// Test-only cross-checks, kept deliberately independent of the library's
// own shortcuts: ranks are computed by exact rational elimination and
// fixed vertices by scanning all 2^n candidates.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "derange/actions.hpp"
#include "derange/bigint.hpp"
#include "derange/signed_perm.hpp"
#include "derange/simplex.hpp"

namespace testutil {

using derange::BigRat;
using derange::PlainPermutation;
using derange::SignedPermutation;
using derange::Vertex;

// Signed permutation matrix: column i holds sign(i) in row image(i).
inline std::vector<std::vector<int>> matrix_of(const SignedPermutation& a) {
  const int n = a.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 1; i <= n; ++i) m[a.image(i) - 1][i - 1] = a.sign(i);
  return m;
}

inline int rational_rank(std::vector<std::vector<BigRat>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int row = rank; row < rows; ++row)
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int row = rank + 1; row < rows; ++row) {
      if (m[row][col] == 0) continue;
      const BigRat factor = m[row][col] / m[rank][col];
      for (int c = col; c < cols; ++c) m[row][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

// dim ker(A - I) = n - rank(A - I), the fixed-space dimension.
inline int fixed_dim_by_rank(const SignedPermutation& a) {
  const int n = a.size();
  const auto ints = matrix_of(a);
  std::vector<std::vector<BigRat>> m(n, std::vector<BigRat>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[r][c] = BigRat(ints[r][c] - (r == c ? 1 : 0));
  return n - rational_rank(std::move(m));
}

// Checks every vertex of the cube instead of reasoning about cycles.
inline bool fixes_some_vertex_by_scan(const SignedPermutation& a) {
  const int n = a.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Vertex v;
    for (int i = 0; i < n; ++i) v.coords.push_back((mask >> i) & 1u ? 1 : -1);
    if (derange::vertex_image(a, v) == v) return true;
  }
  return false;
}

inline SignedPermutation random_signed_permutation(std::mt19937& rng, int n) {
  std::vector<int> window(static_cast<size_t>(n));
  std::iota(window.begin(), window.end(), 1);
  std::shuffle(window.begin(), window.end(), rng);
  for (int& v : window)
    if (std::uniform_int_distribution<int>(0, 1)(rng)) v = -v;
  return SignedPermutation(std::move(window));
}

inline std::vector<SignedPermutation> all_elements(int n) {
  std::vector<SignedPermutation> out;
  derange::GroupEnumeration(n).for_each(
      [&](const SignedPermutation& a) { out.push_back(a); });
  return out;
}

inline std::vector<PlainPermutation> all_plain(int n) {
  std::vector<PlainPermutation> out;
  derange::SymmetricGroupEnumeration(n).for_each(
      [&](const PlainPermutation& p) { out.push_back(p); });
  return out;
}

inline PlainPermutation compose_plain(const PlainPermutation& a, const PlainPermutation& b) {
  std::vector<int> images(static_cast<size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) images[i - 1] = a.image(b.image(i));
  return PlainPermutation(std::move(images));
}

inline PlainPermutation inverse_plain(const PlainPermutation& a) {
  std::vector<int> images(static_cast<size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) images[a.image(i) - 1] = i;
  return PlainPermutation(std::move(images));
}

}  // namespace testutil
