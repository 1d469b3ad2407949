#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "derange/bigint.hpp"
#include "derange/signed_perm.hpp"

namespace derange {

/// Vertex of the n-cube [-1,1]^n: every coordinate is +1 or -1.
struct Vertex {
  std::vector<int> coords;

  bool operator==(const Vertex&) const = default;
};

FacetLabel facet_image(const SignedPermutation& a, const FacetLabel& f);

/// True when no facet is fixed; equivalent to no window entry i equal to +i.
bool is_facet_derangement(const SignedPermutation& a);

/// Fixed facets in label order 1, 1*, 2, 2*, ... Facets are fixed in
/// opposite pairs, so the result always has even length.
std::vector<FacetLabel> fixed_facets(const SignedPermutation& a);

/// Coordinate-permutation action: output[image(i)] = sign(i) * input[i].
Vertex vertex_image(const SignedPermutation& a, const Vertex& v);

/// True when some vertex of the cube is mapped to itself. Tracing a
/// candidate vertex around one index cycle multiplies its entry by the
/// cycle's sign product, so this holds exactly when no cycle is negative.
bool fixes_some_vertex(const SignedPermutation& a);

/// 2^n * n!, the number of elements of B_n.
BigInt group_order(int n);

/// Refuse exhaustive enumeration above this dimension unless the caller
/// raises the ceiling explicitly (2^9 * 9! is already ~1.9e8 elements).
inline constexpr int kDefaultGroupCeiling = 9;

/// Streaming enumeration of B_n in a fixed total order: images sequences
/// lexicographically, and for each images sequence all sign masks with -1
/// ordered before +1 position by position. The element handed to the
/// visitor is a reused buffer; copy it to retain it beyond the call.
class GroupEnumeration {
 public:
  explicit GroupEnumeration(int n, int ceiling = kDefaultGroupCeiling);

  int dimension() const { return n_; }
  BigInt order() const { return group_order(n_); }

  template <typename Visit>
  void for_each(Visit&& visit) const {
    for_each_with_prefix({}, visit);
  }

  /// Visits exactly the elements whose images sequence starts with
  /// images_prefix, in enumeration order. Distinct first entries give
  /// disjoint slices whose union is the whole group, so callers can fan
  /// the slices out to threads and merge per-slice results.
  template <typename Visit>
  void for_each_with_prefix(std::span<const int> images_prefix, Visit&& visit) const {
    const int n = n_;
    std::vector<int> tail = remaining_after_prefix(images_prefix);
    std::vector<int> images(images_prefix.begin(), images_prefix.end());
    images.insert(images.end(), tail.begin(), tail.end());

    SignedPermutation element = SignedPermutation::identity(n);
    const auto fixed = images_prefix.size();
    const std::uint64_t masks = std::uint64_t{1} << n;
    do {
      std::copy(tail.begin(), tail.end(), images.begin() + fixed);
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        for (int i = 0; i < n; ++i) {
          // Bit n-1-i governs position i+1; clear bit = negative sign,
          // so mask order realizes -1 < +1 per position.
          const bool positive = (mask >> (n - 1 - i)) & 1u;
          element.window_[i] = positive ? images[i] : -images[i];
        }
        visit(element);
      }
    } while (std::next_permutation(tail.begin(), tail.end()));
  }

 private:
  std::vector<int> remaining_after_prefix(std::span<const int> prefix) const;

  int n_;
};

inline GroupEnumeration enumerate_group(int n, int ceiling = kDefaultGroupCeiling) {
  return GroupEnumeration(n, ceiling);
}

// Exhaustive counts over B_n, partitioned by first image across threads.
// They exist to cross-check the closed-form counts independently.
std::int64_t count_facet_derangements_oracle(int n, int ceiling = kDefaultGroupCeiling);
std::int64_t count_vertex_fixing_oracle(int n, int ceiling = kDefaultGroupCeiling);

/// Facet derangements split into (direct, indirect) by determinant.
std::pair<std::int64_t, std::int64_t> count_facet_derangements_by_orientation_oracle(
    int n, int ceiling = kDefaultGroupCeiling);

}  // namespace derange
