#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "derange/bigint.hpp"
#include "derange/orientation.hpp"

namespace derange {

class SymmetricGroupEnumeration;

/// Element of the symmetric group S_n acting on the facets of the
/// (n-1)-simplex (equivalently its vertices); images are 1-based.
class PlainPermutation {
 public:
  explicit PlainPermutation(std::vector<int> images);

  static PlainPermutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool operator==(const PlainPermutation&) const = default;

 private:
  struct unchecked_t {};
  PlainPermutation(unchecked_t, std::vector<int> images)
      : images_(std::move(images)) {}

  std::vector<int> images_;

  friend class SymmetricGroupEnumeration;
};

PlainPermutation parse_permutation(std::string_view text,
                                   std::optional<int> expected_n = std::nullopt);
std::string format_permutation(const PlainPermutation& p);

bool is_derangement(const PlainPermutation& p);

/// Even permutations are the direct isometries of the simplex; parity is
/// read off as (-1)^(n - number of cycles).
Orientation parity(const PlainPermutation& p);

inline constexpr int kDefaultSymmetricCeiling = 10;

/// Lexicographic enumeration of S_n, prefix-partitionable the same way as
/// the cube group's enumerator. The visited element is a reused buffer.
class SymmetricGroupEnumeration {
 public:
  explicit SymmetricGroupEnumeration(int n, int ceiling = kDefaultSymmetricCeiling);

  int dimension() const { return n_; }
  BigInt order() const;  // n!

  template <typename Visit>
  void for_each(Visit&& visit) const {
    for_each_with_prefix({}, visit);
  }

  template <typename Visit>
  void for_each_with_prefix(std::span<const int> images_prefix, Visit&& visit) const {
    const int n = n_;
    std::vector<int> tail = remaining_after_prefix(images_prefix);
    std::vector<int> images(images_prefix.begin(), images_prefix.end());
    images.insert(images.end(), tail.begin(), tail.end());

    PlainPermutation element = PlainPermutation::identity(n);
    const auto fixed = images_prefix.size();
    do {
      std::copy(tail.begin(), tail.end(), images.begin() + fixed);
      element.images_ = images;
      visit(element);
    } while (std::next_permutation(tail.begin(), tail.end()));
  }

 private:
  std::vector<int> remaining_after_prefix(std::span<const int> prefix) const;

  int n_;
};

inline SymmetricGroupEnumeration enumerate_sn(int n, int ceiling = kDefaultSymmetricCeiling) {
  return SymmetricGroupEnumeration(n, ceiling);
}

// Exhaustive cross-checks of the closed-form counts.
std::int64_t count_derangements_oracle(int n, int ceiling = kDefaultSymmetricCeiling);
std::pair<std::int64_t, std::int64_t> count_even_odd_oracle(
    int n, int ceiling = kDefaultSymmetricCeiling);

/// Geometric class of a tetrahedron isometry (S_4 on facets), determined
/// by cycle type alone: 1+1+1+1 identity, 3+1 vertex rotation, 2+2 edge
/// rotation (half-turn), 2+1+1 reflection, 4 rotary reflection.
enum class TetraClass {
  identity,
  vertex_rotation,
  edge_rotation,
  reflection,
  rotary_reflection,
};

const char* to_string(TetraClass c);

TetraClass classify_tetrahedron(const PlainPermutation& p);

struct TetraCensus {
  std::map<TetraClass, int> classes;
  int derangements = 0;
  int direct_derangements = 0;
  int indirect_derangements = 0;
};

TetraCensus tetra_census();

}  // namespace derange
