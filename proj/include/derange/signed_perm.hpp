#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace derange {

class GroupEnumeration;

/// Element of the hyperoctahedral group B_n, the isometry group of the
/// n-cube, in window form: entry i (1-based) is the signed image of the
/// i-th coordinate direction, so e_i maps to sign(i) * e_{image(i)}.
/// Equivalently, column i of the signed permutation matrix has its single
/// nonzero entry, sign(i), in row image(i).
class SignedPermutation {
 public:
  /// Validates that the unsigned entries are a permutation of 1..n and no
  /// entry is zero; throws std::invalid_argument naming the offending entry.
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);

  int size() const { return static_cast<int>(window_.size()); }

  // Accessors take 1-based positions in [1, size()].
  int entry(int i) const { return window_[i - 1]; }
  int image(int i) const { const int v = window_[i - 1]; return v < 0 ? -v : v; }
  int sign(int i) const { return window_[i - 1] < 0 ? -1 : 1; }

  const std::vector<int>& window() const { return window_; }

  bool operator==(const SignedPermutation&) const = default;

 private:
  struct unchecked_t {};
  SignedPermutation(unchecked_t, std::vector<int> window)
      : window_(std::move(window)) {}

  std::vector<int> window_;

  // The enumerator rewrites the window in place between visitor calls.
  friend class GroupEnumeration;
};

/// Facet of the n-cube: the one centered at +e_index (starred = false,
/// printed "3") or at -e_index (starred = true, printed "3*").
struct FacetLabel {
  int index = 1;
  bool starred = false;

  FacetLabel opposite() const { return {index, !starred}; }
  auto operator<=>(const FacetLabel&) const = default;
};

std::string to_string(const FacetLabel& f);

/// One cycle of the underlying index permutation together with the signs
/// met along it: support begins at its smallest element and signs[k] is the
/// sign applied as support[k] maps onto support[(k+1) % length]. The sign
/// product (negative()) classifies the cycle; the individual signs are kept
/// because reconstructing the original element requires them.
struct SignedCycle {
  std::vector<int> support;
  std::vector<int> signs;

  int length() const { return static_cast<int>(support.size()); }
  bool negative() const;  // true when the sign product is -1

  bool operator==(const SignedCycle&) const = default;
};

/// Cycles ordered by smallest support element; supports partition 1..n.
struct CycleDecomposition {
  int n = 0;
  std::vector<SignedCycle> cycles;

  bool operator==(const CycleDecomposition&) const = default;
};

/// compose(a, b) applies b first, then a (matrix product A*B).
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

SignedPermutation inverse(const SignedPermutation& a);

/// Determinant of the signed permutation matrix, always +1 or -1.
int determinant_sign(const SignedPermutation& a);

/// True for the map sending every e_i to -e_i.
bool is_central_inversion(const SignedPermutation& a);

CycleDecomposition cycle_decomposition(const SignedPermutation& a);

/// Inverse of cycle_decomposition; validates that the supports partition 1..n.
SignedPermutation reconstruct(const CycleDecomposition& d);

/// Parses window notation like "[2,1,-3]" (optional spaces after commas).
/// Throws std::invalid_argument naming the offending token on bad syntax,
/// a repeated or out-of-range index, or a size different from expected_n.
SignedPermutation parse_window(std::string_view text,
                               std::optional<int> expected_n = std::nullopt);

std::string format_window(const SignedPermutation& a);

namespace detail {
// "[v1,v2,...]" -> values; shared with the simplex module's parser.
std::vector<int> parse_bracketed_ints(std::string_view text);
}  // namespace detail

}  // namespace derange
