#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "derange/orientation.hpp"
#include "derange/signed_perm.hpp"

namespace derange {

Orientation orientation(const SignedPermutation& a);

/// Dimension of the fixed subspace of R^n, i.e. the multiplicity of
/// eigenvalue +1: one per positive cycle of the decomposition.
int fixed_dim(const SignedPermutation& a);

enum class Class3D { identity, rotation, reflection, rotary_reflection };
enum class RotarySubtype { central_inversion, reducible, irreducible };

const char* to_string(Class3D c);
const char* to_string(RotarySubtype s);

struct IsometryClass3D {
  Class3D cls = Class3D::identity;
  // Present exactly when cls is rotary_reflection: the central inversion,
  // a rotary reflection preserving a coordinate split (facet cycles of
  // lengths 4 and 2), or one cycling all six facets.
  std::optional<RotarySubtype> subtype;

  auto operator<=>(const IsometryClass3D&) const = default;
};

std::string to_string(const IsometryClass3D& c);

/// Geometric classification of a cube isometry; requires size() == 3.
IsometryClass3D classify3d(const SignedPermutation& a);

struct ClassificationReport {
  Orientation orientation = Orientation::direct;
  int fixed_dim = 0;
  bool facet_derangement = false;
  std::optional<IsometryClass3D> class3d;  // populated only for n = 3
};

ClassificationReport classify(const SignedPermutation& a);

/// Fixed key order: orientation, fixed_dim, facet_derangement, class3d
/// (n = 3 only), rotary_subtype (rotary reflections only).
nlohmann::ordered_json to_json(const ClassificationReport& r);

/// Reflection through the hyperplane x_axis = 0: e_axis -> -e_axis.
struct PairSwap {
  int axis = 1;
  bool operator==(const PairSwap&) const = default;
};

/// Reflection exchanging coordinates a and b: e_a <-> e_b when same_sign,
/// e_a <-> -e_b otherwise (the hyperplanes x_a = x_b and x_a = -x_b).
struct FacetSwap {
  int a = 1;
  int b = 2;
  bool same_sign = true;
  bool operator==(const FacetSwap&) const = default;
};

using Reflection = std::variant<PairSwap, FacetSwap>;

std::string to_string(const Reflection& r);

/// The reflection as an element of B_n.
SignedPermutation reflection_element(const Reflection& r, int n);

/// Writes the element as a product of reflections, applied right to left:
/// coordinate transpositions first, then single-axis flips. The list length
/// has the parity of the determinant; the identity yields an empty list.
std::vector<Reflection> reflection_factorization(const SignedPermutation& a);

/// Orientation-reversing involution on facet derangements other than the
/// central inversion: flips the sign at the smallest non-fixed index.
/// Throws std::invalid_argument("not a facet derangement") or
/// ("central inversion excluded").
SignedPermutation parity_bijection(const SignedPermutation& a);

/// Element counts of B_3 keyed by (class, is facet derangement).
using CubeCensus = std::map<std::pair<IsometryClass3D, bool>, int>;

CubeCensus cube_census();

}  // namespace derange
