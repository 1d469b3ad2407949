#include "derange/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "derange/actions.hpp"

namespace derange {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw std::invalid_argument(message);
}

}  // namespace

const char* to_string(Orientation o) {
  return o == Orientation::direct ? "direct" : "indirect";
}

Orientation orientation(const SignedPermutation& a) {
  return determinant_sign(a) > 0 ? Orientation::direct : Orientation::indirect;
}

int fixed_dim(const SignedPermutation& a) {
  // Each positive cycle contributes one +1 eigenvector (the indicator of
  // its support, signs unwound along the cycle); negative cycles none.
  int count = 0;
  for (const SignedCycle& cycle : cycle_decomposition(a).cycles)
    if (!cycle.negative()) ++count;
  return count;
}

const char* to_string(Class3D c) {
  switch (c) {
    case Class3D::identity: return "identity";
    case Class3D::rotation: return "rotation";
    case Class3D::reflection: return "reflection";
    case Class3D::rotary_reflection: return "rotary_reflection";
  }
  return "?";
}

const char* to_string(RotarySubtype s) {
  switch (s) {
    case RotarySubtype::central_inversion: return "central_inversion";
    case RotarySubtype::reducible: return "reducible";
    case RotarySubtype::irreducible: return "irreducible";
  }
  return "?";
}

std::string to_string(const IsometryClass3D& c) {
  std::string out = to_string(c.cls);
  if (c.subtype) {
    out += " (";
    out += to_string(*c.subtype);
    out += ')';
  }
  return out;
}

namespace {

// Orbit sizes of the six facet labels, sorted ascending.
std::vector<int> facet_cycle_lengths(const SignedPermutation& a) {
  std::vector<FacetLabel> labels;
  for (int i = 1; i <= a.size(); ++i) {
    labels.push_back({i, false});
    labels.push_back({i, true});
  }
  std::vector<int> lengths;
  std::vector<char> seen(labels.size(), 0);
  auto index_of = [&](const FacetLabel& f) {
    return static_cast<size_t>(2 * (f.index - 1) + (f.starred ? 1 : 0));
  };
  for (size_t start = 0; start < labels.size(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    FacetLabel f = labels[start];
    while (!seen[index_of(f)]) {
      seen[index_of(f)] = 1;
      f = facet_image(a, f);
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace

IsometryClass3D classify3d(const SignedPermutation& a) {
  if (a.size() != 3)
    invalid("cube classification requires n = 3, got n = " + std::to_string(a.size()));
  if (a == SignedPermutation::identity(3)) return {Class3D::identity, std::nullopt};
  if (orientation(a) == Orientation::direct) return {Class3D::rotation, std::nullopt};
  // Indirect isometries: a mirror fixes a plane; everything else is a
  // rotation composed with a mirror.
  if (fixed_dim(a) == 2) return {Class3D::reflection, std::nullopt};
  if (is_central_inversion(a))
    return {Class3D::rotary_reflection, RotarySubtype::central_inversion};
  const std::vector<int> lengths = facet_cycle_lengths(a);
  if (lengths == std::vector<int>{2, 4})
    return {Class3D::rotary_reflection, RotarySubtype::reducible};
  if (lengths == std::vector<int>{6})
    return {Class3D::rotary_reflection, RotarySubtype::irreducible};
  throw std::logic_error("unreachable facet cycle structure for a rotary reflection");
}

ClassificationReport classify(const SignedPermutation& a) {
  ClassificationReport report;
  report.orientation = orientation(a);
  report.fixed_dim = fixed_dim(a);
  report.facet_derangement = is_facet_derangement(a);
  if (a.size() == 3) report.class3d = classify3d(a);
  return report;
}

nlohmann::ordered_json to_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["orientation"] = to_string(r.orientation);
  j["fixed_dim"] = r.fixed_dim;
  j["facet_derangement"] = r.facet_derangement;
  if (r.class3d) {
    j["class3d"] = to_string(r.class3d->cls);
    if (r.class3d->subtype) j["rotary_subtype"] = to_string(*r.class3d->subtype);
  }
  return j;
}

std::string to_string(const Reflection& r) {
  if (const auto* pair = std::get_if<PairSwap>(&r))
    return "(" + std::to_string(pair->axis) + "," + std::to_string(pair->axis) + "*)";
  const auto& swap = std::get<FacetSwap>(r);
  if (swap.same_sign)
    return "(" + std::to_string(swap.a) + "," + std::to_string(swap.b) + ")";
  return "(" + std::to_string(swap.a) + "," + std::to_string(swap.b) + "*)";
}

SignedPermutation reflection_element(const Reflection& r, int n) {
  std::vector<int> window(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) window[i] = i + 1;
  if (const auto* pair = std::get_if<PairSwap>(&r)) {
    if (pair->axis < 1 || pair->axis > n) invalid("reflection axis out of range");
    window[pair->axis - 1] = -pair->axis;
  } else {
    const auto& swap = std::get<FacetSwap>(r);
    if (swap.a < 1 || swap.a > n || swap.b < 1 || swap.b > n || swap.a == swap.b)
      invalid("reflection coordinates out of range");
    const int sign = swap.same_sign ? 1 : -1;
    window[swap.a - 1] = sign * swap.b;
    window[swap.b - 1] = sign * swap.a;
  }
  return SignedPermutation(std::move(window));
}

std::vector<Reflection> reflection_factorization(const SignedPermutation& a) {
  const int n = a.size();
  std::vector<Reflection> factors;
  // a = D * P with P the bare index permutation and D the sign flips on
  // the rows it lands in: D negates row image(i) exactly when sign(i) < 0.
  std::vector<int> flips;
  for (int i = 1; i <= n; ++i)
    if (a.sign(i) < 0) flips.push_back(a.image(i));
  std::sort(flips.begin(), flips.end());
  for (int axis : flips) factors.push_back(PairSwap{axis});
  // P cycle by cycle: (c0 c1 .. ck) = (c0 ck)(c0 ck-1)...(c0 c1), emitted
  // left to right; factors apply right to left overall.
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    for (int j = i; !seen[j]; j = a.image(j)) {
      seen[j] = 1;
      cycle.push_back(j);
    }
    for (size_t k = cycle.size() - 1; k >= 1; --k)
      factors.push_back(FacetSwap{cycle[0], cycle[k], true});
  }
  return factors;
}

SignedPermutation parity_bijection(const SignedPermutation& a) {
  if (!is_facet_derangement(a)) invalid("not a facet derangement");
  if (is_central_inversion(a)) invalid("central inversion excluded");
  // Negating one entry at an index the permutation moves flips the
  // determinant without touching the diagonal, and redoing it at the same
  // index (still the smallest moved one) undoes it. An index fixed by a
  // derangement carries a negative sign, so only the central inversion
  // has no moved index.
  for (int i = 1; i <= a.size(); ++i) {
    if (a.image(i) == i) continue;
    std::vector<int> window = a.window();
    window[i - 1] = -window[i - 1];
    return SignedPermutation(std::move(window));
  }
  throw std::logic_error("unreachable: non-central derangement fixing every index");
}

CubeCensus cube_census() {
  CubeCensus census;
  GroupEnumeration(3).for_each([&](const SignedPermutation& a) {
    ++census[{classify3d(a), is_facet_derangement(a)}];
  });
  return census;
}

}  // namespace derange
