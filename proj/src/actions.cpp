#include "derange/actions.hpp"

#include <future>
#include <stdexcept>
#include <string>

namespace derange {

FacetLabel facet_image(const SignedPermutation& a, const FacetLabel& f) {
  if (f.index < 1 || f.index > a.size())
    throw std::out_of_range("facet index " + std::to_string(f.index) +
                            " out of range for n=" + std::to_string(a.size()));
  FacetLabel image{a.image(f.index), a.sign(f.index) < 0};
  return f.starred ? image.opposite() : image;
}

bool is_facet_derangement(const SignedPermutation& a) {
  // Entry +i fixes the facet pair at coordinate i (and entry -i swaps it).
  for (int i = 1; i <= a.size(); ++i)
    if (a.entry(i) == i) return false;
  return true;
}

std::vector<FacetLabel> fixed_facets(const SignedPermutation& a) {
  std::vector<FacetLabel> fixed;
  for (int i = 1; i <= a.size(); ++i) {
    if (a.entry(i) != i) continue;
    fixed.push_back({i, false});
    fixed.push_back({i, true});
  }
  return fixed;
}

Vertex vertex_image(const SignedPermutation& a, const Vertex& v) {
  const int n = a.size();
  if (static_cast<int>(v.coords.size()) != n)
    throw std::invalid_argument("vertex has " + std::to_string(v.coords.size()) +
                                " coordinates, expected " + std::to_string(n));
  for (int c : v.coords)
    if (c != 1 && c != -1)
      throw std::invalid_argument("vertex coordinates must be +1 or -1");
  Vertex out;
  out.coords.assign(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    out.coords[a.image(i) - 1] = a.sign(i) * v.coords[i - 1];
  return out;
}

bool fixes_some_vertex(const SignedPermutation& a) {
  for (const SignedCycle& cycle : cycle_decomposition(a).cycles)
    if (cycle.negative()) return false;
  return true;
}

BigInt group_order(int n) {
  BigInt order = 1;
  for (int i = 1; i <= n; ++i) order *= 2 * i;
  return order;
}

GroupEnumeration::GroupEnumeration(int n, int ceiling) : n_(n) {
  if (n < 1)
    throw std::domain_error("enumeration requires n >= 1, got " + std::to_string(n));
  if (n > 62)
    throw std::domain_error("enumeration is not supported beyond n = 62");
  if (n > ceiling)
    throw std::domain_error("enumerating B_" + std::to_string(n) + " would visit " +
                            group_order(n).str() + " elements; dimension " + std::to_string(n) +
                            " is above the enumeration ceiling of " + std::to_string(ceiling) +
                            ", raise it to proceed");
}

std::vector<int> GroupEnumeration::remaining_after_prefix(std::span<const int> prefix) const {
  if (static_cast<int>(prefix.size()) > n_)
    throw std::invalid_argument("prefix longer than n");
  std::vector<char> used(static_cast<size_t>(n_) + 1, 0);
  for (int v : prefix) {
    if (v < 1 || v > n_)
      throw std::invalid_argument("prefix entry " + std::to_string(v) + " out of range");
    if (used[v])
      throw std::invalid_argument("prefix entry " + std::to_string(v) + " repeated");
    used[v] = 1;
  }
  std::vector<int> rest;
  rest.reserve(static_cast<size_t>(n_) - prefix.size());
  for (int v = 1; v <= n_; ++v)
    if (!used[v]) rest.push_back(v);
  return rest;
}

namespace {

// Counts elements satisfying pred, one async task per first image. Slices
// are disjoint and exhaustive, and joining in index order keeps the result
// deterministic regardless of scheduling.
template <typename Pred>
std::int64_t count_over_slices(int n, int ceiling, Pred pred) {
  GroupEnumeration whole(n, ceiling);  // validates n and ceiling up front
  std::vector<std::future<std::int64_t>> slices;
  slices.reserve(static_cast<size_t>(n));
  for (int first = 1; first <= n; ++first) {
    slices.push_back(std::async(std::launch::async, [n, ceiling, first, pred] {
      std::int64_t count = 0;
      const int prefix[] = {first};
      GroupEnumeration(n, ceiling).for_each_with_prefix(prefix, [&](const SignedPermutation& a) {
        if (pred(a)) ++count;
      });
      return count;
    }));
  }
  std::int64_t total = 0;
  for (auto& slice : slices) total += slice.get();
  return total;
}

}  // namespace

std::int64_t count_facet_derangements_oracle(int n, int ceiling) {
  return count_over_slices(n, ceiling,
                           [](const SignedPermutation& a) { return is_facet_derangement(a); });
}

std::int64_t count_vertex_fixing_oracle(int n, int ceiling) {
  return count_over_slices(n, ceiling,
                           [](const SignedPermutation& a) { return fixes_some_vertex(a); });
}

std::pair<std::int64_t, std::int64_t> count_facet_derangements_by_orientation_oracle(
    int n, int ceiling) {
  GroupEnumeration whole(n, ceiling);
  using Split = std::pair<std::int64_t, std::int64_t>;
  std::vector<std::future<Split>> slices;
  slices.reserve(static_cast<size_t>(n));
  for (int first = 1; first <= n; ++first) {
    slices.push_back(std::async(std::launch::async, [n, ceiling, first] {
      Split split{0, 0};
      const int prefix[] = {first};
      GroupEnumeration(n, ceiling).for_each_with_prefix(prefix, [&](const SignedPermutation& a) {
        if (!is_facet_derangement(a)) return;
        if (determinant_sign(a) > 0)
          ++split.first;
        else
          ++split.second;
      });
      return split;
    }));
  }
  Split total{0, 0};
  for (auto& slice : slices) {
    const Split part = slice.get();
    total.first += part.first;
    total.second += part.second;
  }
  return total;
}

}  // namespace derange
