#include "derange/simplex.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "derange/counting.hpp"
#include "derange/signed_perm.hpp"

namespace derange {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw std::invalid_argument(message);
}

}  // namespace

PlainPermutation::PlainPermutation(std::vector<int> images)
    : images_(std::move(images)) {
  const int n = size();
  if (n == 0) invalid("permutation: empty image list");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const int v = images_[i - 1];
    if (v < 1 || v > n)
      invalid("entry " + std::to_string(i) + ": image " + std::to_string(v) +
              " out of range for n=" + std::to_string(n));
    if (seen[v])
      invalid("entry " + std::to_string(i) + ": image " + std::to_string(v) + " repeated");
    seen[v] = 1;
  }
}

PlainPermutation PlainPermutation::identity(int n) {
  if (n < 1) invalid("identity: n must be positive, got " + std::to_string(n));
  std::vector<int> images(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  return PlainPermutation(unchecked_t{}, std::move(images));
}

PlainPermutation parse_permutation(std::string_view text, std::optional<int> expected_n) {
  std::vector<int> values = detail::parse_bracketed_ints(text);
  if (expected_n && static_cast<int>(values.size()) != *expected_n)
    invalid("expected " + std::to_string(*expected_n) + " entries, got " +
            std::to_string(values.size()));
  return PlainPermutation(std::move(values));
}

std::string format_permutation(const PlainPermutation& p) {
  std::string out = "[";
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p.image(i));
  }
  out += ']';
  return out;
}

bool is_derangement(const PlainPermutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p.image(i) == i) return false;
  return true;
}

Orientation parity(const PlainPermutation& p) {
  const int n = p.size();
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  int cycles = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = p.image(j)) seen[j] = 1;
  }
  return (n - cycles) % 2 == 0 ? Orientation::direct : Orientation::indirect;
}

SymmetricGroupEnumeration::SymmetricGroupEnumeration(int n, int ceiling) : n_(n) {
  if (n < 1)
    throw std::domain_error("enumeration requires n >= 1, got " + std::to_string(n));
  if (n > ceiling)
    throw std::domain_error("enumerating S_" + std::to_string(n) + " would visit " +
                            factorial(n).str() + " elements; dimension " + std::to_string(n) +
                            " is above the enumeration ceiling of " + std::to_string(ceiling) +
                            ", raise it to proceed");
}

BigInt SymmetricGroupEnumeration::order() const { return factorial(n_); }

std::vector<int> SymmetricGroupEnumeration::remaining_after_prefix(
    std::span<const int> prefix) const {
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

template <typename Pred>
std::int64_t count_over_slices(int n, int ceiling, Pred pred) {
  SymmetricGroupEnumeration whole(n, ceiling);
  std::vector<std::future<std::int64_t>> slices;
  slices.reserve(static_cast<size_t>(n));
  for (int first = 1; first <= n; ++first) {
    slices.push_back(std::async(std::launch::async, [n, ceiling, first, pred] {
      std::int64_t count = 0;
      const int prefix[] = {first};
      SymmetricGroupEnumeration(n, ceiling)
          .for_each_with_prefix(prefix, [&](const PlainPermutation& p) {
            if (pred(p)) ++count;
          });
      return count;
    }));
  }
  std::int64_t total = 0;
  for (auto& slice : slices) total += slice.get();
  return total;
}

}  // namespace

std::int64_t count_derangements_oracle(int n, int ceiling) {
  return count_over_slices(n, ceiling,
                           [](const PlainPermutation& p) { return is_derangement(p); });
}

std::pair<std::int64_t, std::int64_t> count_even_odd_oracle(int n, int ceiling) {
  SymmetricGroupEnumeration whole(n, ceiling);
  using Split = std::pair<std::int64_t, std::int64_t>;
  std::vector<std::future<Split>> slices;
  slices.reserve(static_cast<size_t>(n));
  for (int first = 1; first <= n; ++first) {
    slices.push_back(std::async(std::launch::async, [n, ceiling, first] {
      Split split{0, 0};
      const int prefix[] = {first};
      SymmetricGroupEnumeration(n, ceiling)
          .for_each_with_prefix(prefix, [&](const PlainPermutation& p) {
            if (!is_derangement(p)) return;
            if (parity(p) == Orientation::direct)
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

const char* to_string(TetraClass c) {
  switch (c) {
    case TetraClass::identity: return "identity";
    case TetraClass::vertex_rotation: return "vertex_rotation";
    case TetraClass::edge_rotation: return "edge_rotation";
    case TetraClass::reflection: return "reflection";
    case TetraClass::rotary_reflection: return "rotary_reflection";
  }
  return "?";
}

TetraClass classify_tetrahedron(const PlainPermutation& p) {
  if (p.size() != 4)
    invalid("tetrahedron classification requires n = 4, got n = " +
            std::to_string(p.size()));
  std::vector<char> seen(5, 0);
  std::vector<int> lengths;
  for (int i = 1; i <= 4; ++i) {
    if (seen[i]) continue;
    int length = 0;
    for (int j = i; !seen[j]; j = p.image(j)) {
      seen[j] = 1;
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.begin(), lengths.end());
  if (lengths == std::vector<int>{1, 1, 1, 1}) return TetraClass::identity;
  if (lengths == std::vector<int>{1, 3}) return TetraClass::vertex_rotation;
  if (lengths == std::vector<int>{2, 2}) return TetraClass::edge_rotation;
  if (lengths == std::vector<int>{1, 1, 2}) return TetraClass::reflection;
  return TetraClass::rotary_reflection;  // single 4-cycle
}

TetraCensus tetra_census() {
  TetraCensus census;
  SymmetricGroupEnumeration(4).for_each([&](const PlainPermutation& p) {
    ++census.classes[classify_tetrahedron(p)];
    if (!is_derangement(p)) return;
    ++census.derangements;
    if (parity(p) == Orientation::direct)
      ++census.direct_derangements;
    else
      ++census.indirect_derangements;
  });
  return census;
}

}  // namespace derange
