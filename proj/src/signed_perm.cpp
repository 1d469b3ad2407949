#include "derange/signed_perm.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <utility>

namespace derange {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw std::invalid_argument(message);
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> window)
    : window_(std::move(window)) {
  const int n = size();
  if (n == 0) invalid("signed permutation: empty window");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const int v = window_[i - 1];
    if (v == 0) invalid("entry " + std::to_string(i) + ": zero is not a valid image");
    const int m = v < 0 ? -v : v;
    if (m > n)
      invalid("entry " + std::to_string(i) + ": index " + std::to_string(m) +
              " out of range for n=" + std::to_string(n));
    if (seen[m])
      invalid("entry " + std::to_string(i) + ": index " + std::to_string(m) + " repeated");
    seen[m] = 1;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 1) invalid("identity: n must be positive, got " + std::to_string(n));
  std::vector<int> window(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) window[i] = i + 1;
  return SignedPermutation(unchecked_t{}, std::move(window));
}

std::string to_string(const FacetLabel& f) {
  std::string s = std::to_string(f.index);
  if (f.starred) s += '*';
  return s;
}

bool SignedCycle::negative() const {
  int product = 1;
  for (int s : signs) product *= s;
  return product < 0;
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.size() != b.size())
    invalid("compose: size mismatch (" + std::to_string(a.size()) + " vs " +
            std::to_string(b.size()) + ")");
  const int n = a.size();
  std::vector<int> window(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int via = a.entry(b.image(i));
    window[i - 1] = b.sign(i) < 0 ? -via : via;
  }
  return SignedPermutation(std::move(window));
}

SignedPermutation inverse(const SignedPermutation& a) {
  const int n = a.size();
  std::vector<int> window(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    // e_i -> sign * e_j inverts to e_j -> sign * e_i.
    window[a.image(i) - 1] = a.sign(i) * i;
  }
  return SignedPermutation(std::move(window));
}

int determinant_sign(const SignedPermutation& a) {
  const int n = a.size();
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  int cycles = 0;
  int negatives = 0;
  for (int i = 1; i <= n; ++i) {
    if (a.entry(i) < 0) ++negatives;
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = a.image(j)) seen[j] = 1;
  }
  // Index permutation sign (-1)^(n - cycles) times one -1 per negated row.
  return (n - cycles + negatives) % 2 == 0 ? 1 : -1;
}

bool is_central_inversion(const SignedPermutation& a) {
  for (int i = 1; i <= a.size(); ++i)
    if (a.entry(i) != -i) return false;
  return true;
}

CycleDecomposition cycle_decomposition(const SignedPermutation& a) {
  const int n = a.size();
  CycleDecomposition out;
  out.n = n;
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    SignedCycle cycle;
    for (int j = i; !seen[j]; j = a.image(j)) {
      seen[j] = 1;
      cycle.support.push_back(j);
      cycle.signs.push_back(a.sign(j));
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

SignedPermutation reconstruct(const CycleDecomposition& d) {
  if (d.n < 1) invalid("reconstruct: n must be positive");
  std::vector<int> window(static_cast<size_t>(d.n), 0);
  for (const SignedCycle& cycle : d.cycles) {
    if (cycle.support.empty() || cycle.signs.size() != cycle.support.size())
      invalid("reconstruct: malformed cycle");
    const int len = cycle.length();
    for (int k = 0; k < len; ++k) {
      const int from = cycle.support[k];
      const int to = cycle.support[(k + 1) % len];
      if (from < 1 || from > d.n) invalid("reconstruct: support element out of range");
      if (window[from - 1] != 0) invalid("reconstruct: supports overlap");
      window[from - 1] = cycle.signs[k] * to;
    }
  }
  for (int v : window)
    if (v == 0) invalid("reconstruct: supports do not cover 1..n");
  return SignedPermutation(std::move(window));
}

namespace detail {

std::vector<int> parse_bracketed_ints(std::string_view text) {
  size_t pos = 0;
  auto fail = [&](const std::string& what) {
    invalid("parse error at offset " + std::to_string(pos) + ": " + what);
  };

  if (pos >= text.size() || text[pos] != '[') fail("expected '['");
  ++pos;
  if (pos < text.size() && text[pos] == ']') fail("empty list");

  std::vector<int> values;
  for (;;) {
    const size_t token_start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    const size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) {
      pos = token_start;
      fail("expected an integer");
    }
    int value = 0;
    const auto token = text.substr(token_start, pos - token_start);
    const auto result = std::from_chars(token.data(), token.data() + token.size(), value);
    if (result.ec != std::errc{}) {
      pos = token_start;
      fail("integer '" + std::string(token) + "' out of range");
    }
    values.push_back(value);

    if (pos >= text.size()) fail("expected ',' or ']'");
    if (text[pos] == ']') {
      ++pos;
      break;
    }
    if (text[pos] != ',') fail(std::string("unexpected character '") + text[pos] + "'");
    ++pos;
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }
  if (pos != text.size()) fail("trailing characters after ']'");
  return values;
}

}  // namespace detail

SignedPermutation parse_window(std::string_view text, std::optional<int> expected_n) {
  std::vector<int> values = detail::parse_bracketed_ints(text);
  if (expected_n && static_cast<int>(values.size()) != *expected_n)
    invalid("expected " + std::to_string(*expected_n) + " entries, got " +
            std::to_string(values.size()));
  return SignedPermutation(std::move(values));
}

std::string format_window(const SignedPermutation& a) {
  std::string out = "[";
  for (int i = 1; i <= a.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(a.entry(i));
  }
  out += ']';
  return out;
}

}  // namespace derange
