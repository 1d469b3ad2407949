#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "derange/bigint.hpp"

namespace derange {

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Number of permutations of n letters without a fixed point, as the exact
/// alternating sum of the integers n!/k!.
BigInt derangements(int n);

/// Same sequence through the two-term recurrence
/// d(n) = (n-1) * (d(n-1) + d(n-2)), d(0) = 1, d(1) = 0.
BigInt derangements_recursive(int n);

/// Isometries of the n-cube fixing no facet, by inclusion-exclusion over
/// the fixed facet pairs: sum of (-1)^k * C(n,k) * 2^(n-k) * (n-k)!.
BigInt facet_derangements_ie(int n);

/// Same sequence as sum of C(n,k) * 2^k * d(k): choose the coordinates the
/// underlying permutation deranges, sign the deranged block freely, and
/// negate every fixed coordinate.
BigInt facet_derangements_transform(int n);

/// Same sequence through dh(n) = (2n-1)*dh(n-1) + (2n-2)*dh(n-2),
/// dh(0) = dh(1) = 1.
BigInt facet_derangements_recursive(int n);

/// Rising k-binomial transform: r(n) = sum of C(n,i) * k^i * a(i) for k > 0;
/// the k = 0 transform is the constant sequence a(0). Returns the first
/// len terms, requiring len <= a.size(). The k = 2 transform of the
/// derangement numbers is the facet derangement sequence.
std::vector<BigInt> rising_binomial_transform(std::span<const BigInt> a, int k, int len);

/// (even, odd) derangements of n letters, n >= 1. Their difference is
/// (-1)^(n-1) * (n-1); combined with e + o = d(n) both halves are exact.
std::pair<BigInt, BigInt> even_odd_derangements(int n);

/// (direct, indirect) facet derangements of the n-cube, n >= 1. The
/// difference direct - indirect is (-1)^n.
std::pair<BigInt, BigInt> even_odd_facet_derangements(int n);

/// Isometries of the n-cube fixing at least one vertex: (2n-1)!!, n >= 1.
BigInt vertex_fixing_count(int n);

enum class SequenceId {
  ordinary_derangements,         // d
  even_derangements,             // e
  odd_derangements,              // o
  facet_derangements,            // dhat
  direct_facet_derangements,     // ehat
  indirect_facet_derangements,   // ohat
  vertex_fixing,                 // vfix
};

enum class Method { formula, recursion, oracle };

const char* to_string(SequenceId id);
const char* to_string(Method m);

/// Smallest index at which the sequence is defined (0 for d and dhat,
/// 1 for the rest).
int sequence_min_index(SequenceId id);

/// Value by closed formula or recurrence. Method::recursion is available
/// only for d and dhat; enumeration oracles live in the actions and
/// simplex modules and are dispatched by the command-line layer.
BigInt sequence_value(SequenceId id, int n, Method method = Method::formula);

struct SequenceTable {
  SequenceId id = SequenceId::ordinary_derangements;
  int start = 0;
  Method method = Method::formula;
  std::vector<BigInt> values;

  bool operator==(const SequenceTable&) const = default;
};

SequenceTable make_sequence_table(SequenceId id, int start, int count,
                                  Method method = Method::formula);

/// d(n)/n! for the ordinary sequence, dhat(n)/(2^n n!) for the facet
/// sequence; both tend to the matching limit_constant.
BigRat limit_ratio(int n, SequenceId id);

/// e^-1 (ordinary) or e^-1/2 (facet) as an exact rational surrogate: the
/// degree-60 partial sum of the exponential series, within 10^-80 of the
/// true limit, far below any tolerance used here.
BigRat limit_constant(SequenceId id);

/// Decimal rendering with the given number of places, rounding half to
/// even; the result always carries a leading digit and, for places > 0,
/// exactly that many fractional digits.
std::string format_decimal(const BigRat& value, int places);

}  // namespace derange
