#include "derange/counting.hpp"

#include <stdexcept>
#include <string>

namespace derange {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw std::invalid_argument(message);
}

void require_min_index(SequenceId id, int n) {
  const int least = sequence_min_index(id);
  if (n < least)
    invalid(std::string(to_string(id)) + " is defined for n >= " + std::to_string(least) +
            ", got " + std::to_string(n));
}

BigInt pow_int(BigInt base, int exponent) {
  BigInt result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

BigInt factorial(int n) {
  if (n < 0) invalid("factorial of negative n");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(int n, int k) {
  if (n < 0) invalid("binomial with negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // Each division is exact: result holds i consecutive-integer products.
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt derangements(int n) {
  if (n < 0) invalid("derangements of negative n");
  // Alternating sum of n!/k!, accumulated from k = n down to 0 so every
  // term stays an exact integer.
  BigInt sum = 0;
  BigInt term = 1;
  for (int k = n; k >= 0; --k) {
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    if (k > 0) term *= k;
  }
  return sum;
}

BigInt derangements_recursive(int n) {
  if (n < 0) invalid("derangements of negative n");
  if (n == 0) return 1;
  if (n == 1) return 0;
  BigInt before = 1;  // d(0)
  BigInt latest = 0;  // d(1)
  for (int m = 2; m <= n; ++m) {
    BigInt next = (m - 1) * (latest + before);
    before = std::move(latest);
    latest = std::move(next);
  }
  return latest;
}

BigInt facet_derangements_ie(int n) {
  if (n < 0) invalid("facet derangements of negative n");
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) {
    const BigInt term = binomial(n, k) * pow_int(2, n - k) * factorial(n - k);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

BigInt facet_derangements_transform(int n) {
  if (n < 0) invalid("facet derangements of negative n");
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k)
    sum += binomial(n, k) * pow_int(2, k) * derangements(k);
  return sum;
}

BigInt facet_derangements_recursive(int n) {
  if (n < 0) invalid("facet derangements of negative n");
  if (n <= 1) return 1;
  BigInt before = 1;  // dh(0)
  BigInt latest = 1;  // dh(1)
  for (int m = 2; m <= n; ++m) {
    BigInt next = (2 * m - 1) * latest + (2 * m - 2) * before;
    before = std::move(latest);
    latest = std::move(next);
  }
  return latest;
}

std::vector<BigInt> rising_binomial_transform(std::span<const BigInt> a, int k, int len) {
  if (k < 0) invalid("rising binomial transform with negative k");
  if (len < 0 || static_cast<size_t>(len) > a.size())
    invalid("rising binomial transform: len must be within the input length");
  std::vector<BigInt> out;
  out.reserve(static_cast<size_t>(len));
  for (int n = 0; n < len; ++n) {
    if (k == 0) {
      out.push_back(a[0]);
      continue;
    }
    BigInt sum = 0;
    for (int i = 0; i <= n; ++i)
      sum += binomial(n, i) * pow_int(k, i) * a[static_cast<size_t>(i)];
    out.push_back(std::move(sum));
  }
  return out;
}

std::pair<BigInt, BigInt> even_odd_derangements(int n) {
  require_min_index(SequenceId::even_derangements, n);
  const BigInt d = derangements(n);
  // e - o = (-1)^(n-1) * (n-1) and e + o = d; d and n-1 have equal parity,
  // so both halves divide out exactly.
  const BigInt gap = (n % 2 == 1) ? BigInt(n - 1) : BigInt(1 - n);
  return {(d + gap) / 2, (d - gap) / 2};
}

std::pair<BigInt, BigInt> even_odd_facet_derangements(int n) {
  require_min_index(SequenceId::direct_facet_derangements, n);
  const BigInt dh = facet_derangements_ie(n);
  // direct - indirect = (-1)^n, so the total being odd makes both exact.
  const BigInt gap = (n % 2 == 0) ? BigInt(1) : BigInt(-1);
  return {(dh + gap) / 2, (dh - gap) / 2};
}

BigInt vertex_fixing_count(int n) {
  require_min_index(SequenceId::vertex_fixing, n);
  BigInt result = 1;
  for (int i = 1; i <= 2 * n - 1; i += 2) result *= i;
  return result;
}

const char* to_string(SequenceId id) {
  switch (id) {
    case SequenceId::ordinary_derangements: return "d";
    case SequenceId::even_derangements: return "e";
    case SequenceId::odd_derangements: return "o";
    case SequenceId::facet_derangements: return "dhat";
    case SequenceId::direct_facet_derangements: return "ehat";
    case SequenceId::indirect_facet_derangements: return "ohat";
    case SequenceId::vertex_fixing: return "vfix";
  }
  return "?";
}

const char* to_string(Method m) {
  switch (m) {
    case Method::formula: return "formula";
    case Method::recursion: return "recursion";
    case Method::oracle: return "oracle";
  }
  return "?";
}

int sequence_min_index(SequenceId id) {
  switch (id) {
    case SequenceId::ordinary_derangements:
    case SequenceId::facet_derangements:
      return 0;
    default:
      return 1;
  }
}

BigInt sequence_value(SequenceId id, int n, Method method) {
  require_min_index(id, n);
  switch (method) {
    case Method::formula:
      break;
    case Method::recursion:
      if (id == SequenceId::ordinary_derangements) return derangements_recursive(n);
      if (id == SequenceId::facet_derangements) return facet_derangements_recursive(n);
      invalid(std::string("no recurrence is defined for ") + to_string(id));
    case Method::oracle:
      invalid("enumeration oracles are dispatched by the caller, not sequence_value");
  }
  switch (id) {
    case SequenceId::ordinary_derangements: return derangements(n);
    case SequenceId::even_derangements: return even_odd_derangements(n).first;
    case SequenceId::odd_derangements: return even_odd_derangements(n).second;
    case SequenceId::facet_derangements: return facet_derangements_ie(n);
    case SequenceId::direct_facet_derangements: return even_odd_facet_derangements(n).first;
    case SequenceId::indirect_facet_derangements: return even_odd_facet_derangements(n).second;
    case SequenceId::vertex_fixing: return vertex_fixing_count(n);
  }
  invalid("unknown sequence id");
}

SequenceTable make_sequence_table(SequenceId id, int start, int count, Method method) {
  if (count < 0) invalid("sequence table with negative length");
  SequenceTable table;
  table.id = id;
  table.start = start;
  table.method = method;
  table.values.reserve(static_cast<size_t>(count));
  for (int n = start; n < start + count; ++n)
    table.values.push_back(sequence_value(id, n, method));
  return table;
}

BigRat limit_ratio(int n, SequenceId id) {
  switch (id) {
    case SequenceId::ordinary_derangements:
      require_min_index(id, n);
      return BigRat(derangements(n), factorial(n));
    case SequenceId::facet_derangements:
      require_min_index(id, n);
      return BigRat(facet_derangements_ie(n), pow_int(2, n) * factorial(n));
    default:
      invalid(std::string("no limit ratio is defined for ") + to_string(id));
  }
}

BigRat limit_constant(SequenceId id) {
  // Partial sums of exp(-1) and exp(-1/2) through degree 60; the omitted
  // alternating tail is below 1/61! < 1e-83.
  BigRat base;
  switch (id) {
    case SequenceId::ordinary_derangements: base = BigRat(1); break;
    case SequenceId::facet_derangements: base = BigRat(1, 2); break;
    default:
      invalid(std::string("no limit constant is defined for ") + to_string(id));
  }
  BigRat sum = 0;
  BigRat term = 1;  // (-base)^k / k!
  for (int k = 0; k <= 60; ++k) {
    sum += term;
    term *= -base;
    term /= k + 1;
  }
  return sum;
}

std::string format_decimal(const BigRat& value, int places) {
  if (places < 0) invalid("format_decimal with negative places");
  BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;

  const BigInt scale = pow_int(10, places);
  const BigInt scaled = num * scale;
  BigInt digits = scaled / den;
  const BigInt remainder = scaled % den;
  const BigInt twice = remainder * 2;
  if (twice > den || (twice == den && digits % 2 != 0)) ++digits;  // half to even

  const BigInt whole = digits / scale;
  const BigInt frac = digits % scale;
  std::string out;
  if (negative && digits != 0) out += '-';
  out += whole.str();
  if (places > 0) {
    std::string frac_digits = frac.str();
    out += '.';
    out += std::string(static_cast<size_t>(places) - frac_digits.size(), '0');
    out += frac_digits;
  }
  return out;
}

}  // namespace derange
