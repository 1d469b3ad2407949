#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "derange/signed_perm.hpp"
#include "oracles.hpp"

using namespace derange;

namespace {

template <typename F>
std::string thrown_message(F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "<no exception>";
}

bool mentions(const std::string& message, const std::string& needle) {
  return message.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("identity fixes every direction with positive sign") {
  const auto id = SignedPermutation::identity(3);
  CHECK(id.size() == 3);
  for (int i = 1; i <= 3; ++i) {
    CHECK(id.image(i) == i);
    CHECK(id.sign(i) == 1);
    CHECK(id.entry(i) == i);
  }
  CHECK(format_window(id) == "[1,2,3]");
  CHECK(thrown_message([] { SignedPermutation::identity(0); }) != "<no exception>");
}

TEST_CASE("window accessors split entries into image and sign") {
  const auto a = parse_window("[2,-1,3]");
  CHECK(a.size() == 3);
  CHECK(a.image(1) == 2);
  CHECK(a.sign(1) == 1);
  CHECK(a.image(2) == 1);
  CHECK(a.sign(2) == -1);
  CHECK(a.entry(2) == -1);
  CHECK(a.image(3) == 3);
  CHECK(a.sign(3) == 1);
}

TEST_CASE("construction validates the window") {
  CHECK(mentions(thrown_message([] { SignedPermutation({2, 2, 1}); }), "index 2 repeated"));
  CHECK(mentions(thrown_message([] { SignedPermutation({2, -2, 1}); }), "index 2 repeated"));
  CHECK(mentions(thrown_message([] { SignedPermutation({2, 0, 1}); }), "zero"));
  CHECK(mentions(thrown_message([] { SignedPermutation({4, 1, 2}); }), "out of range"));
  CHECK(mentions(thrown_message([] { SignedPermutation({}); }), "empty"));
  CHECK_THROWS_AS(SignedPermutation({2, 2, 1}), std::invalid_argument);
}

TEST_CASE("parser accepts optional spaces after commas") {
  CHECK(parse_window("[2, 1, -3]") == parse_window("[2,1,-3]"));
  CHECK(parse_window("[1]").size() == 1);
  CHECK(parse_window("[-1]").entry(1) == -1);
}

TEST_CASE("parser names the offending token") {
  CHECK(mentions(thrown_message([] { parse_window("2,1"); }), "expected '['"));
  CHECK(mentions(thrown_message([] { parse_window("[2,1"); }), "expected ',' or ']'"));
  CHECK(mentions(thrown_message([] { parse_window("[2,,1]"); }), "expected an integer"));
  CHECK(mentions(thrown_message([] { parse_window("[2 ,1]"); }), "unexpected character ' '"));
  CHECK(mentions(thrown_message([] { parse_window("[2,1] "); }), "trailing characters"));
  CHECK(mentions(thrown_message([] { parse_window("[]"); }), "empty list"));
  CHECK(mentions(thrown_message([] { parse_window("[2,x]"); }), "expected an integer"));
  CHECK(mentions(thrown_message([] { parse_window("[99999999999]"); }), "out of range"));
  CHECK(mentions(thrown_message([] { parse_window("[2,1,3]", 4); }),
                 "expected 4 entries, got 3"));
  CHECK(parse_window("[2,1,3]", 3).size() == 3);
}

TEST_CASE("format and parse are mutually inverse on every element up to n=4") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& a : testutil::all_elements(n)) {
      CAPTURE(format_window(a));
      CHECK(parse_window(format_window(a)) == a);
    }
  }
}

TEST_CASE("composition applies the right factor first") {
  const auto rotation = compose(parse_window("[1,2,-3]"), parse_window("[2,1,3]"));
  CHECK(format_window(rotation) == "[2,1,-3]");

  const auto swap = parse_window("[2,1,3]");
  CHECK(compose(swap, swap) == SignedPermutation::identity(3));

  CHECK(mentions(thrown_message([] {
                   compose(SignedPermutation::identity(2), SignedPermutation::identity(3));
                 }),
                 "size mismatch"));
}

TEST_CASE("inverse transposes the signed matrix") {
  CHECK(format_window(inverse(parse_window("[2,-1,3]"))) == "[-2,1,3]");
  CHECK(inverse(SignedPermutation::identity(4)) == SignedPermutation::identity(4));

  // Transpose check: the matrix of the inverse is the transpose of the
  // matrix, entry for entry.
  for (const auto& a : testutil::all_elements(3)) {
    const auto forward = testutil::matrix_of(a);
    const auto backward = testutil::matrix_of(inverse(a));
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) CHECK(backward[r][c] == forward[c][r]);
  }
}

TEST_CASE("group axioms hold on random elements") {
  std::mt19937 rng(20240817);
  for (int n = 2; n <= 6; ++n) {
    const auto id = SignedPermutation::identity(n);
    for (int trial = 0; trial < 12; ++trial) {
      const auto a = testutil::random_signed_permutation(rng, n);
      const auto b = testutil::random_signed_permutation(rng, n);
      const auto c = testutil::random_signed_permutation(rng, n);
      CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
      CHECK(compose(a, id) == a);
      CHECK(compose(id, a) == a);
      CHECK(compose(a, inverse(a)) == id);
      CHECK(compose(inverse(a), a) == id);
    }
  }
}

TEST_CASE("determinant matches known values") {
  CHECK(determinant_sign(SignedPermutation::identity(4)) == 1);
  CHECK(determinant_sign(parse_window("[2,-1,3]")) == 1);
  CHECK(determinant_sign(parse_window("[-1,-2,-3]")) == -1);
  CHECK(determinant_sign(parse_window("[-1,-2]")) == 1);
  CHECK(determinant_sign(parse_window("[2,1,3]")) == -1);
}

TEST_CASE("determinant is multiplicative on every pair up to n=4") {
  for (int n = 1; n <= 4; ++n) {
    const auto elements = testutil::all_elements(n);
    for (const auto& a : elements)
      for (const auto& b : elements)
        CHECK(determinant_sign(compose(a, b)) == determinant_sign(a) * determinant_sign(b));
  }
}

TEST_CASE("exactly half of each group is direct") {
  for (int n = 1; n <= 5; ++n) {
    long long direct = 0, total = 0;
    GroupEnumeration(n).for_each([&](const SignedPermutation& a) {
      ++total;
      if (determinant_sign(a) > 0) ++direct;
    });
    CHECK(total == 2 * direct);
  }
}

TEST_CASE("central inversion is recognized exactly") {
  CHECK(is_central_inversion(parse_window("[-1,-2,-3]")));
  CHECK(is_central_inversion(parse_window("[-1]")));
  CHECK_FALSE(is_central_inversion(parse_window("[1,-2,-3]")));
  CHECK_FALSE(is_central_inversion(parse_window("[-2,-1,-3]")));
  CHECK_FALSE(is_central_inversion(SignedPermutation::identity(3)));
}

TEST_CASE("cycle decomposition is canonical") {
  const auto d = cycle_decomposition(parse_window("[2,-1,3]"));
  REQUIRE(d.cycles.size() == 2);
  CHECK(d.cycles[0].support == std::vector<int>{1, 2});
  CHECK(d.cycles[0].signs == std::vector<int>{1, -1});
  CHECK(d.cycles[0].negative());
  CHECK(d.cycles[1].support == std::vector<int>{3});
  CHECK(d.cycles[1].signs == std::vector<int>{1});
  CHECK_FALSE(d.cycles[1].negative());

  const auto id3 = cycle_decomposition(SignedPermutation::identity(3));
  CHECK(id3.cycles.size() == 3);
  for (const auto& cycle : id3.cycles) {
    CHECK(cycle.length() == 1);
    CHECK_FALSE(cycle.negative());
  }

  const auto central = cycle_decomposition(parse_window("[-1,-2,-3]"));
  CHECK(central.cycles.size() == 3);
  for (const auto& cycle : central.cycles) CHECK(cycle.negative());
}

TEST_CASE("two windows with equal supports but different signs stay distinct") {
  // Both cycles have support {1,2} and are negative; the per-position
  // signs are what tells them apart.
  const auto first = cycle_decomposition(parse_window("[2,-1]"));
  const auto second = cycle_decomposition(parse_window("[-2,1]"));
  CHECK(first.cycles[0].support == second.cycles[0].support);
  CHECK(first.cycles[0].negative() == second.cycles[0].negative());
  CHECK(first != second);
  CHECK(reconstruct(first) == parse_window("[2,-1]"));
  CHECK(reconstruct(second) == parse_window("[-2,1]"));
}

TEST_CASE("cycle decomposition reconstructs every element up to n=4") {
  for (int n = 3; n <= 4; ++n) {
    for (const auto& a : testutil::all_elements(n)) {
      const auto d = cycle_decomposition(a);
      CHECK(d.n == n);
      int covered = 0;
      int previous_min = 0;
      for (const auto& cycle : d.cycles) {
        covered += cycle.length();
        // support starts at its minimum, cycles ordered by that minimum
        CHECK(cycle.support.front() == *std::min_element(cycle.support.begin(),
                                                         cycle.support.end()));
        CHECK(cycle.support.front() > previous_min);
        previous_min = cycle.support.front();
      }
      CHECK(covered == n);
      CHECK(reconstruct(d) == a);
    }
  }
}

TEST_CASE("reconstruct validates its input") {
  CycleDecomposition overlapping;
  overlapping.n = 2;
  overlapping.cycles = {{{1, 2}, {1, 1}}, {{2}, {1}}};
  CHECK(mentions(thrown_message([&] { reconstruct(overlapping); }), "overlap"));

  CycleDecomposition missing;
  missing.n = 3;
  missing.cycles = {{{1, 2}, {1, 1}}};
  CHECK(mentions(thrown_message([&] { reconstruct(missing); }), "cover"));

  CycleDecomposition malformed;
  malformed.n = 2;
  malformed.cycles = {{{1, 2}, {1}}};
  CHECK(mentions(thrown_message([&] { reconstruct(malformed); }), "malformed"));
}

TEST_CASE("facet labels print with a star for the negative side") {
  CHECK(to_string(FacetLabel{3, false}) == "3");
  CHECK(to_string(FacetLabel{3, true}) == "3*");
  CHECK(FacetLabel{2, false}.opposite() == FacetLabel{2, true});
  CHECK(FacetLabel{2, true}.opposite() == FacetLabel{2, false});
}
