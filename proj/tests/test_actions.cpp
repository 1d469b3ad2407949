#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "derange/actions.hpp"
#include "oracles.hpp"

using namespace derange;

namespace {

std::vector<std::string> enumerate_windows(int n) {
  std::vector<std::string> out;
  GroupEnumeration(n).for_each(
      [&](const SignedPermutation& a) { out.push_back(format_window(a)); });
  return out;
}

}  // namespace

TEST_CASE("facet action follows signs and stars") {
  const auto central = parse_window("[-1,-2,-3]");
  CHECK(facet_image(central, {1, false}) == FacetLabel{1, true});
  CHECK(facet_image(central, {1, true}) == FacetLabel{1, false});

  const auto id = SignedPermutation::identity(3);
  CHECK(facet_image(id, {2, true}) == FacetLabel{2, true});

  const auto a = parse_window("[2,1,-3]");
  CHECK(facet_image(a, {1, false}) == FacetLabel{2, false});
  CHECK(facet_image(a, {3, false}) == FacetLabel{3, true});
  CHECK(facet_image(a, {3, true}) == FacetLabel{3, false});

  CHECK_THROWS_AS(facet_image(a, {4, false}), std::out_of_range);
  CHECK_THROWS_AS(facet_image(a, {0, false}), std::out_of_range);
}

TEST_CASE("the facet action commutes with taking opposites") {
  for (const auto& a : testutil::all_elements(3)) {
    for (int i = 1; i <= 3; ++i) {
      for (bool starred : {false, true}) {
        const FacetLabel f{i, starred};
        CHECK(facet_image(a, f.opposite()) == facet_image(a, f).opposite());
      }
    }
  }
}

TEST_CASE("facet derangements have no positive fixed entry") {
  CHECK(is_facet_derangement(parse_window("[-1,-2,-3]")));
  CHECK(is_facet_derangement(parse_window("[2,1,-3]")));
  CHECK_FALSE(is_facet_derangement(SignedPermutation::identity(3)));
  CHECK_FALSE(is_facet_derangement(parse_window("[2,-1,3]")));
  // agreement with the definition via the facet action
  for (const auto& a : testutil::all_elements(3)) {
    bool any_fixed = false;
    for (int i = 1; i <= 3; ++i)
      for (bool starred : {false, true})
        if (facet_image(a, {i, starred}) == FacetLabel{i, starred}) any_fixed = true;
    CHECK(is_facet_derangement(a) == !any_fixed);
  }
}

TEST_CASE("fixed facets come in opposite pairs in label order") {
  CHECK(fixed_facets(parse_window("[2,-1,3]")) ==
        std::vector<FacetLabel>{{3, false}, {3, true}});
  CHECK(fixed_facets(parse_window("[1,-2,-3]")) ==
        std::vector<FacetLabel>{{1, false}, {1, true}});
  CHECK(fixed_facets(parse_window("[-1,-2,-3]")).empty());
  CHECK(fixed_facets(SignedPermutation::identity(2)) ==
        std::vector<FacetLabel>{{1, false}, {1, true}, {2, false}, {2, true}});
}

TEST_CASE("vertex action permutes and flips coordinates") {
  const auto central = parse_window("[-1,-2,-3]");
  CHECK(vertex_image(central, {{1, 1, 1}}) == Vertex{{-1, -1, -1}});

  const auto id = SignedPermutation::identity(3);
  CHECK(vertex_image(id, {{1, -1, 1}}) == Vertex{{1, -1, 1}});

  const auto swap = parse_window("[2,1,3]");
  CHECK(vertex_image(swap, {{1, -1, 1}}) == Vertex{{-1, 1, 1}});

  CHECK_THROWS_AS(vertex_image(swap, {{1, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(vertex_image(swap, {{1, 0, 1}}), std::invalid_argument);
}

TEST_CASE("the vertex action is a group action") {
  // (a*b).v = a.(b.v) for every vertex, exhaustively in dimension 2
  const auto elements = testutil::all_elements(2);
  std::vector<Vertex> vertices;
  for (int mask = 0; mask < 4; ++mask)
    vertices.push_back({{mask & 1 ? 1 : -1, mask & 2 ? 1 : -1}});
  for (const auto& a : elements)
    for (const auto& b : elements)
      for (const auto& v : vertices)
        CHECK(vertex_image(compose(a, b), v) == vertex_image(a, vertex_image(b, v)));
}

TEST_CASE("fixes_some_vertex agrees with the exhaustive vertex scan") {
  CHECK(fixes_some_vertex(SignedPermutation::identity(3)));
  CHECK_FALSE(fixes_some_vertex(parse_window("[-1,-2,-3]")));
  CHECK(fixes_some_vertex(parse_window("[2,1,3]")));
  CHECK(fixes_some_vertex(parse_window("[2,-1,3]")) ==
        testutil::fixes_some_vertex_by_scan(parse_window("[2,-1,3]")));
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : testutil::all_elements(n))
      CHECK(fixes_some_vertex(a) == testutil::fixes_some_vertex_by_scan(a));
}

TEST_CASE("facet derangements and vertex derangements differ") {
  // One element deranges all facets yet fixes a vertex; another fixes no
  // vertex yet fixes a facet pair.
  const auto swap = parse_window("[2,1]");
  CHECK(is_facet_derangement(swap));
  CHECK(fixes_some_vertex(swap));

  const auto flip = parse_window("[1,-2]");
  CHECK_FALSE(is_facet_derangement(flip));
  CHECK_FALSE(fixes_some_vertex(flip));
}

TEST_CASE("enumeration emits the documented order") {
  CHECK(enumerate_windows(1) == std::vector<std::string>{"[-1]", "[1]"});
  CHECK(enumerate_windows(2) ==
        std::vector<std::string>{"[-1,-2]", "[-1,2]", "[1,-2]", "[1,2]", "[-2,-1]", "[-2,1]",
                                 "[2,-1]", "[2,1]"});
}

TEST_CASE("enumeration visits each element exactly once") {
  for (int n = 1; n <= 4; ++n) {
    const auto windows = enumerate_windows(n);
    const std::set<std::string> unique(windows.begin(), windows.end());
    CHECK(BigInt(windows.size()) == group_order(n));
    CHECK(unique.size() == windows.size());
  }
  for (int n = 5; n <= 6; ++n) {
    long long count = 0;
    GroupEnumeration(n).for_each([&](const SignedPermutation&) { ++count; });
    CHECK(BigInt(count) == group_order(n));
  }
}

TEST_CASE("enumeration order sorts images before signs, minus before plus") {
  const auto windows = enumerate_windows(3);
  auto key = [](const std::string& text) {
    const auto a = parse_window(text);
    std::vector<int> images, signs;
    for (int i = 1; i <= a.size(); ++i) {
      images.push_back(a.image(i));
      signs.push_back(a.sign(i));
    }
    return std::make_pair(images, signs);
  };
  for (size_t i = 1; i < windows.size(); ++i) CHECK(key(windows[i - 1]) < key(windows[i]));
}

TEST_CASE("prefix slices partition the enumeration") {
  const int n = 4;
  std::vector<std::string> whole;
  GroupEnumeration(n).for_each(
      [&](const SignedPermutation& a) { whole.push_back(format_window(a)); });

  std::vector<std::string> stitched;
  for (int first = 1; first <= n; ++first) {
    const int prefix[] = {first};
    GroupEnumeration(n).for_each_with_prefix(
        prefix, [&](const SignedPermutation& a) { stitched.push_back(format_window(a)); });
  }
  CHECK(stitched == whole);

  const int deep[] = {2, 4};
  std::vector<std::string> slice;
  GroupEnumeration(n).for_each_with_prefix(
      deep, [&](const SignedPermutation& a) { slice.push_back(format_window(a)); });
  CHECK(slice.size() == 2 * 16);  // 2! tails, 2^4 sign masks
  for (const auto& text : slice) {
    const auto a = parse_window(text);
    CHECK(a.image(1) == 2);
    CHECK(a.image(2) == 4);
  }
}

TEST_CASE("invalid prefixes are rejected") {
  GroupEnumeration group(3);
  const auto nothing = [](const SignedPermutation&) {};
  const int repeated[] = {2, 2};
  CHECK_THROWS_AS(group.for_each_with_prefix(repeated, nothing), std::invalid_argument);
  const int out_of_range[] = {4};
  CHECK_THROWS_AS(group.for_each_with_prefix(out_of_range, nothing), std::invalid_argument);
  const int too_long[] = {1, 2, 3, 1};
  CHECK_THROWS_AS(group.for_each_with_prefix(too_long, nothing), std::invalid_argument);
}

TEST_CASE("the ceiling refuses oversized enumerations with a count estimate") {
  CHECK_THROWS_AS(GroupEnumeration(10), std::domain_error);
  try {
    GroupEnumeration(10);
  } catch (const std::domain_error& e) {
    const std::string message = e.what();
    CHECK(message.find("3715891200") != std::string::npos);  // 2^10 * 10!
    CHECK(message.find("ceiling") != std::string::npos);
  }
  CHECK_THROWS_AS(GroupEnumeration(0), std::domain_error);
  CHECK(GroupEnumeration(10, 10).dimension() == 10);  // explicit ceiling raise
  CHECK(GroupEnumeration(9).order() == BigInt("185794560"));
}

TEST_CASE("exhaustive facet derangement counts") {
  CHECK(count_facet_derangements_oracle(1) == 1);
  CHECK(count_facet_derangements_oracle(2) == 5);
  CHECK(count_facet_derangements_oracle(3) == 29);
  CHECK(count_facet_derangements_oracle(4) == 233);
  CHECK(count_facet_derangements_oracle(6) == 27949);
  CHECK_THROWS_AS(count_facet_derangements_oracle(10), std::domain_error);
}

TEST_CASE("exhaustive orientation split of facet derangements") {
  CHECK(count_facet_derangements_by_orientation_oracle(3) ==
        std::pair<std::int64_t, std::int64_t>{14, 15});
  CHECK(count_facet_derangements_by_orientation_oracle(2) ==
        std::pair<std::int64_t, std::int64_t>{3, 2});
}

TEST_CASE("exhaustive vertex-fixing counts match the double factorial") {
  CHECK(count_vertex_fixing_oracle(1) == 1);
  CHECK(count_vertex_fixing_oracle(2) == 3);
  CHECK(count_vertex_fixing_oracle(3) == 15);
  CHECK(count_vertex_fixing_oracle(4) == 105);
  CHECK(count_vertex_fixing_oracle(5) == 945);
  CHECK(count_vertex_fixing_oracle(6) == 10395);
}

TEST_CASE("the n=2 vertex-fixing elements are the identity and the diagonal mirrors") {
  std::vector<std::string> fixing;
  enumerate_group(2).for_each([&](const SignedPermutation& a) {
    if (fixes_some_vertex(a)) fixing.push_back(format_window(a));
  });
  CHECK(fixing == std::vector<std::string>{"[1,2]", "[-2,-1]", "[2,1]"});
}
