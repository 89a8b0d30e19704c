#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "isgal/inverse_semigroup.hpp"
#include "isgal/partial_bijection.hpp"

using namespace isgal;

namespace {

// every partial bijection of {1..m}, by direct enumeration of image vectors
std::vector<PartialBijection> all_maps(int m) {
  std::vector<PartialBijection> out;
  std::vector<int> img(m, 0);
  while (true) {
    bool injective = true;
    for (int i = 0; i < m && injective; ++i)
      for (int j = i + 1; j < m; ++j)
        if (img[i] && img[i] == img[j]) injective = false;
    if (injective) {
      std::vector<std::pair<int, int>> graph;
      for (int i = 0; i < m; ++i)
        if (img[i]) graph.push_back({i + 1, img[i]});
      out.push_back(PartialBijection(m, graph));
    }
    int pos = m - 1;
    while (pos >= 0 && img[pos] == m) img[pos--] = 0;
    if (pos < 0) return out;
    ++img[pos];
  }
}

}  // namespace

TEST_CASE("enumeration count matches the I(m) formula") {
  // |I(m)| = sum over k of C(m,k)^2 k!
  CHECK(all_maps(2).size() == 7);
  CHECK(all_maps(3).size() == 34);
}

TEST_CASE("compose agrees with pointwise application") {
  for (const auto& f : all_maps(3))
    for (const auto& g : all_maps(3)) {
      const PartialBijection fg = compose(f, g);
      for (int x = 1; x <= 3; ++x) {
        const int gx = g.image_of(x);
        const int expected = gx ? f.image_of(gx) : 0;
        CHECK(fg.image_of(x) == expected);
      }
    }
}

TEST_CASE("inverse: f f^-1 f = f and f^-1 is identity-free transport") {
  for (const auto& f : all_maps(3)) {
    const PartialBijection fi = invert(f);
    CHECK(compose(compose(f, fi), f) == f);
    CHECK(compose(f, fi) == PartialBijection::identity_on(3, f.range()));
    CHECK(compose(fi, f) == PartialBijection::identity_on(3, f.domain()));
  }
}

TEST_CASE("construction rejects bad graphs") {
  CHECK_THROWS_AS(PartialBijection(3, {{1, 2}, {3, 2}}), Error);  // not injective
  CHECK_THROWS_AS(PartialBijection(3, {{1, 4}}), Error);          // out of range
  CHECK_THROWS_AS(PartialBijection(3, {{1, 2}, {1, 3}}), Error);  // double assignment
}

TEST_CASE("graph is sorted and rank counts the domain") {
  const PartialBijection f(3, {{3, 1}, {1, 2}});
  CHECK(f.graph() == std::vector<std::pair<int, int>>{{1, 2}, {3, 1}});
  CHECK(f.rank() == 2);
  CHECK(f.domain() == std::vector<int>{1, 3});
  CHECK(f.range() == std::vector<int>{1, 2});
  CHECK_FALSE(f.is_identity_map());
  CHECK(PartialBijection::identity_on(3, {1, 3}).is_identity_map());
}

TEST_CASE("display names on a three-point ground set") {
  CHECK(element_name(PartialBijection(3)) == "I0");
  CHECK(element_name(PartialBijection::identity_on(3, {1, 2})) == "I12");
  CHECK(element_name(PartialBijection(3, {{1, 2}})) == "T12");
  CHECK(element_name(PartialBijection(3, {{1, 2}, {2, 1}})) == "S12");
  CHECK(element_name(PartialBijection(3, {{1, 1}, {2, 3}})) == "D12^13");
  CHECK(element_name(PartialBijection(3, {{1, 3}, {2, 2}})) == "D12^23");
  CHECK(element_name(PartialBijection(3, {{1, 2}, {2, 3}})) == "P12^23");
  CHECK(element_name(PartialBijection(3, {{1, 2}, {2, 1}, {3, 3}})) == "T12^3");
  CHECK(element_name(PartialBijection(3, {{1, 2}, {2, 3}, {3, 1}})) == "S123");
  CHECK(element_name(PartialBijection::identity_on(3, {1, 2, 3})) == "I123");
}
