#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "isgal/builders.hpp"
#include "isgal/inverse_semigroup.hpp"

using namespace isgal;

namespace {

// set-closure oracle on raw partial bijections, independent of close()
std::set<PartialBijection> brute_closure(std::vector<PartialBijection> gens) {
  std::set<PartialBijection> out(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PartialBijection> cur(out.begin(), out.end());
    for (const auto& f : cur) grew |= out.insert(invert(f)).second;
    for (const auto& f : cur)
      for (const auto& g : cur) grew |= out.insert(compose(f, g)).second;
  }
  return out;
}

}  // namespace

TEST_CASE("close matches a brute-force set closure") {
  const std::vector<PartialBijection> gens = {
      PartialBijection(3, {{1, 2}, {2, 1}}),           // S12
      PartialBijection(3, {{1, 1}, {2, 3}}),           // D12^13
      PartialBijection(3, {{1, 2}, {2, 3}, {3, 1}}),   // S123
  };
  const InverseSemigroup s = InverseSemigroup::close(gens);
  const auto oracle = brute_closure(gens);
  CHECK(s.size() == static_cast<int>(oracle.size()));
  for (const auto& f : s.realization()) CHECK(oracle.count(f) == 1);
  // products in the table agree with composition of the realization
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      const PartialBijection p = compose(s.realization()[a], s.realization()[b]);
      CHECK(s.realization()[s.mul(a, b)] == p);
    }
}

TEST_CASE("symmetric inverse monoid sizes and structure") {
  const InverseSemigroup s2 = symmetric_inverse_monoid(2);
  const InverseSemigroup s3 = symmetric_inverse_monoid(3);
  CHECK(s2.size() == 7);
  CHECK(s3.size() == 34);
  CHECK(s3.idempotents().size() == 8);       // one per subset of {1,2,3}
  CHECK(s3.max_elements().size() == 6);      // the permutations
  CHECK(s3.max_idempotents().size() == 1);   // the identity map
  REQUIRE(s3.identity().has_value());
  CHECK(s3.name(*s3.identity()) == "I123");
}

TEST_CASE("natural partial order: s <= t iff s = t restricted to an idempotent") {
  const InverseSemigroup s = symmetric_inverse_monoid(3);
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      bool oracle = false;
      for (int f : s.idempotents())
        if (s.mul(b, f) == a) oracle = true;
      CHECK(s.leq(a, b) == oracle);
    }
  // order on realizations = graph containment
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      const auto ga = s.realization()[a].graph();
      const auto gb = s.realization()[b].graph();
      const bool contained = std::includes(gb.begin(), gb.end(), ga.begin(), ga.end());
      CHECK(s.leq(a, b) == contained);
    }
}

TEST_CASE("restricted product is defined exactly on matching idempotents") {
  const InverseSemigroup s = symmetric_inverse_monoid(3);
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      const auto r = s.restricted_product(a, b);
      const bool defined = s.mul(s.inv(a), a) == s.mul(b, s.inv(b));
      CHECK(r.has_value() == defined);
      if (r) CHECK(*r == s.mul(a, b));
    }
}

TEST_CASE("from_table accepts groups and rejects non-inverse tables") {
  // Z3
  std::vector<std::vector<int>> z3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  const InverseSemigroup g = InverseSemigroup::from_table({"0", "1", "2"}, z3);
  CHECK(g.inv(1) == 2);
  CHECK(g.idempotents() == std::vector<int>{0});
  // left-zero semigroup: associative but not inverse (no unique inverses)
  std::vector<std::vector<int>> lz = {{0, 0}, {1, 1}};
  CHECK_THROWS_AS(InverseSemigroup::from_table({"a", "b"}, lz), Error);
  // non-associative table
  std::vector<std::vector<int>> bad = {{0, 1}, {0, 0}};
  CHECK_THROWS_AS(InverseSemigroup::from_table({"a", "b"}, bad), Error);
}

TEST_CASE("index_of and names") {
  const InverseSemigroup s = symmetric_inverse_monoid(3);
  CHECK(s.name(s.index_of("S12")) == "S12");
  CHECK(s.name(s.index_of("D12^13")) == "D12^13");
  CHECK_THROWS_AS(s.index_of("nope"), Error);
}
