#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "isgal/builders.hpp"
#include "isgal/quotient.hpp"

using namespace isgal;

namespace {

// oracle for group quotients: cosets of a normal subgroup
std::set<std::vector<int>> cosets(const InverseSemigroup& g, const std::vector<int>& h) {
  std::set<std::vector<int>> out;
  for (int x = 0; x < g.size(); ++x) {
    std::vector<int> coset;
    for (int n : h) coset.push_back(g.mul(x, n));
    std::sort(coset.begin(), coset.end());
    out.insert(coset);
  }
  return out;
}

std::vector<Subsemigroup> all_subgroups(const InverseSemigroup& g) {
  std::vector<Subsemigroup> out;
  for (int mask = 1; mask < (1 << g.size()); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < g.size(); ++i)
      if (mask & (1 << i)) members.push_back(i);
    if (is_closed_subset(g, members)) out.push_back(Subsemigroup{&g, members});
  }
  return out;
}

}  // namespace

TEST_CASE("group quotients by every subgroup match the coset oracle") {
  for (const char* name : {"Z4", "Z2xZ2", "S3"}) {
    const InverseSemigroup g = named_group(name);
    for (const Subsemigroup& h : all_subgroups(g)) {
      if (!is_normal(h)) {
        CHECK_THROWS_AS(quotient(g, h), Error);
        continue;
      }
      const QuotientStructure q = quotient(g, h);
      const auto oracle = cosets(g, h.members);
      CHECK(q.num_classes() == static_cast<int>(oracle.size()));
      for (const auto& cls : q.classes) CHECK(oracle.count(cls) == 1);
      CHECK(q.is_inverse_semigroup);
      const InverseSemigroup gq = q.as_inverse_semigroup();
      // the quotient multiplies like the cosets do
      for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
          CHECK(q.class_of[g.mul(a, b)] == gq.mul(q.class_of[a], q.class_of[b]));
    }
  }
}

TEST_CASE("Z4 mod its two-element subgroup is Z2") {
  const InverseSemigroup g = named_group("Z4");
  const Subsemigroup h = close_subset(g, {g.index_of("2")});
  const QuotientStructure q = quotient(g, h);
  REQUIRE(q.num_classes() == 2);
  const InverseSemigroup z2 = q.as_inverse_semigroup();
  const int e = q.class_of[g.index_of("0")];
  const int a = q.class_of[g.index_of("1")];
  CHECK(e != a);
  CHECK(z2.mul(a, a) == e);
  CHECK(z2.mul(e, a) == a);
}

TEST_CASE("coset product does not depend on representatives or mediators") {
  const InverseSemigroup s = symmetric_inverse_monoid(2);
  std::vector<int> seed = s.idempotents();
  seed.push_back(s.index_of("T12"));
  const Subsemigroup t = close_subset(s, seed);
  REQUIRE(is_normal(t));
  const QuotientStructure q = quotient(s, t);
  const OrderedGroupoid g = esn_groupoid(s);
  // for composable class pairs, exhaust every representative pair (a, b)
  // and every mediating m in T with r(m) <= d(a), d(m) = r(b): the class of
  // (a|r(m)) . m . b must be the table entry, whichever choices are made
  int exercised = 0;
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      const int expected = q.class_product[q.class_of[a]][q.class_of[b]];
      if (expected == -1) continue;
      for (int m : t.members) {
        if (!g.leq[g.ran(m)][g.dom(a)] || g.dom(m) != g.ran(b)) continue;
        const int ra = g.restriction(a, g.ran(m));
        const int prod = g.pmul[g.pmul[ra][m]][b];
        REQUIRE(prod != -1);
        CHECK(q.class_of[prod] == expected);
        ++exercised;
      }
    }
  CHECK(exercised > 10);  // the loop really ran
}

TEST_CASE("the two congruences coincide exactly on Clifford subobjects") {
  const InverseSemigroup s = symmetric_inverse_monoid(2);
  const OrderedGroupoid g = esn_groupoid(s);

  // Clifford H: the idempotents
  std::vector<int> idem = s.idempotents();
  std::sort(idem.begin(), idem.end());
  const CongruenceReport r1 = compare_congruences(g, SubgroupoidH{&g, idem});
  CHECK(r1.equiv_refines_sim);
  CHECK(r1.coincide);

  // non-Clifford H: idempotents plus T12 (closure adds T21)
  std::vector<int> seed = s.idempotents();
  seed.push_back(s.index_of("T12"));
  const Subsemigroup t = close_subset(s, seed);
  REQUIRE_FALSE(is_clifford_subset(t));
  const CongruenceReport r2 = compare_congruences(g, SubgroupoidH{&g, t.members});
  CHECK(r2.equiv_refines_sim);
  CHECK_FALSE(r2.coincide);
}

TEST_CASE("a groupoid quotient can fail to be an inverse semigroup") {
  // quotient of the non-inductive six-element groupoid by its identities:
  // the relation is trivial, so the quotient is the groupoid itself and
  // stays non-inductive
  const OrderedGroupoid g = example_32_groupoid(Field::rationals()).groupoid();
  std::vector<int> ids = g.identities();
  std::sort(ids.begin(), ids.end());
  const SubgroupoidH h{&g, ids};
  REQUIRE(is_normal_subgroupoid(h));
  const QuotientStructure q = groupoid_quotient(g, h);
  CHECK(q.num_classes() == g.size());
  CHECK_FALSE(q.is_inverse_semigroup);
  CHECK_THROWS_AS(q.as_inverse_semigroup(), Error);
}
