#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "isgal/builders.hpp"
#include "isgal/subsemigroup.hpp"

using namespace isgal;

namespace {

// oracle: all full subsemigroups containing `required`, by trying every
// subset of the maximal elements and testing closure directly
std::set<std::vector<int>> brute_full_lattice(const InverseSemigroup& s,
                                              std::vector<int> required) {
  for (int e : s.idempotents()) required.push_back(e);
  const Subsemigroup base = close_subset(s, required);
  std::vector<int> extra;
  for (int x = 0; x < s.size(); ++x)
    if (!base.contains(x)) extra.push_back(x);
  std::set<std::vector<int>> out;
  const int k = static_cast<int>(extra.size());
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> members = base.members;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) members.push_back(extra[i]);
    std::sort(members.begin(), members.end());
    if (is_closed_subset(s, members)) out.insert(members);
  }
  return out;
}

}  // namespace

TEST_CASE("full subsemigroup lattice of I(3) matches brute force") {
  const InverseSemigroup s = symmetric_inverse_monoid(3);
  std::vector<int> required;
  const std::vector<int> max = s.max_elements();
  for (int x = 0; x < s.size(); ++x)
    if (!std::binary_search(max.begin(), max.end(), x)) required.push_back(x);
  const auto lattice = enumerate_full_subsemigroups(s, required);
  const auto oracle = brute_full_lattice(s, required);
  CHECK(lattice.size() == oracle.size());
  for (const auto& t : lattice) {
    CHECK(oracle.count(t.members) == 1);
    CHECK(is_full(t));
  }
  // the permutation part ranges over the subgroup lattice of S_3: 6 subgroups
  CHECK(lattice.size() == 6);
}

TEST_CASE("closure, fullness and extraction") {
  const InverseSemigroup s = symmetric_inverse_monoid(3);
  // Z2 with zero: S12 and the empty map generate {S12, I12, I0}
  const Subsemigroup t = close_subset(s, {s.index_of("S12"), s.index_of("I0")});
  CHECK(t.members.size() == 3);
  CHECK(t.contains(s.index_of("I12")));
  CHECK_FALSE(is_full(t));
  CHECK(is_clifford_subset(t));
  auto [small, index_map] = t.extract();
  CHECK(small.size() == 3);
  for (size_t i = 0; i < t.members.size(); ++i)
    CHECK(small.name(index_map[t.members[i]]) == s.name(t.members[i]));
  // extracted products agree with the parent
  for (int a : t.members)
    for (int b : t.members)
      CHECK(small.mul(index_map[a], index_map[b]) == index_map[s.mul(a, b)]);
}

TEST_CASE("normality in a group reduces to normal subgroups") {
  const InverseSemigroup g = named_group("S3");
  // index-2 subgroup (the rotations) is normal, a reflection subgroup is not
  std::vector<Subsemigroup> subgroups;
  for (int mask = 0; mask < (1 << g.size()); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < g.size(); ++i)
      if (mask & (1 << i)) members.push_back(i);
    if (!members.empty() && is_closed_subset(g, members))
      subgroups.push_back(Subsemigroup{&g, members});
  }
  CHECK(subgroups.size() == 6);  // S_3 has 6 subgroups
  int normal = 0;
  for (const auto& h : subgroups) {
    // oracle: g h g^-1 inside h for all g
    bool oracle = true;
    for (int x = 0; x < g.size(); ++x)
      for (int h_el : h.members)
        if (!h.contains(g.mul(g.mul(x, h_el), g.inv(x)))) oracle = false;
    CHECK(is_normal(h) == oracle);
    if (oracle) ++normal;
  }
  CHECK(normal == 3);  // trivial, rotations, whole group
}

TEST_CASE("clifford means idempotents are central") {
  CHECK(is_clifford(named_group("Z4")));
  CHECK(is_clifford(named_group("Z2xZ2")));
  CHECK_FALSE(is_clifford(symmetric_inverse_monoid(2)));
  const InverseSemigroup s = symmetric_inverse_monoid(3);
  // oracle on subsets: clifford iff every member commutes with every idempotent
  const Subsemigroup t = close_subset(s, {s.index_of("S123")});
  CHECK(is_clifford_subset(t));
  const Subsemigroup u = close_subset(s, {s.index_of("T12")});
  CHECK_FALSE(is_clifford_subset(u));
}
