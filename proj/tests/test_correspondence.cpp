#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "isgal/builders.hpp"
#include "isgal/correspondence.hpp"

using namespace isgal;

namespace {

int count_subgroups(const InverseSemigroup& g) {
  int count = 0;
  for (int mask = 1; mask < (1 << g.size()); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < g.size(); ++i)
      if (mask & (1 << i)) members.push_back(i);
    if (is_closed_subset(g, members)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("group correspondences are the subgroup lattices") {
  // for the regular action of a group, the correspondence pairs subgroups
  // with their coset partitions
  for (const char* name : {"Z2", "Z4", "Z2xZ2", "S3"}) {
    const InverseSemigroup g = named_group(name);
    const Action b = group_regular_example(g, Field::rationals());
    const CorrespondenceReport rep = correspondence(b);
    CHECK(rep.full_subsemigroup_count == count_subgroups(g));
    CHECK(static_cast<int>(rep.pairs.size()) == count_subgroups(g));
    // each pair's partition is the right-coset partition of its subgroup,
    // because the regular action multiplies on the left
    for (const auto& p : rep.pairs) {
      std::set<std::vector<int>> cosets;
      for (int x = 0; x < g.size(); ++x) {
        std::vector<int> coset;
        for (int h : p.subsemigroup.members) coset.push_back(g.mul(h, x) + 1);
        std::sort(coset.begin(), coset.end());
        cosets.insert(coset);
      }
      std::set<std::vector<int>> blocks(p.subalgebra.blocks.begin(), p.subalgebra.blocks.end());
      CHECK(blocks == cosets);
    }
  }
}

TEST_CASE("correspondence of the small bounded-rank action") {
  // rank <= 1 maps on two points acting on one point per singleton
  const Action b = bounded_rank_example(2, 1, Field::rationals());
  CHECK(b.semigroup().size() == 5);
  const CorrespondenceReport rep = correspondence(b);
  // two partitions of two points; both correspond
  CHECK(rep.pairs.size() == 2);
  CHECK(rep.rejected.empty());
  CHECK(rep.full_subsemigroup_count == 2);
  CHECK(rep.pairs.front().subalgebra.str() == "{1}{2}");
  CHECK(rep.pairs.back().subalgebra.str() == "{1,2}");
  // the finer partition belongs to the smaller subsemigroup
  CHECK(rep.pairs.front().subsemigroup.members.size() <
        rep.pairs.back().subsemigroup.members.size());
}

TEST_CASE("rejected subalgebras carry reasons and witnesses") {
  const Action b = paper_example(Field::rationals());
  const CorrespondenceReport rep = correspondence(b);
  CHECK(rep.pairs.size() == 31);
  CHECK(rep.candidate_subalgebra_count == 203);
  CHECK(rep.rejected.size() == 203 - 31);
  for (const auto& r : rep.rejected) {
    CHECK((r.reason == "not beta-strong" || r.reason == "not separable"));
    CHECK_FALSE(r.witness.empty());
  }
  // the partition gluing two points of one ideal with none of the pairing
  // structure is rejected
  bool found = false;
  for (const auto& r : rep.rejected)
    if (r.subalgebra.str() == "{1,3}{2}{4}{5}{6}") found = true;
  CHECK(found);
}

TEST_CASE("the survey of normal Clifford members") {
  const Action b = group_regular_example(named_group("Z4"), Field::rationals());
  const auto survey = normal_clifford_survey(b);
  CHECK(survey.size() == 3);  // all three subgroups of Z4
  for (const auto& entry : survey) {
    CHECK(entry.quotient_size ==
          4 / static_cast<int>(entry.subsemigroup.members.size()));
    CHECK(entry.galois);
  }
}
