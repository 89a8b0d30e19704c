#include "isgal/correspondence.hpp"

#include <algorithm>
#include <map>

namespace isgal {
namespace {

std::vector<int> non_maximal_part(const InverseSemigroup& s) {
  std::vector<int> out;
  const std::vector<int> max = s.max_elements();
  for (int x = 0; x < s.size(); ++x)
    if (!std::binary_search(max.begin(), max.end(), x)) out.push_back(x);
  return out;
}

bool pair_less(const CorrespondencePair& a, const CorrespondencePair& b) {
  if (a.subalgebra.num_blocks() != b.subalgebra.num_blocks())
    return a.subalgebra.num_blocks() > b.subalgebra.num_blocks();
  return a.subalgebra.blocks < b.subalgebra.blocks;
}

}  // namespace

CorrespondenceReport correspondence(const Action& b) {
  const InverseSemigroup& s = b.semigroup();
  ActionReport valid = validate_action(b);
  for (const auto& c : valid.checks)
    if (!c.ok) throw Error("correspondence: invalid action: " + c.name + ": " + c.witness);
  if (!is_orthogonal(b)) throw Error("correspondence: action is not orthogonal");
  for (int e : s.max_idempotents())
    if (b.support(e).empty())
      throw Error("correspondence: maximal idempotent " + s.name(e) + " has zero ideal");
  if (!find_galois_coordinates(b))
    throw Error("correspondence: the extension is not Galois over the fixed subalgebra");

  CorrespondenceReport rep;

  // direction 1: T -> fixed subalgebra of the restriction
  const std::vector<Subsemigroup> lattice = enumerate_full_subsemigroups(s, non_maximal_part(s));
  rep.full_subsemigroup_count = static_cast<int>(lattice.size());
  std::map<std::vector<std::vector<int>>, std::vector<int>> by_algebra;  // blocks -> members
  for (const Subsemigroup& t : lattice) {
    const PartitionSubalgebra fixed = fixed_of_restriction(b, t);
    if (by_algebra.count(fixed.blocks))
      throw Error("correspondence: two subsemigroups fix the same subalgebra " + fixed.str());
    by_algebra[fixed.blocks] = t.members;
  }

  // direction 2: admissible B -> stabilizer
  const std::vector<PartitionSubalgebra> candidates =
      enumerate_partition_subalgebras(b.algebra());
  rep.candidate_subalgebra_count = static_cast<int>(candidates.size());
  for (const PartitionSubalgebra& cand : candidates) {
    std::string witness;
    SeparabilityResult sep = separability_check(
        cand, PartitionSubalgebra(b.algebra(), {[&] {
          std::vector<int> all;
          for (int i = 1; i <= b.algebra().n; ++i) all.push_back(i);
          return all;
        }()}));
    if (!sep.separable || !sep.supported) {
      rep.rejected.push_back({cand, "not separable", sep.note});
      continue;
    }
    if (!is_beta_strong(b, cand, &witness)) {
      rep.rejected.push_back({cand, "not beta-strong", witness});
      continue;
    }
    const Subsemigroup tb = stabilizer(b, cand);

    // round trip B -> T_B -> fixed: must return B (theorem violation otherwise)
    const PartitionSubalgebra back = fixed_of_restriction(b, tb);
    if (!(back == cand))
      throw Error("correspondence: round trip broke at subalgebra " + cand.str() + " -> " +
                  back.str());
    auto hit = by_algebra.find(cand.blocks);
    if (hit == by_algebra.end())
      throw Error("correspondence: stabilized subalgebra " + cand.str() +
                  " missing from the subsemigroup direction");
    if (hit->second != tb.members)
      throw Error("correspondence: directions disagree at subalgebra " + cand.str());
    rep.pairs.push_back({tb, cand});
  }

  // the other round trip: every T must appear among the stabilizers
  if (rep.pairs.size() != by_algebra.size())
    throw Error("correspondence: some full subsemigroup fixes a rejected subalgebra");

  std::sort(rep.pairs.begin(), rep.pairs.end(), pair_less);
  return rep;
}

std::vector<SurveyEntry> normal_clifford_survey(const Action& b) {
  const InverseSemigroup& s = b.semigroup();
  std::vector<SurveyEntry> out;
  for (const Subsemigroup& t : enumerate_full_subsemigroups(s, non_maximal_part(s))) {
    if (!is_normal(t) || !is_clifford_subset(t)) continue;
    SurveyEntry entry{t, 0, false};
    QuotientActionResult q = quotient_action(b, t);
    entry.quotient_size = q.quotient.num_classes();
    entry.galois = find_galois_coordinates(q.action).has_value() && is_orthogonal(q.action);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace isgal
