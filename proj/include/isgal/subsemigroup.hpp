#ifndef ISGAL_SUBSEMIGROUP_HPP
#define ISGAL_SUBSEMIGROUP_HPP

#include <vector>

#include "isgal/inverse_semigroup.hpp"

namespace isgal {

/// A subset of a parent semigroup, closed under mul and inv.
/// The parent must outlive the subsemigroup.
struct Subsemigroup {
  const InverseSemigroup* parent = nullptr;
  std::vector<int> members;  // sorted, distinct

  bool contains(int s) const;
  bool operator==(const Subsemigroup&) const = default;

  /// Standalone semigroup on the member set, with the index map old -> new.
  std::pair<InverseSemigroup, std::vector<int>> extract() const;
};

/// Closure of a seed subset under mul and inv inside S.
Subsemigroup close_subset(const InverseSemigroup& s, std::vector<int> seed);

bool is_closed_subset(const InverseSemigroup& s, const std::vector<int>& members);
bool is_full(const Subsemigroup& t);
bool is_normal(const Subsemigroup& t);      // full and s^-1 T s in T for all s
bool is_clifford_subset(const Subsemigroup& t);
bool is_clifford(const InverseSemigroup& s);

/// All full inverse subsemigroups T with required ⊆ T, by breadth-first
/// closure lattice: seed = close(required ∪ E(S)), expand by one maximal
/// element at a time, dedupe by member set. Result sorted canonically.
std::vector<Subsemigroup> enumerate_full_subsemigroups(const InverseSemigroup& s,
                                                       const std::vector<int>& required);

}  // namespace isgal

#endif
