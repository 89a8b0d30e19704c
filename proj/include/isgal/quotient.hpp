#ifndef ISGAL_QUOTIENT_HPP
#define ISGAL_QUOTIENT_HPP

#include <string>
#include <vector>

#include "isgal/groupoid.hpp"
#include "isgal/subsemigroup.hpp"

namespace isgal {

// Quotient of an ordered groupoid by a normal ordered subgroupoid H.
// a ~ b iff there are x, y, u, v in H with x.a.y and u.b.v defined,
// x.a.y <= b and u.b.v <= a.  Classes are ordered by least member index
// and named after their least member.
struct QuotientStructure {
  OrderedGroupoid parent;                   // groupoid view of the quotiented object
  std::vector<int> normal_members;          // H (or T), parent element indices
  std::vector<std::vector<int>> classes;    // each sorted; list sorted by least member
  std::vector<int> class_of;                // parent element -> class index
  std::vector<std::string> class_names;     // "[least-member-name]"
  std::vector<std::vector<bool>> class_leq; // <=_H
  std::vector<std::vector<int>> class_product; // -1 where undefined
  std::vector<int> class_inv;
  bool is_inverse_semigroup = false;        // idempotent classes form a meet semilattice

  int num_classes() const { return static_cast<int>(classes.size()); }
  OrderedGroupoid as_groupoid() const;
  // total pseudoproduct structure; requires is_inverse_semigroup
  InverseSemigroup as_inverse_semigroup() const;
};

QuotientStructure groupoid_quotient(const OrderedGroupoid& g, const SubgroupoidH& h);

// quotient of an inverse semigroup by a normal inverse subsemigroup,
// computed through the groupoid of restricted products
QuotientStructure quotient(const InverseSemigroup& s, const Subsemigroup& t);

// ~_H against the plain-groupoid congruence a == b iff b^-1 . a exists and lies in H
struct CongruenceReport {
  std::vector<std::vector<int>> equiv_classes; // from b^-1 . a in H
  std::vector<std::vector<int>> sim_classes;   // from the ordered relation
  bool equiv_refines_sim = false;
  bool coincide = false;
};

CongruenceReport compare_congruences(const OrderedGroupoid& g, const SubgroupoidH& h);

}  // namespace isgal

#endif
