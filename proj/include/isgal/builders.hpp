#ifndef ISGAL_BUILDERS_HPP
#define ISGAL_BUILDERS_HPP

#include <string>
#include <vector>

#include "isgal/action.hpp"
#include "isgal/groupoid_action.hpp"
#include "isgal/inverse_semigroup.hpp"

namespace isgal {

/// all partial bijections of {1..m}, 1 <= m <= 4
InverseSemigroup symmetric_inverse_monoid(int m);

/// S = maps of rank <= k in I({1..m}) acting on one k-point block per
/// k-subset (subsets in lexicographic order); rank-k maps relabel by
/// sorted position, everything else gets the zero ideal
Action bounded_rank_example(int m, int k, const Field& field);

/// the 28-element closing example: rank <= 2 maps on three points with the
/// displayed relabelings on E_{I12} = {1,2}, E_{I13} = {3,4}, E_{I23} = {5,6}
Action paper_example(const Field& field);

/// a group as a one-idempotent inverse semigroup with its regular action
/// on one idempotent per group element
Action group_regular_example(const InverseSemigroup& group, const Field& field);

/// group tables by name: Z<n> (n <= 16), products like Z2xZ2, and S3
InverseSemigroup named_group(const std::string& name);

/// the six-element ordered, non-inductive groupoid acting on four
/// idempotents: z swaps 1,2 and 3,4; x is the restriction of z to {1,3}
GroupoidAction example_32_groupoid(const Field& field);

}  // namespace isgal

#endif
