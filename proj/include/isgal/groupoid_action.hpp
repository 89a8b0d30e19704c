#ifndef ISGAL_GROUPOID_ACTION_HPP
#define ISGAL_GROUPOID_ACTION_HPP

#include <vector>

#include "isgal/action.hpp"
#include "isgal/groupoid.hpp"
#include "isgal/split_algebra.hpp"

namespace isgal {

/// An ordered groupoid acting on a split algebra by idempotent relabelings.
/// Same realization as Action, but beta_g beta_h is only required to agree
/// with beta_{gh} on composable pairs, and the order conditions
/// g <= h => E_g inside E_h with beta_g the restriction of beta_h apply.
class GroupoidAction {
 public:
  GroupoidAction(OrderedGroupoid g, SplitAlgebra a, std::vector<std::vector<int>> supports,
                 std::vector<std::vector<int>> sigma);

  const OrderedGroupoid& groupoid() const { return groupoid_; }
  const SplitAlgebra& algebra() const { return algebra_; }
  const std::vector<int>& support(int g) const { return supports_[g]; }
  int sigma(int g, int i) const { return sigma_[g][i - 1]; }  // 0 when undefined

  AlgebraElement unit_of(int g) const;
  AlgebraElement apply(int g, const AlgebraElement& a) const;  // beta_g(a 1_{g^-1})

 private:
  OrderedGroupoid groupoid_;
  SplitAlgebra algebra_;
  std::vector<std::vector<int>> supports_;
  std::vector<std::vector<int>> sigma_;
};

ActionReport validate_groupoid_action(const GroupoidAction& b);

/// disjoint-cover of supports over the identities
bool is_orthogonal(const GroupoidAction& b);

/// the groupoid action carried by a semigroup action along the restricted
/// product: same elements, supports and maps
GroupoidAction groupoid_action_of(const Action& b);

}  // namespace isgal

#endif
