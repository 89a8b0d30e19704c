#ifndef ISGAL_ACTION_HPP
#define ISGAL_ACTION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isgal/inverse_semigroup.hpp"
#include "isgal/quotient.hpp"
#include "isgal/split_algebra.hpp"
#include "isgal/subsemigroup.hpp"

namespace isgal {

/// An inverse semigroup acting on a split algebra by idempotent relabelings:
/// each s carries an ideal E_s (a support set) and a bijection sigma_s from
/// support(E_{s^-1}) onto support(E_s) realizing beta_s.
class Action {
 public:
  Action(InverseSemigroup s, SplitAlgebra a, std::vector<std::vector<int>> supports,
         std::vector<std::vector<int>> sigma);

  const InverseSemigroup& semigroup() const { return semigroup_; }
  const SplitAlgebra& algebra() const { return algebra_; }
  const std::vector<int>& support(int s) const { return supports_[s]; }
  /// image of point i under sigma_s; 0 when i is outside support(E_{s^-1})
  int sigma(int s, int i) const { return sigma_[s][i - 1]; }

  AlgebraElement unit_of(int s) const;  // 1_s
  /// beta_s(a 1_{s^-1})
  AlgebraElement apply(int s, const AlgebraElement& a) const;

 private:
  InverseSemigroup semigroup_;
  SplitAlgebra algebra_;
  std::vector<std::vector<int>> supports_;  // per element, sorted, 1-based
  std::vector<std::vector<int>> sigma_;     // per element, size n, 0 = undefined
};

struct ActionCheck {
  std::string name;
  bool ok = true;
  std::string witness;
};

struct ActionReport {
  std::vector<ActionCheck> checks;
  bool all_ok() const;
  const ActionCheck& operator[](const std::string& name) const;
};

/// action axioms: sigma shape/bijectivity, sigma_s . sigma_t = sigma_{st}
/// as partial maps, E_s = E_{ss^-1}, beta_f identity on idempotents,
/// E_1 = A when S is unital
ActionReport validate_action(const Action& b);

/// disjoint-cover of the E_e over E(S), vanishing off max E(S), and
/// s < t implies E_s = 0
ActionReport orthogonality_report(const Action& b);
bool is_orthogonal(const Action& b);

/// orbit partition of the point set under i ~ sigma_s(i); the fixed
/// elements are exactly the block-constant ones
PartitionSubalgebra fixed_subalgebra(const Action& b);

/// tr(a) = sum over all s of beta_s(a 1_{s^-1})
AlgebraElement trace(const Action& b, const AlgebraElement& a);

struct GaloisCoordinates {
  std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
};

/// sum_i x_i beta_s(y_i 1_{s^-1}) = 1_s for idempotent s, 0 otherwise
bool check_galois_coordinates(const Action& b, const GaloisCoordinates& coords,
                              std::string* witness = nullptr);

/// canonical candidate x_i = y_i = e_i first, then x_i = e_i with the y_i
/// solved from the defining linear system
std::optional<GaloisCoordinates> find_galois_coordinates(const Action& b);

/// T_B = { s : beta_s(b 1_{s^-1}) = b 1_s for all b in B }
Subsemigroup stabilizer(const Action& b, const PartitionSubalgebra& sub);

/// for every (s, t) with s s^-1 = t t^-1 and s^-1 t outside T_B, every
/// nonzero idempotent e of E_s admits a block generator separating
/// beta_s(b 1_{s^-1}) e from beta_t(b 1_{t^-1}) e
bool is_beta_strong(const Action& b, const PartitionSubalgebra& sub,
                    std::string* witness = nullptr);

/// the action of T on A_T = sum of E_e over e in E(T)
struct RestrictedAction {
  Action action;
  std::vector<int> element_to_parent;  // restricted element index -> parent index
  std::vector<int> point_to_parent;    // restricted point (1-based) -> parent point
};

RestrictedAction restrict_action(const Action& b, const Subsemigroup& t);

/// fixed subalgebra of the restriction to a full T, as a partition of the
/// parent point set
PartitionSubalgebra fixed_of_restriction(const Action& b, const Subsemigroup& t);

/// the induced action of S/T on B = A^{beta_T}; T must be Clifford, normal,
/// full, contain S minus max S, and have an inverse-semigroup quotient
struct QuotientActionResult {
  QuotientStructure quotient;  // classes of S by T
  PartitionSubalgebra fixed;   // B, as a partition of the parent point set
  Action action;               // S/T acting on the block algebra
};

QuotientActionResult quotient_action(const Action& b, const Subsemigroup& t);

}  // namespace isgal

#endif
