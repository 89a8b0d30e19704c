#ifndef ISGAL_GROUPOID_HPP
#define ISGAL_GROUPOID_HPP

#include <optional>
#include <string>
#include <vector>

#include "isgal/inverse_semigroup.hpp"

namespace isgal {

/// Ordered groupoid as explicit tables: partial product with a -1 sentinel,
/// inverse table, and the order relation. Non-inductive groupoids are
/// first-class; being inductive is a queried property, not an invariant.
struct OrderedGroupoid {
  std::vector<std::string> names;
  std::vector<std::vector<int>> pmul;  // -1 = undefined
  std::vector<int> inv;
  std::vector<std::vector<bool>> leq;

  int size() const { return static_cast<int>(names.size()); }
  int dom(int g) const { return pmul[inv[g]][g]; }   // g^-1 g
  int ran(int g) const { return pmul[g][inv[g]]; }   // g g^-1
  bool is_identity(int g) const { return dom(g) == g; }
  std::vector<int> identities() const;

  /// (g | e): the unique z <= g with dom(z) = e. Throws if e !<= dom(g)
  /// or no unique restriction exists (i.e. OG3 fails at this pair).
  int restriction(int g, int e) const;
  /// (e | g): dual, unique z <= g with ran(z) = e.
  int corestriction(int e, int g) const;

  /// Greatest lower bound of identities e, f within the identity set.
  std::optional<int> meet(int e, int f) const;
  bool is_inductive() const;

  std::vector<int> max_elements() const;
  int index_of(const std::string& name) const;
};

struct AxiomCheck {
  std::string axiom;
  bool ok = true;
  std::string witness;  // empty when ok
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_ok() const;
  const AxiomCheck& operator[](const std::string& axiom) const;
};

/// Checks groupoid axioms, OG1, OG2, OG3, OG3*, the order being a partial
/// order, and the identities forming an order ideal; each with a witness on
/// failure. Also reports (as "inductive") whether identities have all meets.
AxiomReport validate_ordered(const OrderedGroupoid& g);

/// ESN: S with the restricted product and the natural partial order.
OrderedGroupoid esn_groupoid(const InverseSemigroup& s);

/// ESN inverse: the pseudoproduct x*y = (x|e).(e|y), e = d(x)^r(y).
/// Throws if g is not inductive or not a valid ordered groupoid.
InverseSemigroup esn_semigroup(const OrderedGroupoid& g);

/// Wide subgroupoid of an ordered groupoid (member subset).
struct SubgroupoidH {
  const OrderedGroupoid* parent = nullptr;
  std::vector<int> members;  // sorted

  bool contains(int g) const;
};

bool is_ordered_subgroupoid(const OrderedGroupoid& g, const std::vector<int>& members);
bool is_wide(const SubgroupoidH& h);
/// Wide + a^-1 . H . b ⊆ H for all pairs a, b with a common upper bound.
bool is_normal_subgroupoid(const SubgroupoidH& h);

/// Subgroupoid of maximal elements; throws with a witness if max G is not
/// closed (equivalently, if some maximal g has non-maximal range identity).
SubgroupoidH max_subgroupoid(const OrderedGroupoid& g);

/// H' wide in max G  ->  H = H' ∪ (G \ max G); throws on non-wide input.
SubgroupoidH lift_wide_subgroupoid(const OrderedGroupoid& g, const std::vector<int>& h_prime);

struct ConnectedComponent {
  std::vector<int> elements;
  std::vector<int> identities;
  int basepoint;                   // least identity
  std::vector<int> isotropy;       // elements g with dom(g) = ran(g) = basepoint
  bool coarse_factorization_ok;    // component ≅ identities^2 x isotropy
};

std::vector<ConnectedComponent> connected_components(const OrderedGroupoid& g);

}  // namespace isgal

#endif
