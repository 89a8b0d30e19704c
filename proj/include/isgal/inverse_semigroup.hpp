#ifndef ISGAL_INVERSE_SEMIGROUP_HPP
#define ISGAL_INVERSE_SEMIGROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "isgal/partial_bijection.hpp"

namespace isgal {

/// Finite inverse semigroup given by tables. Immutable after construction;
/// construction validates associativity, unique inverses and commuting
/// idempotents, then caches E(S) and the natural partial order.
class InverseSemigroup {
 public:
  /// Builds from a multiplication table; the inverse table is derived and
  /// validated. Throws Error with a witness on any axiom violation.
  static InverseSemigroup from_table(std::vector<std::string> names,
                                     std::vector<std::vector<int>> mul);

  /// Smallest inverse semigroup containing the generators, closed under
  /// compose and invert. Elements keep their partial-bijection realization.
  static InverseSemigroup close(const std::vector<PartialBijection>& generators);

  int size() const { return static_cast<int>(mul_.size()); }
  int mul(int s, int t) const { return mul_[s][t]; }
  int inv(int s) const { return inv_[s]; }
  const std::string& name(int s) const { return names_[s]; }
  int index_of(const std::string& name) const;  // throws if absent

  bool is_idempotent(int s) const { return mul_[s][s] == s; }
  const std::vector<int>& idempotents() const { return idempotents_; }

  /// Natural partial order: s <= t iff s = t f for some idempotent f.
  bool leq(int s, int t) const { return leq_[s][t]; }

  /// Defined iff inv(s) s = t inv(t); value is then mul(s, t).
  std::optional<int> restricted_product(int s, int t) const;

  std::vector<int> max_elements() const;
  std::vector<int> max_idempotents() const;
  std::optional<int> identity() const;

  /// Partial-bijection realization when built via close(); empty otherwise.
  const std::vector<PartialBijection>& realization() const { return realization_; }

 private:
  InverseSemigroup() = default;
  void finalize();  // validates and fills caches

  std::vector<std::string> names_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<int> idempotents_;
  std::vector<std::vector<bool>> leq_;
  std::vector<PartialBijection> realization_;
};

/// Compact display name for a partial bijection on up to three points
/// (I_.., T_ij, S_ij, D/P_.., T_ij^k, S_ijk); generic graph notation otherwise.
std::string element_name(const PartialBijection& f);

}  // namespace isgal

#endif
