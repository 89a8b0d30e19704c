#ifndef ISGAL_SKEW_RING_HPP
#define ISGAL_SKEW_RING_HPP

#include <string>
#include <vector>

#include "isgal/action.hpp"
#include "isgal/groupoid_action.hpp"

namespace isgal {

/// Crossed product with basis e_i u_s over i in support(E_s): in the
/// relabeling realization every basis product is zero or another basis
/// element, so the structure constants are an index table.
struct SkewRing {
  Field field;
  std::vector<std::pair<int, int>> basis;  // (element, point)
  std::vector<std::string> basis_names;
  std::vector<std::vector<int>> prod;      // basis x basis -> basis index, -1 = zero

  int dim() const { return static_cast<int>(basis.size()); }
  int basis_index(int elem, int point) const;  // -1 if absent
};

/// (a u_s)(b u_t) = beta_s(beta_{s^-1}(a) b) u_{st}
SkewRing build_skew_semigroup_ring(const Action& b);

/// same product, defined only on composable pairs, zero otherwise
SkewRing build_skew_groupoid_ring(const GroupoidAction& b);

/// generators a u_s - a u_t over s < t, a = e_i in E_s (vectors in the
/// semigroup ring); empty for orthogonal actions
std::vector<std::vector<Scalar>> relation_ideal(const Action& b, const SkewRing& ring);

bool check_associativity(const SkewRing& ring, std::string* witness = nullptr);

struct LinearMapCheck {
  int rows = 0, cols = 0, rank = 0;
  bool injective = false, surjective = false, bijective = false;
};

/// the basis-preserving map between the semigroup and groupoid rings:
/// multiplicative iff the two structure tables agree
struct CrossedProductIso {
  bool bijective = false;
  bool multiplicative = false;
  std::string witness;
};

CrossedProductIso crossed_product_iso(const Action& b);

/// the Galois-equivalence checks, each materialized as exact linear algebra:
/// j into the fixed-ring endomorphisms, phi onto the product of the E_s,
/// the two-sided span of t = sum of 1_s u_s, and tau'
struct GaloisTheoremReport {
  bool supported = true;  // false when the fixed subalgebra is not scalars
  std::string note;
  bool coordinates_valid = false;
  LinearMapCheck j;
  bool j_multiplicative = false;
  LinearMapCheck phi;
  bool t_generates = false;
  LinearMapCheck tau;
  bool all_ok() const;
};

GaloisTheoremReport galois_theorem_checks(const Action& b, const GaloisCoordinates& coords);

}  // namespace isgal

#endif
