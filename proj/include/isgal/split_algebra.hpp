#ifndef ISGAL_SPLIT_ALGEBRA_HPP
#define ISGAL_SPLIT_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "isgal/scalar.hpp"

namespace isgal {

// A = e_1 R + ... + e_n R with orthogonal idempotents summing to 1.
struct SplitAlgebra {
  int n = 0;
  Field field;

  SplitAlgebra(int n_, Field f);
  bool operator==(const SplitAlgebra& o) const { return n == o.n && field == o.field; }
};

struct AlgebraElement {
  const SplitAlgebra* algebra;
  std::vector<Scalar> coeff;  // size n

  explicit AlgebraElement(const SplitAlgebra& a);
  AlgebraElement(const SplitAlgebra& a, std::vector<Scalar> c);

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  bool operator==(const AlgebraElement& o) const { return coeff == o.coeff; }
  bool is_zero() const;
  bool is_idempotent() const;
  std::string str() const;
};

AlgebraElement basis_idempotent(const SplitAlgebra& a, int i);         // e_i, 1-based
AlgebraElement support_idempotent(const SplitAlgebra& a, const std::vector<int>& support);
AlgebraElement unit(const SplitAlgebra& a);
AlgebraElement zero(const SplitAlgebra& a);

// E = sum of e_i R over a support set; 1_E is a central idempotent
struct IdempotentIdeal {
  std::vector<int> support;  // sorted, 1-based

  IdempotentIdeal(const SplitAlgebra& a, std::vector<int> s);
  bool contains_index(int i) const;
};

// all 2^|support| subset-sum idempotents, 0 and 1_E included
std::vector<AlgebraElement> idempotents_of(const SplitAlgebra& a, const IdempotentIdeal& ideal);

// B = one free generator (sum of e_i over the block) per block
struct PartitionSubalgebra {
  const SplitAlgebra* algebra;
  std::vector<std::vector<int>> blocks;  // each sorted, list sorted by least member

  PartitionSubalgebra(const SplitAlgebra& a, std::vector<std::vector<int>> b);
  int num_blocks() const { return static_cast<int>(blocks.size()); }
  int block_of(int i) const;  // 1-based point
  AlgebraElement block_generator(int b) const;
  bool contains(const AlgebraElement& x) const;  // block-constant coefficients
  bool is_refinement_of(const PartitionSubalgebra& coarser) const;
  bool operator==(const PartitionSubalgebra& o) const { return blocks == o.blocks; }
  std::string str() const;
};

// all set partitions of {1..n}; throws above the bound
std::vector<PartitionSubalgebra> enumerate_partition_subalgebras(const SplitAlgebra& a,
                                                                 int bound = 10);

struct SeparabilityResult {
  bool separable = false;
  bool supported = true;              // false when B is not free over the base
  std::string note;
  // witness x = sum w[i][j] f_i (x) f_j in B (x)_base B, block-indexed
  std::vector<std::vector<Scalar>> witness;
};

SeparabilityResult separability_check(const PartitionSubalgebra& b,
                                      const PartitionSubalgebra& base);

}  // namespace isgal

#endif
