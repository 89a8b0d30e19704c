#include "isgal/split_algebra.hpp"

#include <algorithm>

#include "isgal/matrix.hpp"

namespace isgal {

SplitAlgebra::SplitAlgebra(int n_, Field f) : n(n_), field(f) {
  if (n < 1) throw Error("split algebra needs at least one idempotent");
}

AlgebraElement::AlgebraElement(const SplitAlgebra& a)
    : algebra(&a), coeff(a.n, Scalar::zero(a.field)) {}

AlgebraElement::AlgebraElement(const SplitAlgebra& a, std::vector<Scalar> c)
    : algebra(&a), coeff(std::move(c)) {
  if (static_cast<int>(coeff.size()) != a.n)
    throw Error("algebra element has wrong coefficient count");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r(*algebra);
  for (int i = 0; i < algebra->n; ++i) r.coeff[i] = coeff[i] + o.coeff[i];
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r(*algebra);
  for (int i = 0; i < algebra->n; ++i) r.coeff[i] = coeff[i] - o.coeff[i];
  return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  AlgebraElement r(*algebra);
  for (int i = 0; i < algebra->n; ++i) r.coeff[i] = coeff[i] * o.coeff[i];
  return r;
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coeff.begin(), coeff.end(), [](const Scalar& c) { return c.is_zero(); });
}

bool AlgebraElement::is_idempotent() const { return *this * *this == *this; }

std::string AlgebraElement::str() const {
  std::string out;
  for (int i = 0; i < algebra->n; ++i) {
    if (coeff[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (!coeff[i].is_one()) out += coeff[i].str() + "*";
    out += "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

AlgebraElement basis_idempotent(const SplitAlgebra& a, int i) {
  if (i < 1 || i > a.n) throw Error("basis idempotent index out of range");
  AlgebraElement r(a);
  r.coeff[i - 1] = Scalar::one(a.field);
  return r;
}

AlgebraElement support_idempotent(const SplitAlgebra& a, const std::vector<int>& support) {
  AlgebraElement r(a);
  for (int i : support) {
    if (i < 1 || i > a.n) throw Error("support index out of range");
    r.coeff[i - 1] = Scalar::one(a.field);
  }
  return r;
}

AlgebraElement unit(const SplitAlgebra& a) {
  AlgebraElement r(a);
  for (auto& c : r.coeff) c = Scalar::one(a.field);
  return r;
}

AlgebraElement zero(const SplitAlgebra& a) { return AlgebraElement(a); }

IdempotentIdeal::IdempotentIdeal(const SplitAlgebra& a, std::vector<int> s) : support(std::move(s)) {
  std::sort(support.begin(), support.end());
  for (size_t i = 0; i < support.size(); ++i) {
    if (support[i] < 1 || support[i] > a.n) throw Error("ideal support out of range");
    if (i > 0 && support[i] == support[i - 1]) throw Error("ideal support has duplicates");
  }
}

bool IdempotentIdeal::contains_index(int i) const {
  return std::binary_search(support.begin(), support.end(), i);
}

std::vector<AlgebraElement> idempotents_of(const SplitAlgebra& a, const IdempotentIdeal& ideal) {
  const int k = static_cast<int>(ideal.support.size());
  if (k > 20) throw Error("ideal support too large to enumerate idempotents");
  std::vector<AlgebraElement> out;
  out.reserve(std::size_t{1} << k);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    AlgebraElement e(a);
    for (int b = 0; b < k; ++b)
      if (mask & (1u << b)) e.coeff[ideal.support[b] - 1] = Scalar::one(a.field);
    out.push_back(std::move(e));
  }
  return out;
}

PartitionSubalgebra::PartitionSubalgebra(const SplitAlgebra& a, std::vector<std::vector<int>> b)
    : algebra(&a), blocks(std::move(b)) {
  std::vector<int> seen(a.n, 0);
  for (auto& blk : blocks) {
    if (blk.empty()) throw Error("partition block is empty");
    std::sort(blk.begin(), blk.end());
    for (int i : blk) {
      if (i < 1 || i > a.n) throw Error("partition point out of range");
      if (seen[i - 1]++) throw Error("partition blocks overlap");
    }
  }
  for (int i = 0; i < a.n; ++i)
    if (!seen[i]) throw Error("partition does not cover point " + std::to_string(i + 1));
  std::sort(blocks.begin(), blocks.end());
}

int PartitionSubalgebra::block_of(int i) const {
  for (int b = 0; b < num_blocks(); ++b)
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), i)) return b;
  throw Error("point not in partition");
}

AlgebraElement PartitionSubalgebra::block_generator(int b) const {
  return support_idempotent(*algebra, blocks.at(b));
}

bool PartitionSubalgebra::contains(const AlgebraElement& x) const {
  for (const auto& blk : blocks)
    for (int i : blk)
      if (!(x.coeff[i - 1] == x.coeff[blk[0] - 1])) return false;
  return true;
}

bool PartitionSubalgebra::is_refinement_of(const PartitionSubalgebra& coarser) const {
  for (const auto& blk : blocks) {
    const int cb = coarser.block_of(blk[0]);
    for (int i : blk)
      if (coarser.block_of(i) != cb) return false;
  }
  return true;
}

std::string PartitionSubalgebra::str() const {
  std::string out;
  for (const auto& blk : blocks) {
    out += "{";
    for (size_t i = 0; i < blk.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(blk[i]);
    }
    out += "}";
  }
  return out;
}

std::vector<PartitionSubalgebra> enumerate_partition_subalgebras(const SplitAlgebra& a, int bound) {
  if (a.n > bound) throw Error("partition enumeration bound exceeded");
  // restricted growth strings: rgs[0] = 0, rgs[i] <= max(rgs[0..i-1]) + 1
  std::vector<PartitionSubalgebra> out;
  std::vector<int> rgs(a.n, 0);
  while (true) {
    int nblocks = 1 + *std::max_element(rgs.begin(), rgs.end());
    std::vector<std::vector<int>> blocks(nblocks);
    for (int i = 0; i < a.n; ++i) blocks[rgs[i]].push_back(i + 1);
    out.emplace_back(a, std::move(blocks));

    int i = a.n - 1;
    for (; i > 0; --i) {
      const int cap = 1 + *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] < cap) {
        ++rgs[i];
        break;
      }
      rgs[i] = 0;
    }
    if (i == 0) break;
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

SeparabilityResult separability_check(const PartitionSubalgebra& b,
                                      const PartitionSubalgebra& base) {
  SeparabilityResult res;
  if (b.algebra != base.algebra && !(*b.algebra == *base.algebra))
    throw Error("separability check across different algebras");
  if (!b.is_refinement_of(base)) throw Error("base partition is not coarser than the subalgebra");

  // free over the base iff every base block splits into the same number of blocks
  const int m = b.num_blocks();
  std::vector<int> fibre(base.num_blocks(), 0);
  std::vector<int> over(m);  // base block containing each block
  for (int i = 0; i < m; ++i) {
    over[i] = base.block_of(b.blocks[i][0]);
    ++fibre[over[i]];
  }
  for (int c = 1; c < base.num_blocks(); ++c)
    if (fibre[c] != fibre[0]) {
      res.supported = false;
      res.note = "subalgebra is not free over the base; separability not decided";
      return res;
    }

  // tensor basis: f_i (x) f_j survives only when i and j sit over the same base block
  const Field field = b.algebra->field;
  std::vector<std::pair<int, int>> basis;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (over[i] == over[j]) basis.emplace_back(i, j);
  const int nvar = static_cast<int>(basis.size());

  // mu(x) = 1_B forces w_ii = 1; (f_k (x) 1)x = (1 (x) f_k)x gives
  // w_ij (delta_ki - delta_kj) = 0 for every k
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (int v = 0; v < nvar; ++v) {
    if (basis[v].first != basis[v].second) continue;
    std::vector<Scalar> row(nvar, Scalar::zero(field));
    row[v] = Scalar::one(field);
    rows.push_back(std::move(row));
    rhs.push_back(Scalar::one(field));
  }
  for (int k = 0; k < m; ++k)
    for (int v = 0; v < nvar; ++v) {
      const auto [i, j] = basis[v];
      const int c = (k == i ? 1 : 0) - (k == j ? 1 : 0);
      if (c == 0) continue;
      std::vector<Scalar> row(nvar, Scalar::zero(field));
      row[v] = Scalar(field, c);
      rows.push_back(std::move(row));
      rhs.push_back(Scalar::zero(field));
    }

  Matrix sys(field, static_cast<int>(rows.size()), nvar);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < nvar; ++c) sys.at(static_cast<int>(r), c) = rows[r][c];
  auto sol = sys.solve(rhs);
  if (!sol) {
    res.separable = false;
    res.note = "no separability idempotent exists";
    return res;
  }
  res.separable = true;
  res.witness.assign(m, std::vector<Scalar>(m, Scalar::zero(field)));
  for (int v = 0; v < nvar; ++v) res.witness[basis[v].first][basis[v].second] = (*sol)[v];
  return res;
}

}  // namespace isgal
