#include "isgal/action.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "isgal/matrix.hpp"

namespace isgal {

Action::Action(InverseSemigroup s, SplitAlgebra a, std::vector<std::vector<int>> supports,
               std::vector<std::vector<int>> sigma)
    : semigroup_(std::move(s)),
      algebra_(std::move(a)),
      supports_(std::move(supports)),
      sigma_(std::move(sigma)) {
  const int m = semigroup_.size(), n = algebra_.n;
  if (static_cast<int>(supports_.size()) != m || static_cast<int>(sigma_.size()) != m)
    throw Error("action tables must have one entry per semigroup element");
  for (int t = 0; t < m; ++t) {
    auto& sup = supports_[t];
    std::sort(sup.begin(), sup.end());
    for (size_t i = 0; i < sup.size(); ++i) {
      if (sup[i] < 1 || sup[i] > n) throw Error("support out of range for " + semigroup_.name(t));
      if (i > 0 && sup[i] == sup[i - 1]) throw Error("duplicate support point for " + semigroup_.name(t));
    }
    if (static_cast<int>(sigma_[t].size()) != n)
      throw Error("sigma table must have one slot per point");
    for (int img : sigma_[t])
      if (img < 0 || img > n) throw Error("sigma image out of range for " + semigroup_.name(t));
  }
}

AlgebraElement Action::unit_of(int s) const { return support_idempotent(algebra_, supports_[s]); }

AlgebraElement Action::apply(int s, const AlgebraElement& a) const {
  AlgebraElement out(algebra_);
  for (int i = 1; i <= algebra_.n; ++i) {
    const int j = sigma_[s][i - 1];
    if (j != 0) out.coeff[j - 1] += a.coeff[i - 1];
  }
  return out;
}

bool ActionReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ActionCheck& c) { return c.ok; });
}

const ActionCheck& ActionReport::operator[](const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw Error("no action check named " + name);
}

namespace {

void fail_once(ActionCheck& c, const std::string& witness) {
  if (c.ok) {
    c.ok = false;
    c.witness = witness;
  }
}

}  // namespace

ActionReport validate_action(const Action& b) {
  const InverseSemigroup& s = b.semigroup();
  const int m = s.size(), n = b.algebra().n;
  ActionReport rep;

  ActionCheck shape{"sigma-bijection"};
  for (int t = 0; t < m; ++t) {
    const auto& dom = b.support(s.inv(t));
    const auto& ran = b.support(t);
    std::vector<int> image;
    for (int i = 1; i <= n; ++i) {
      const int j = b.sigma(t, i);
      const bool in_dom = std::binary_search(dom.begin(), dom.end(), i);
      if ((j != 0) != in_dom) {
        fail_once(shape, "sigma domain of " + s.name(t) + " differs from support of inverse at point " +
                             std::to_string(i));
        continue;
      }
      if (j != 0) image.push_back(j);
    }
    std::sort(image.begin(), image.end());
    if (shape.ok && (std::adjacent_find(image.begin(), image.end()) != image.end() || image != ran))
      fail_once(shape, "sigma image of " + s.name(t) + " is not exactly its support");
  }
  rep.checks.push_back(shape);

  ActionCheck hom{"sigma-homomorphism"};
  for (int x = 0; x < m && hom.ok; ++x)
    for (int y = 0; y < m && hom.ok; ++y) {
      const int xy = s.mul(x, y);
      for (int i = 1; i <= n; ++i) {
        const int step = b.sigma(y, i);
        const int lhs = step == 0 ? 0 : b.sigma(x, step);
        if (lhs != b.sigma(xy, i)) {
          fail_once(hom, "sigma_" + s.name(x) + " . sigma_" + s.name(y) + " != sigma_" + s.name(xy) +
                             " at point " + std::to_string(i));
          break;
        }
      }
    }
  rep.checks.push_back(hom);

  ActionCheck range{"support-of-range-idempotent"};
  for (int t = 0; t < m; ++t)
    if (b.support(t) != b.support(s.mul(t, s.inv(t))))
      fail_once(range, "E_" + s.name(t) + " != E_" + s.name(s.mul(t, s.inv(t))));
  rep.checks.push_back(range);

  ActionCheck idem{"idempotents-act-trivially"};
  for (int f : s.idempotents())
    for (int i : b.support(f))
      if (b.sigma(f, i) != i) fail_once(idem, "beta_" + s.name(f) + " moves point " + std::to_string(i));
  rep.checks.push_back(idem);

  if (auto one = s.identity()) {
    ActionCheck total{"identity-acts-on-everything"};
    if (static_cast<int>(b.support(*one).size()) != n)
      fail_once(total, "E_" + s.name(*one) + " is a proper ideal");
    rep.checks.push_back(total);
  }
  return rep;
}

ActionReport orthogonality_report(const Action& b) {
  const InverseSemigroup& s = b.semigroup();
  const int n = b.algebra().n;
  ActionReport rep;

  ActionCheck cover{"idempotent-supports-partition"};
  std::vector<int> owner(n, -1);
  for (int e : s.idempotents())
    for (int i : b.support(e)) {
      if (owner[i - 1] != -1)
        fail_once(cover, "point " + std::to_string(i) + " lies in E_" + s.name(owner[i - 1]) +
                             " and E_" + s.name(e));
      owner[i - 1] = e;
    }
  for (int i = 0; i < n; ++i)
    if (owner[i] == -1) fail_once(cover, "point " + std::to_string(i + 1) + " lies in no E_e");
  rep.checks.push_back(cover);

  ActionCheck maxchar{"nonmaximal-idempotents-vanish"};
  const std::vector<int> maxe = s.max_idempotents();
  for (int e : s.idempotents())
    if (!std::binary_search(maxe.begin(), maxe.end(), e) && !b.support(e).empty())
      fail_once(maxchar, "E_" + s.name(e) + " is nonzero off max E(S)");
  rep.checks.push_back(maxchar);

  ActionCheck strict{"strictly-smaller-elements-vanish"};
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (x != y && s.leq(x, y) && !b.support(x).empty())
        fail_once(strict, "E_" + s.name(x) + " nonzero although " + s.name(x) + " < " + s.name(y));
  rep.checks.push_back(strict);
  return rep;
}

bool is_orthogonal(const Action& b) { return orthogonality_report(b).all_ok(); }

PartitionSubalgebra fixed_subalgebra(const Action& b) {
  const int n = b.algebra().n;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int s = 0; s < b.semigroup().size(); ++s)
    for (int i = 1; i <= n; ++i) {
      const int j = b.sigma(s, i);
      if (j != 0) parent[find(i - 1)] = find(j - 1);
    }
  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks[find(i)].push_back(i + 1);
  std::vector<std::vector<int>> out;
  for (auto& [root, blk] : blocks) out.push_back(std::move(blk));
  return PartitionSubalgebra(b.algebra(), std::move(out));
}

AlgebraElement trace(const Action& b, const AlgebraElement& a) {
  AlgebraElement out(b.algebra());
  for (int s = 0; s < b.semigroup().size(); ++s) out = out + b.apply(s, a);
  return out;
}

bool check_galois_coordinates(const Action& b, const GaloisCoordinates& coords,
                              std::string* witness) {
  const InverseSemigroup& sg = b.semigroup();
  for (int s = 0; s < sg.size(); ++s) {
    AlgebraElement lhs(b.algebra());
    for (const auto& [x, y] : coords.pairs) lhs = lhs + x * b.apply(s, y);
    const AlgebraElement rhs = sg.is_idempotent(s) ? b.unit_of(s) : zero(b.algebra());
    if (!(lhs == rhs)) {
      if (witness) *witness = sg.name(s);
      return false;
    }
  }
  return true;
}

std::optional<GaloisCoordinates> find_galois_coordinates(const Action& b) {
  const int n = b.algebra().n;
  GaloisCoordinates canonical;
  for (int i = 1; i <= n; ++i)
    canonical.pairs.emplace_back(basis_idempotent(b.algebra(), i), basis_idempotent(b.algebra(), i));
  if (check_galois_coordinates(b, canonical)) return canonical;

  // fix x_i = e_i and solve for the y_i: with unknowns y[i][k], the s-th
  // identity reads y[j][sigma_s^-1(j)] = rhs_j(s) on support points j of E_s
  const Field field = b.algebra().field;
  const InverseSemigroup& sg = b.semigroup();
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (int s = 0; s < sg.size(); ++s) {
    for (int i = 1; i <= n; ++i) {
      const int j = b.sigma(s, i);  // i in support(E_{s^-1}), j in support(E_s)
      if (j == 0) continue;
      std::vector<Scalar> row(static_cast<size_t>(n) * n, Scalar::zero(field));
      row[static_cast<size_t>(j - 1) * n + (i - 1)] = Scalar::one(field);
      rows.push_back(std::move(row));
      rhs.push_back(sg.is_idempotent(s) ? Scalar::one(field) : Scalar::zero(field));
    }
    // off-support components of the identity vanish automatically
  }
  Matrix sys(field, static_cast<int>(rows.size()), n * n);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < n * n; ++c) sys.at(static_cast<int>(r), c) = rows[r][c];
  auto sol = sys.solve(rhs);
  if (!sol) return std::nullopt;
  GaloisCoordinates out;
  for (int i = 1; i <= n; ++i) {
    AlgebraElement y(b.algebra());
    for (int k = 0; k < n; ++k) y.coeff[k] = (*sol)[static_cast<size_t>(i - 1) * n + k];
    out.pairs.emplace_back(basis_idempotent(b.algebra(), i), std::move(y));
  }
  if (!check_galois_coordinates(b, out)) return std::nullopt;
  return out;
}

Subsemigroup stabilizer(const Action& b, const PartitionSubalgebra& sub) {
  const InverseSemigroup& sg = b.semigroup();
  std::vector<int> members;
  for (int s = 0; s < sg.size(); ++s) {
    bool fixes = true;
    for (int blk = 0; blk < sub.num_blocks() && fixes; ++blk) {
      const AlgebraElement g = sub.block_generator(blk);
      fixes = b.apply(s, g) == g * b.unit_of(s);
    }
    if (fixes) members.push_back(s);
  }
  if (!is_closed_subset(sg, members)) throw Error("stabilizer is not closed");  // cannot happen
  return Subsemigroup{&sg, std::move(members)};
}

bool is_beta_strong(const Action& b, const PartitionSubalgebra& sub, std::string* witness) {
  const InverseSemigroup& sg = b.semigroup();
  const Subsemigroup tb = stabilizer(b, sub);
  for (int s = 0; s < sg.size(); ++s)
    for (int t = 0; t < sg.size(); ++t) {
      if (sg.mul(s, sg.inv(s)) != sg.mul(t, sg.inv(t))) continue;
      if (tb.contains(sg.mul(sg.inv(s), t))) continue;
      const auto idems = idempotents_of(b.algebra(), IdempotentIdeal(b.algebra(), b.support(s)));
      for (const auto& e : idems) {
        if (e.is_zero()) continue;
        bool separated = false;
        for (int blk = 0; blk < sub.num_blocks() && !separated; ++blk) {
          const AlgebraElement g = sub.block_generator(blk);
          separated = !(b.apply(s, g) * e == b.apply(t, g) * e);
        }
        if (!separated) {
          if (witness)
            *witness = "(" + sg.name(s) + ", " + sg.name(t) + ", e = " + e.str() + ")";
          return false;
        }
      }
    }
  return true;
}

RestrictedAction restrict_action(const Action& b, const Subsemigroup& t) {
  if (t.parent != &b.semigroup()) throw Error("restrict_action: subsemigroup of a different semigroup");
  auto [sub, old_to_new] = t.extract();

  std::vector<bool> kept(b.algebra().n, false);
  for (int e : sub.idempotents())
    for (int i : b.support(t.members[e])) kept[i - 1] = true;
  std::vector<int> point_to_parent;
  std::vector<int> parent_to_point(b.algebra().n, 0);
  for (int i = 0; i < b.algebra().n; ++i)
    if (kept[i]) {
      point_to_parent.push_back(i + 1);
      parent_to_point[i] = static_cast<int>(point_to_parent.size());
    }
  if (point_to_parent.empty()) throw Error("restriction acts on the zero algebra");

  SplitAlgebra alg(static_cast<int>(point_to_parent.size()), b.algebra().field);
  std::vector<std::vector<int>> supports(sub.size());
  std::vector<std::vector<int>> sigma(sub.size(), std::vector<int>(alg.n, 0));
  for (int k = 0; k < sub.size(); ++k) {
    const int old = t.members[k];
    for (int i : b.support(old)) supports[k].push_back(parent_to_point[i - 1]);
    for (int i = 1; i <= b.algebra().n; ++i) {
      const int j = b.sigma(old, i);
      if (j != 0 && parent_to_point[i - 1] != 0)
        sigma[k][parent_to_point[i - 1] - 1] = parent_to_point[j - 1];
    }
  }
  (void)old_to_new;
  return RestrictedAction{Action(std::move(sub), alg, std::move(supports), std::move(sigma)),
                          t.members, std::move(point_to_parent)};
}

PartitionSubalgebra fixed_of_restriction(const Action& b, const Subsemigroup& t) {
  if (!is_full(t)) throw Error("fixed_of_restriction needs a full subsemigroup");
  RestrictedAction r = restrict_action(b, t);
  if (static_cast<int>(r.point_to_parent.size()) != b.algebra().n)
    throw Error("full restriction must keep the whole point set");
  PartitionSubalgebra fixed = fixed_subalgebra(r.action);
  std::vector<std::vector<int>> blocks;
  for (const auto& blk : fixed.blocks) {
    std::vector<int> mapped;
    for (int i : blk) mapped.push_back(r.point_to_parent[i - 1]);
    blocks.push_back(std::move(mapped));
  }
  return PartitionSubalgebra(b.algebra(), std::move(blocks));
}

QuotientActionResult quotient_action(const Action& b, const Subsemigroup& t) {
  const InverseSemigroup& sg = b.semigroup();
  if (!is_full(t)) throw Error("quotient_action: subsemigroup is not full");
  if (!is_clifford_subset(t)) throw Error("quotient_action: subsemigroup is not Clifford");
  if (!is_normal(t)) throw Error("quotient_action: subsemigroup is not normal");
  for (int s = 0; s < sg.size(); ++s) {
    bool maximal = true;
    for (int u = 0; u < sg.size(); ++u)
      if (u != s && sg.leq(s, u)) maximal = false;
    if (!maximal && !t.contains(s))
      throw Error("quotient_action: " + sg.name(s) + " below a maximal element is missing from T");
  }

  QuotientStructure q = quotient(sg, t);
  if (!q.is_inverse_semigroup) throw Error("quotient_action: S/T is not an inverse semigroup");
  InverseSemigroup sbar = q.as_inverse_semigroup();

  const PartitionSubalgebra fixed = fixed_of_restriction(b, t);
  const int m = fixed.num_blocks();
  SplitAlgebra alg(m, b.algebra().field);

  // e_g: union of fixed blocks meeting the support of the least representative
  auto class_support = [&](int cls) {
    std::vector<bool> hit(m, false);
    for (int i : b.support(q.classes[cls].front())) hit[fixed.block_of(i)] = true;
    std::vector<int> sup;
    for (int blk = 0; blk < m; ++blk)
      if (hit[blk]) sup.push_back(blk + 1);
    return sup;
  };

  std::vector<std::vector<int>> supports(q.num_classes());
  std::vector<std::vector<int>> sigma(q.num_classes(), std::vector<int>(m, 0));
  for (int c = 0; c < q.num_classes(); ++c) {
    supports[c] = class_support(c);
    const int rep = q.classes[c].front();
    const int cinv = q.class_inv[c];
    for (int blk1 : class_support(cinv)) {
      const AlgebraElement image = b.apply(rep, fixed.block_generator(blk1 - 1));
      int target = -1;
      for (int i = 1; i <= b.algebra().n; ++i) {
        if (image.coeff[i - 1].is_zero()) continue;
        const int blk = fixed.block_of(i);
        if (target == -1) target = blk;
        if (target != blk)
          throw Error("quotient_action: image of a fixed block spans two blocks at class " +
                      q.class_names[c]);
        if (!image.coeff[i - 1].is_one())
          throw Error("quotient_action: image of a fixed block is not an idempotent");
      }
      if (target == -1)
        throw Error("quotient_action: fixed block below e_{g^-1} dies under the representative");
      sigma[c][blk1 - 1] = target + 1;
    }
  }

  Action bar(std::move(sbar), alg, std::move(supports), std::move(sigma));
  ActionReport rep = validate_action(bar);
  for (const auto& c : rep.checks)
    if (!c.ok) throw Error("quotient action fails validation: " + c.name + ": " + c.witness);
  return QuotientActionResult{std::move(q), fixed, std::move(bar)};
}

}  // namespace isgal
