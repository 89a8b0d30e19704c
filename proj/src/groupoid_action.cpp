#include "isgal/groupoid_action.hpp"

#include <algorithm>

namespace isgal {

GroupoidAction::GroupoidAction(OrderedGroupoid g, SplitAlgebra a,
                               std::vector<std::vector<int>> supports,
                               std::vector<std::vector<int>> sigma)
    : groupoid_(std::move(g)),
      algebra_(std::move(a)),
      supports_(std::move(supports)),
      sigma_(std::move(sigma)) {
  const int m = groupoid_.size(), n = algebra_.n;
  if (static_cast<int>(supports_.size()) != m || static_cast<int>(sigma_.size()) != m)
    throw Error("groupoid action tables must have one entry per element");
  for (int t = 0; t < m; ++t) {
    auto& sup = supports_[t];
    std::sort(sup.begin(), sup.end());
    for (size_t i = 0; i < sup.size(); ++i) {
      if (sup[i] < 1 || sup[i] > n) throw Error("support out of range for " + groupoid_.names[t]);
      if (i > 0 && sup[i] == sup[i - 1]) throw Error("duplicate support point for " + groupoid_.names[t]);
    }
    if (static_cast<int>(sigma_[t].size()) != n) throw Error("sigma table must have one slot per point");
    for (int img : sigma_[t])
      if (img < 0 || img > n) throw Error("sigma image out of range for " + groupoid_.names[t]);
  }
}

AlgebraElement GroupoidAction::unit_of(int g) const {
  return support_idempotent(algebra_, supports_[g]);
}

AlgebraElement GroupoidAction::apply(int g, const AlgebraElement& a) const {
  AlgebraElement out(algebra_);
  for (int i = 1; i <= algebra_.n; ++i) {
    const int j = sigma_[g][i - 1];
    if (j != 0) out.coeff[j - 1] += a.coeff[i - 1];
  }
  return out;
}

namespace {

void fail_once(ActionCheck& c, const std::string& witness) {
  if (c.ok) {
    c.ok = false;
    c.witness = witness;
  }
}

}  // namespace

ActionReport validate_groupoid_action(const GroupoidAction& b) {
  const OrderedGroupoid& g = b.groupoid();
  const int m = g.size(), n = b.algebra().n;
  ActionReport rep;

  ActionCheck shape{"sigma-bijection"};
  for (int t = 0; t < m; ++t) {
    const auto& dom = b.support(g.inv[t]);
    const auto& ran = b.support(t);
    std::vector<int> image;
    for (int i = 1; i <= n; ++i) {
      const int j = b.sigma(t, i);
      const bool in_dom = std::binary_search(dom.begin(), dom.end(), i);
      if ((j != 0) != in_dom) {
        fail_once(shape, "sigma domain of " + g.names[t] + " differs from support of inverse");
        continue;
      }
      if (j != 0) image.push_back(j);
    }
    std::sort(image.begin(), image.end());
    if (shape.ok && image != ran) fail_once(shape, "sigma image of " + g.names[t] + " is not its support");
  }
  rep.checks.push_back(shape);

  ActionCheck range{"support-of-range-identity"};
  for (int t = 0; t < m; ++t)
    if (b.support(t) != b.support(g.ran(t)))
      fail_once(range, "E_" + g.names[t] + " != E_" + g.names[g.ran(t)]);
  rep.checks.push_back(range);

  ActionCheck idem{"identities-act-trivially"};
  for (int e : g.identities())
    for (int i : b.support(e))
      if (b.sigma(e, i) != i) fail_once(idem, "beta_" + g.names[e] + " moves point " + std::to_string(i));
  rep.checks.push_back(idem);

  ActionCheck hom{"sigma-functorial"};
  for (int x = 0; x < m && hom.ok; ++x)
    for (int y = 0; y < m && hom.ok; ++y) {
      const int xy = g.pmul[x][y];
      if (xy < 0) continue;
      // on E_{y^-1} = E_{(xy)^-1} the composite must agree with sigma_{xy}
      for (int i : b.support(g.inv[y])) {
        const int step = b.sigma(y, i);
        const int lhs = step == 0 ? 0 : b.sigma(x, step);
        if (lhs != b.sigma(xy, i)) {
          fail_once(hom, "sigma_" + g.names[x] + " . sigma_" + g.names[y] + " != sigma_" + g.names[xy] +
                             " at point " + std::to_string(i));
          break;
        }
      }
    }
  rep.checks.push_back(hom);

  ActionCheck ord{"order-restriction"};
  for (int x = 0; x < m && ord.ok; ++x)
    for (int y = 0; y < m && ord.ok; ++y) {
      if (x == y || !g.leq[x][y]) continue;
      if (!std::includes(b.support(y).begin(), b.support(y).end(), b.support(x).begin(),
                         b.support(x).end())) {
        fail_once(ord, "E_" + g.names[x] + " not inside E_" + g.names[y]);
        continue;
      }
      for (int i : b.support(g.inv[x]))
        if (b.sigma(x, i) != b.sigma(y, i)) {
          fail_once(ord, "beta_" + g.names[x] + " is not the restriction of beta_" + g.names[y]);
          break;
        }
    }
  rep.checks.push_back(ord);
  return rep;
}

bool is_orthogonal(const GroupoidAction& b) {
  const int n = b.algebra().n;
  std::vector<bool> owned(n, false);
  for (int e : b.groupoid().identities())
    for (int i : b.support(e)) {
      if (owned[i - 1]) return false;
      owned[i - 1] = true;
    }
  return std::all_of(owned.begin(), owned.end(), [](bool x) { return x; });
}

GroupoidAction groupoid_action_of(const Action& b) {
  OrderedGroupoid g = esn_groupoid(b.semigroup());
  std::vector<std::vector<int>> supports, sigma;
  for (int s = 0; s < b.semigroup().size(); ++s) {
    supports.push_back(b.support(s));
    std::vector<int> row(b.algebra().n);
    for (int i = 1; i <= b.algebra().n; ++i) row[i - 1] = b.sigma(s, i);
    sigma.push_back(std::move(row));
  }
  return GroupoidAction(std::move(g), b.algebra(), std::move(supports), std::move(sigma));
}

}  // namespace isgal
