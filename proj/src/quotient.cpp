#include "isgal/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace isgal {
namespace {

// half of ~_H: exists x, y in H with x.a.y defined and x.a.y <= b
bool dominated(const OrderedGroupoid& g, const std::vector<int>& h, int a, int b) {
  for (int x : h) {
    const int xa = g.pmul[x][a];
    if (xa < 0) continue;
    for (int y : h) {
      const int xay = g.pmul[xa][y];
      if (xay >= 0 && g.leq[xay][b]) return true;
    }
  }
  return false;
}

std::vector<std::vector<int>> classes_of(const std::vector<std::vector<bool>>& rel) {
  const int n = static_cast<int>(rel.size());
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(n, false);
  for (int a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::vector<int> cls;
    for (int b = 0; b < n; ++b)
      if (rel[a][b]) {
        cls.push_back(b);
        seen[b] = true;
      }
    out.push_back(std::move(cls));
  }
  return out;
}

void require_equivalence(const std::vector<std::vector<bool>>& rel, const std::string& label) {
  const int n = static_cast<int>(rel.size());
  for (int a = 0; a < n; ++a) {
    if (!rel[a][a]) throw Error(label + " is not reflexive");
    for (int b = 0; b < n; ++b) {
      if (rel[a][b] != rel[b][a]) throw Error(label + " is not symmetric");
      for (int c = 0; c < n; ++c)
        if (rel[a][b] && rel[b][c] && !rel[a][c]) throw Error(label + " is not transitive");
    }
  }
}

}  // namespace

QuotientStructure groupoid_quotient(const OrderedGroupoid& g, const SubgroupoidH& h) {
  if (h.parent != nullptr && h.parent->size() != g.size())
    throw Error("groupoid_quotient: subgroupoid belongs to a different groupoid");
  if (!is_normal_subgroupoid(SubgroupoidH{&g, h.members}))
    throw Error("groupoid_quotient: subgroupoid is not normal");

  const int n = g.size();
  std::vector<std::vector<bool>> sim(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      sim[a][b] = dominated(g, h.members, a, b) && dominated(g, h.members, b, a);
  require_equivalence(sim, "the quotient relation");

  QuotientStructure q;
  q.parent = g;
  q.normal_members = h.members;
  q.classes = classes_of(sim);
  const int m = q.num_classes();
  q.class_of.assign(n, -1);
  for (int c = 0; c < m; ++c)
    for (int a : q.classes[c]) q.class_of[a] = c;
  for (int c = 0; c < m; ++c) q.class_names.push_back("[" + g.names[q.classes[c].front()] + "]");

  // the class order and product are representative-independent (tested
  // exhaustively elsewhere); computed here from least representatives
  q.class_leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      q.class_leq[i][j] = dominated(g, h.members, q.classes[i].front(), q.classes[j].front());

  q.class_inv.resize(m);
  for (int i = 0; i < m; ++i) q.class_inv[i] = q.class_of[g.inv[q.classes[i].front()]];

  q.class_product.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int gg = q.classes[i].front(), hh = q.classes[j].front();
      if (q.class_of[g.dom(gg)] != q.class_of[g.ran(hh)]) continue;
      // [g][h] = [(g | r(a)) . a . h] for a in H with r(a) <= d(g), d(a) = r(h)
      int result = -1;
      for (int a : h.members) {
        if (!g.leq[g.ran(a)][g.dom(gg)] || g.dom(a) != g.ran(hh)) continue;
        const int gp = g.restriction(gg, g.ran(a));
        const int ga = g.pmul[gp][a];
        if (ga < 0) throw Error("groupoid_quotient: coset product factor undefined");
        const int gah = g.pmul[ga][hh];
        if (gah < 0) throw Error("groupoid_quotient: coset product undefined");
        result = q.class_of[gah];
        break;
      }
      if (result < 0)
        throw Error("groupoid_quotient: no mediating element for classes " + q.class_names[i] +
                    " and " + q.class_names[j]);
      q.class_product[i][j] = result;
    }

  q.is_inverse_semigroup = q.as_groupoid().is_inductive();
  return q;
}

OrderedGroupoid QuotientStructure::as_groupoid() const {
  OrderedGroupoid g;
  g.names = class_names;
  g.pmul = class_product;
  g.inv = class_inv;
  g.leq = class_leq;
  return g;
}

InverseSemigroup QuotientStructure::as_inverse_semigroup() const {
  if (!is_inverse_semigroup)
    throw Error("quotient idempotent classes do not form a meet semilattice");
  return esn_semigroup(as_groupoid());
}

QuotientStructure quotient(const InverseSemigroup& s, const Subsemigroup& t) {
  if (t.parent != &s) throw Error("quotient: subsemigroup belongs to a different semigroup");
  if (!is_normal(t)) throw Error("quotient: subsemigroup is not normal");
  const OrderedGroupoid g = esn_groupoid(s);
  return groupoid_quotient(g, SubgroupoidH{nullptr, t.members});
}

CongruenceReport compare_congruences(const OrderedGroupoid& g, const SubgroupoidH& h) {
  const int n = g.size();
  auto in_h = [&](int x) { return std::binary_search(h.members.begin(), h.members.end(), x); };

  std::vector<std::vector<bool>> equiv(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int p = g.pmul[g.inv[b]][a];
      equiv[a][b] = p >= 0 && in_h(p);
    }
  require_equivalence(equiv, "the plain-groupoid congruence");

  std::vector<std::vector<bool>> sim(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      sim[a][b] = dominated(g, h.members, a, b) && dominated(g, h.members, b, a);
  require_equivalence(sim, "the quotient relation");

  CongruenceReport rep;
  rep.equiv_classes = classes_of(equiv);
  rep.sim_classes = classes_of(sim);
  rep.equiv_refines_sim = true;
  rep.coincide = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (equiv[a][b] && !sim[a][b]) rep.equiv_refines_sim = false;
      if (equiv[a][b] != sim[a][b]) rep.coincide = false;
    }
  return rep;
}

}  // namespace isgal
