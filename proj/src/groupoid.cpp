#include "isgal/groupoid.hpp"

#include <algorithm>

namespace isgal {

std::vector<int> OrderedGroupoid::identities() const {
  std::vector<int> out;
  for (int g = 0; g < size(); ++g)
    if (is_identity(g)) out.push_back(g);
  return out;
}

int OrderedGroupoid::restriction(int g, int e) const {
  if (!is_identity(e) || !leq[e][dom(g)])
    throw Error("restriction: " + names[e] + " is not an identity below dom(" + names[g] + ")");
  int found = -1;
  for (int z = 0; z < size(); ++z) {
    if (leq[z][g] && dom(z) == e) {
      if (found != -1) throw Error("restriction: not unique at (" + names[g] + ", " + names[e] + ")");
      found = z;
    }
  }
  if (found < 0) throw Error("restriction: none at (" + names[g] + ", " + names[e] + ")");
  return found;
}

int OrderedGroupoid::corestriction(int e, int g) const {
  if (!is_identity(e) || !leq[e][ran(g)])
    throw Error("corestriction: " + names[e] + " is not an identity below ran(" + names[g] + ")");
  int found = -1;
  for (int z = 0; z < size(); ++z) {
    if (leq[z][g] && ran(z) == e) {
      if (found != -1) throw Error("corestriction: not unique at (" + names[e] + ", " + names[g] + ")");
      found = z;
    }
  }
  if (found < 0) throw Error("corestriction: none at (" + names[e] + ", " + names[g] + ")");
  return found;
}

std::optional<int> OrderedGroupoid::meet(int e, int f) const {
  const std::vector<int> ids = identities();
  std::vector<int> lower;
  for (int z : ids)
    if (leq[z][e] && leq[z][f]) lower.push_back(z);
  for (int z : lower) {
    bool greatest = true;
    for (int w : lower)
      if (!leq[w][z]) {
        greatest = false;
        break;
      }
    if (greatest) return z;
  }
  return std::nullopt;
}

bool OrderedGroupoid::is_inductive() const {
  const std::vector<int> ids = identities();
  for (int e : ids)
    for (int f : ids)
      if (!meet(e, f)) return false;
  return true;
}

std::vector<int> OrderedGroupoid::max_elements() const {
  std::vector<int> out;
  for (int g = 0; g < size(); ++g) {
    bool maximal = true;
    for (int h = 0; h < size(); ++h)
      if (h != g && leq[g][h]) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(g);
  }
  return out;
}

int OrderedGroupoid::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  throw Error("no groupoid element named " + name);
}

bool AxiomReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.ok; });
}

const AxiomCheck& AxiomReport::operator[](const std::string& axiom) const {
  for (const auto& c : checks)
    if (c.axiom == axiom) return c;
  throw Error("no axiom check named " + axiom);
}

AxiomReport validate_ordered(const OrderedGroupoid& g) {
  AxiomReport rep;
  const int n = g.size();
  auto fail_once = [&](AxiomCheck& c, const std::string& witness) {
    if (c.ok) {
      c.ok = false;
      c.witness = witness;
    }
  };

  // basic shape: inverse involutive, products associative where defined,
  // g^-1 g and g g^-1 defined, ∃gh iff d(g) = r(h)
  AxiomCheck shape{"groupoid", true, ""};
  for (int x = 0; x < n && shape.ok; ++x) {
    if (g.inv[g.inv[x]] != x) fail_once(shape, "inverse not involutive at " + g.names[x]);
    if (shape.ok && (g.pmul[g.inv[x]][x] < 0 || g.pmul[x][g.inv[x]] < 0))
      fail_once(shape, "d or r undefined at " + g.names[x]);
  }
  if (shape.ok) {
    for (int x = 0; x < n && shape.ok; ++x) {
      const int d = g.dom(x), r = g.ran(x);
      if (!g.is_identity(d) || !g.is_identity(r)) fail_once(shape, "d/r not identities at " + g.names[x]);
      for (int y = 0; y < n && shape.ok; ++y) {
        const bool defined = g.pmul[x][y] >= 0;
        if (defined != (d == g.ran(y)))
          fail_once(shape, "definedness mismatch at (" + g.names[x] + ", " + g.names[y] + ")");
        if (defined) {
          const int xy = g.pmul[x][y];
          if (g.inv[xy] != g.pmul[g.inv[y]][g.inv[x]])
            fail_once(shape, "inverse of product at (" + g.names[x] + ", " + g.names[y] + ")");
        }
      }
    }
    for (int x = 0; x < n && shape.ok; ++x)
      for (int y = 0; y < n && shape.ok; ++y) {
        if (g.pmul[x][y] < 0) continue;
        for (int z = 0; z < n && shape.ok; ++z) {
          if (g.pmul[y][z] < 0) continue;
          if (g.pmul[g.pmul[x][y]][z] != g.pmul[x][g.pmul[y][z]])
            fail_once(shape, "associativity at (" + g.names[x] + ", " + g.names[y] + ", " + g.names[z] + ")");
        }
      }
  }
  rep.checks.push_back(shape);

  AxiomCheck order{"partial-order", true, ""};
  for (int x = 0; x < n && order.ok; ++x) {
    if (!g.leq[x][x]) fail_once(order, "not reflexive at " + g.names[x]);
    for (int y = 0; y < n && order.ok; ++y) {
      if (x != y && g.leq[x][y] && g.leq[y][x])
        fail_once(order, "not antisymmetric at (" + g.names[x] + ", " + g.names[y] + ")");
      for (int z = 0; z < n && order.ok; ++z)
        if (g.leq[x][y] && g.leq[y][z] && !g.leq[x][z])
          fail_once(order, "not transitive at (" + g.names[x] + ", " + g.names[y] + ", " + g.names[z] + ")");
    }
  }
  rep.checks.push_back(order);

  AxiomCheck og1{"OG1", true, ""};
  for (int x = 0; x < n && og1.ok; ++x)
    for (int y = 0; y < n && og1.ok; ++y)
      if (g.leq[x][y] && !g.leq[g.inv[x]][g.inv[y]])
        fail_once(og1, "x <= y but not x^-1 <= y^-1 at (" + g.names[x] + ", " + g.names[y] + ")");
  rep.checks.push_back(og1);

  AxiomCheck og2{"OG2", true, ""};
  for (int x = 0; x < n && og2.ok; ++x)
    for (int y = 0; y < n && og2.ok; ++y) {
      if (!g.leq[x][y]) continue;
      for (int u = 0; u < n && og2.ok; ++u)
        for (int v = 0; v < n && og2.ok; ++v) {
          if (!g.leq[u][v] || g.pmul[x][u] < 0 || g.pmul[y][v] < 0) continue;
          if (!g.leq[g.pmul[x][u]][g.pmul[y][v]])
            fail_once(og2, "products of comparable pairs not comparable at (" + g.names[x] + ", " +
                               g.names[u] + ")");
        }
    }
  rep.checks.push_back(og2);

  AxiomCheck og3{"OG3", true, ""};
  AxiomCheck og3s{"OG3*", true, ""};
  for (int x = 0; x < n; ++x)
    for (int e = 0; e < n; ++e) {
      if (!g.is_identity(e)) continue;
      if (g.leq[e][g.dom(x)]) {
        int count = 0;
        for (int z = 0; z < n; ++z)
          if (g.leq[z][x] && g.dom(z) == e) ++count;
        if (count != 1)
          fail_once(og3, "restriction (" + g.names[x] + " | " + g.names[e] + ") has " +
                             std::to_string(count) + " candidates");
      }
      if (g.leq[e][g.ran(x)]) {
        int count = 0;
        for (int z = 0; z < n; ++z)
          if (g.leq[z][x] && g.ran(z) == e) ++count;
        if (count != 1)
          fail_once(og3s, "corestriction (" + g.names[e] + " | " + g.names[x] + ") has " +
                              std::to_string(count) + " candidates");
      }
    }
  rep.checks.push_back(og3);
  rep.checks.push_back(og3s);

  AxiomCheck ideal{"identities-order-ideal", true, ""};
  for (int x = 0; x < n && ideal.ok; ++x)
    for (int e = 0; e < n && ideal.ok; ++e)
      if (g.is_identity(e) && g.leq[x][e] && !g.is_identity(x))
        fail_once(ideal, g.names[x] + " <= identity " + g.names[e] + " but is not an identity");
  rep.checks.push_back(ideal);

  rep.checks.push_back(AxiomCheck{"inductive", g.is_inductive(), ""});
  return rep;
}

OrderedGroupoid esn_groupoid(const InverseSemigroup& s) {
  OrderedGroupoid g;
  const int n = s.size();
  g.names.reserve(n);
  for (int i = 0; i < n; ++i) g.names.push_back(s.name(i));
  g.inv.resize(n);
  for (int i = 0; i < n; ++i) g.inv[i] = s.inv(i);
  g.pmul.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (auto p = s.restricted_product(a, b)) g.pmul[a][b] = *p;
  g.leq.assign(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.leq[a][b] = s.leq(a, b);
  return g;
}

InverseSemigroup esn_semigroup(const OrderedGroupoid& g) {
  AxiomReport rep = validate_ordered(g);
  for (const auto& c : rep.checks)
    if (!c.ok && c.axiom != "inductive") throw Error("esn_semigroup: " + c.axiom + " fails: " + c.witness);
  if (!rep["inductive"].ok) throw Error("esn_semigroup: groupoid is not inductive");

  const int n = g.size();
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int e = *g.meet(g.dom(x), g.ran(y));
      const int xe = g.restriction(x, e);
      const int ey = g.corestriction(e, y);
      const int p = g.pmul[xe][ey];
      if (p < 0) throw Error("esn_semigroup: pseudoproduct undefined");
      mul[x][y] = p;
    }
  return InverseSemigroup::from_table(g.names, std::move(mul));
}

bool SubgroupoidH::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

bool is_ordered_subgroupoid(const OrderedGroupoid& g, const std::vector<int>& members) {
  auto in = [&](int x) { return std::binary_search(members.begin(), members.end(), x); };
  for (int a : members) {
    if (!in(g.inv[a])) return false;
    for (int b : members) {
      const int p = g.pmul[a][b];
      if (p >= 0 && !in(p)) return false;
    }
  }
  // restrictions stay inside: x in H, identity e in H, e <= d(x) => (x|e) in H
  for (int x : members)
    for (int e : members)
      if (g.is_identity(e) && g.leq[e][g.dom(x)] && !in(g.restriction(x, e))) return false;
  return true;
}

bool is_wide(const SubgroupoidH& h) {
  for (int e : h.parent->identities())
    if (!h.contains(e)) return false;
  return true;
}

bool is_normal_subgroupoid(const SubgroupoidH& h) {
  const OrderedGroupoid& g = *h.parent;
  if (!is_wide(h) || !is_ordered_subgroupoid(g, h.members)) return false;
  const int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool bounded = false;
      for (int u = 0; u < n && !bounded; ++u) bounded = g.leq[a][u] && g.leq[b][u];
      if (!bounded) continue;
      for (int x : h.members) {
        const int ax = g.pmul[g.inv[a]][x];
        if (ax < 0) continue;
        const int axb = g.pmul[ax][b];
        if (axb >= 0 && !h.contains(axb)) return false;
      }
    }
  return true;
}

SubgroupoidH max_subgroupoid(const OrderedGroupoid& g) {
  std::vector<int> max = g.max_elements();
  auto in = [&](int x) { return std::binary_search(max.begin(), max.end(), x); };
  // closure check; per the max-subgroupoid criterion this is equivalent to
  // every maximal element having maximal range identity
  for (int a : max) {
    if (!in(g.inv[a]))
      throw Error("max_subgroupoid: inverse of maximal " + g.names[a] + " is not maximal");
    if (!in(g.ran(a)))
      throw Error("max_subgroupoid: range of maximal " + g.names[a] + " is not maximal");
    for (int b : max) {
      const int p = g.pmul[a][b];
      if (p >= 0 && !in(p))
        throw Error("max_subgroupoid: product " + g.names[a] + "." + g.names[b] + " = " + g.names[p] +
                    " is not maximal");
    }
  }
  return SubgroupoidH{&g, std::move(max)};
}

SubgroupoidH lift_wide_subgroupoid(const OrderedGroupoid& g, const std::vector<int>& h_prime) {
  const SubgroupoidH max = max_subgroupoid(g);
  for (int x : h_prime)
    if (!max.contains(x)) throw Error("lift_wide_subgroupoid: " + g.names[x] + " is not maximal");
  auto in_hp = [&](int x) { return std::binary_search(h_prime.begin(), h_prime.end(), x); };
  for (int e : max.members)
    if (g.is_identity(e) && !in_hp(e))
      throw Error("lift_wide_subgroupoid: input not wide, missing identity " + g.names[e]);
  std::vector<int> members = h_prime;
  for (int x = 0; x < g.size(); ++x)
    if (!max.contains(x)) members.push_back(x);
  std::sort(members.begin(), members.end());
  return SubgroupoidH{&g, std::move(members)};
}

std::vector<ConnectedComponent> connected_components(const OrderedGroupoid& g) {
  const std::vector<int> ids = g.identities();
  // union-find over identities via d(x) ~ r(x)
  std::vector<int> parent(g.size());
  for (int i = 0; i < g.size(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int x = 0; x < g.size(); ++x) parent[find(g.dom(x))] = find(g.ran(x));

  std::vector<ConnectedComponent> out;
  for (int e : ids) {
    bool least = true;
    for (int f : ids)
      if (f < e && find(f) == find(e)) least = false;
    if (!least) continue;

    ConnectedComponent comp;
    for (int f : ids)
      if (find(f) == find(e)) comp.identities.push_back(f);
    for (int x = 0; x < g.size(); ++x)
      if (find(g.dom(x)) == find(e)) comp.elements.push_back(x);
    comp.basepoint = comp.identities.front();
    for (int x : comp.elements)
      if (g.dom(x) == comp.basepoint && g.ran(x) == comp.basepoint) comp.isotropy.push_back(x);

    // coarse factorization: pick transversal t_f with d = basepoint, r = f;
    // then x <-> (d(x), r(x), t_{r(x)}^-1 . x . t_{d(x)}) must be bijective
    comp.coarse_factorization_ok = true;
    std::vector<int> transversal;
    for (int f : comp.identities) {
      int t = -1;
      for (int x : comp.elements)
        if (g.dom(x) == comp.basepoint && g.ran(x) == f) {
          t = x;
          break;
        }
      if (t < 0) {
        comp.coarse_factorization_ok = false;
        break;
      }
      transversal.push_back(t);
    }
    if (comp.coarse_factorization_ok) {
      if (comp.elements.size() !=
          comp.identities.size() * comp.identities.size() * comp.isotropy.size()) {
        comp.coarse_factorization_ok = false;
      } else {
        std::vector<bool> hit(g.size(), false);
        for (size_t di = 0; di < comp.identities.size() && comp.coarse_factorization_ok; ++di)
          for (size_t ri = 0; ri < comp.identities.size() && comp.coarse_factorization_ok; ++ri)
            for (int h : comp.isotropy) {
              // x = t_r . h . t_d^-1 realizes the triple (d, r, h)
              const int th = g.pmul[transversal[ri]][h];
              const int x = th < 0 ? -1 : g.pmul[th][g.inv[transversal[di]]];
              if (x < 0 || hit[x]) {
                comp.coarse_factorization_ok = false;
                break;
              }
              hit[x] = true;
            }
        if (comp.coarse_factorization_ok)
          for (int x : comp.elements)
            if (!hit[x]) comp.coarse_factorization_ok = false;
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace isgal
