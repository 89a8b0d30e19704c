#include "isgal/builders.hpp"

#include <algorithm>
#include <numeric>

namespace isgal {
namespace {

// all partial bijections of {1..m} with rank <= maxrank, in image-vector order
std::vector<PartialBijection> partial_bijections(int m, int maxrank) {
  std::vector<PartialBijection> out;
  std::vector<int> img(m, 0);  // img[i] = image of i+1, 0 = undefined
  while (true) {
    bool injective = true;
    int rank = 0;
    for (int i = 0; i < m && injective; ++i) {
      if (img[i] == 0) continue;
      ++rank;
      for (int j = 0; j < i; ++j)
        if (img[j] == img[i]) injective = false;
    }
    if (injective && rank <= maxrank) {
      std::vector<std::pair<int, int>> graph;
      for (int i = 0; i < m; ++i)
        if (img[i] != 0) graph.emplace_back(i + 1, img[i]);
      out.emplace_back(m, graph);
    }
    int i = m - 1;
    for (; i >= 0; --i) {
      if (img[i] < m) {
        ++img[i];
        break;
      }
      img[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

std::vector<std::vector<int>> k_subsets(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == m - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

InverseSemigroup cyclic_group(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  }
  return InverseSemigroup::from_table(std::move(names), std::move(mul));
}

InverseSemigroup product_group(const InverseSemigroup& g, const InverseSemigroup& h) {
  const int n = g.size(), m = h.size();
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul(n * m, std::vector<int>(n * m));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < m; ++b) names.push_back("(" + g.name(a) + "," + h.name(b) + ")");
  for (int a = 0; a < n * m; ++a)
    for (int b = 0; b < n * m; ++b)
      mul[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
  return InverseSemigroup::from_table(std::move(names), std::move(mul));
}

}  // namespace

InverseSemigroup symmetric_inverse_monoid(int m) {
  if (m < 1 || m > 4) throw Error("symmetric inverse monoid supported for 1 <= m <= 4");
  return InverseSemigroup::close(partial_bijections(m, m));
}

Action bounded_rank_example(int m, int k, const Field& field) {
  if (k < 1 || k > m || m > 4) throw Error("bounded rank example needs 1 <= k <= m <= 4");
  InverseSemigroup s = InverseSemigroup::close(partial_bijections(m, k));
  const std::vector<std::vector<int>> subsets = k_subsets(m, k);
  const int n = static_cast<int>(subsets.size());
  SplitAlgebra alg(n * k, field);

  auto subset_index = [&](const std::vector<int>& set) {
    for (int i = 0; i < n; ++i)
      if (subsets[i] == set) return i;
    throw Error("domain is not a k-subset");
  };

  std::vector<std::vector<int>> supports(s.size());
  std::vector<std::vector<int>> sigma(s.size(), std::vector<int>(alg.n, 0));
  for (int t = 0; t < s.size(); ++t) {
    const PartialBijection& f = s.realization()[t];
    if (f.rank() != k) continue;  // non-maximal: zero ideal
    const std::vector<int> dom = f.domain();
    std::vector<int> ran = f.range();
    const int i = subset_index(dom), j = subset_index(ran);
    for (int l = 1; l <= k; ++l) supports[t].push_back(j * k + l);
    for (int l = 0; l < k; ++l) {
      const int image = f.graph()[l].second;  // f of the l-th smallest domain point
      const int pos = static_cast<int>(std::lower_bound(ran.begin(), ran.end(), image) - ran.begin());
      sigma[t][i * k + l] = j * k + pos + 1;
    }
  }
  return Action(std::move(s), alg, std::move(supports), std::move(sigma));
}

Action paper_example(const Field& field) { return bounded_rank_example(3, 2, field); }

Action group_regular_example(const InverseSemigroup& group, const Field& field) {
  if (group.idempotents().size() != 1 || !group.identity())
    throw Error("regular example needs a group (exactly one idempotent)");
  const int n = group.size();
  if (n > 16) throw Error("regular example bounded at order 16");
  SplitAlgebra alg(n, field);
  std::vector<std::vector<int>> supports(n);
  std::vector<std::vector<int>> sigma(n, std::vector<int>(n, 0));
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g) {
      supports[h].push_back(g + 1);
      sigma[h][g] = group.mul(h, g) + 1;
    }
  return Action(group, alg, std::move(supports), std::move(sigma));
}

InverseSemigroup named_group(const std::string& name) {
  if (name == "S3") {
    std::vector<PartialBijection> perms;
    for (const PartialBijection& f : partial_bijections(3, 3))
      if (f.rank() == 3) perms.push_back(f);
    return InverseSemigroup::close(perms);
  }
  std::vector<InverseSemigroup> factors;
  size_t pos = 0;
  while (pos < name.size()) {
    if (name[pos] != 'Z') throw Error("unknown group name " + name);
    size_t end = pos + 1;
    while (end < name.size() && std::isdigit(static_cast<unsigned char>(name[end]))) ++end;
    if (end == pos + 1) throw Error("unknown group name " + name);
    const int n = std::stoi(name.substr(pos + 1, end - pos - 1));
    if (n < 1 || n > 16) throw Error("cyclic order out of range in " + name);
    factors.push_back(cyclic_group(n));
    pos = end;
    if (pos < name.size()) {
      if (name[pos] != 'x') throw Error("unknown group name " + name);
      ++pos;
    }
  }
  if (factors.empty()) throw Error("unknown group name " + name);
  InverseSemigroup g = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) g = product_group(g, factors[i]);
  return g;
}

GroupoidAction example_32_groupoid(const Field& field) {
  // indices: 0 d(x), 1 r(x), 2 r(z), 3 x, 4 x^-1, 5 z
  OrderedGroupoid g;
  g.names = {"d(x)", "r(x)", "r(z)", "x", "x^-1", "z"};
  g.inv = {0, 1, 2, 4, 3, 5};
  g.pmul.assign(6, std::vector<int>(6, -1));
  const int DX = 0, RX = 1, W = 2, X = 3, XI = 4, Z = 5;
  g.pmul[DX][DX] = DX;
  g.pmul[RX][RX] = RX;
  g.pmul[W][W] = W;
  g.pmul[X][DX] = X;
  g.pmul[RX][X] = X;
  g.pmul[XI][RX] = XI;
  g.pmul[DX][XI] = XI;
  g.pmul[X][XI] = RX;
  g.pmul[XI][X] = DX;
  g.pmul[Z][W] = Z;
  g.pmul[W][Z] = Z;
  g.pmul[Z][Z] = W;
  g.leq.assign(6, std::vector<bool>(6, false));
  for (int i = 0; i < 6; ++i) g.leq[i][i] = true;
  g.leq[X][Z] = g.leq[XI][Z] = g.leq[DX][W] = g.leq[RX][W] = true;

  SplitAlgebra alg(4, field);
  std::vector<std::vector<int>> supports = {{1, 3}, {2, 4}, {1, 2, 3, 4},
                                            {2, 4}, {1, 3}, {1, 2, 3, 4}};
  std::vector<std::vector<int>> sigma(6, std::vector<int>(4, 0));
  sigma[DX] = {1, 0, 3, 0};
  sigma[RX] = {0, 2, 0, 4};
  sigma[W] = {1, 2, 3, 4};
  sigma[X] = {2, 0, 4, 0};   // the restriction of z to {1,3}
  sigma[XI] = {0, 1, 0, 3};  // its inverse
  sigma[Z] = {2, 1, 4, 3};
  return GroupoidAction(std::move(g), alg, std::move(supports), std::move(sigma));
}

}  // namespace isgal
