#include "isgal/partial_bijection.hpp"

#include <algorithm>

namespace isgal {

PartialBijection::PartialBijection(int ground_size) : img_(ground_size, 0) {
  if (ground_size < 1) throw Error("PartialBijection: ground size must be positive");
}

PartialBijection::PartialBijection(int ground_size, const std::vector<std::pair<int, int>>& graph)
    : PartialBijection(ground_size) {
  for (auto [x, y] : graph) map_point(x, y);
}

void PartialBijection::map_point(int x, int y) {
  const int m = ground_size();
  if (x < 1 || x > m || y < 1 || y > m) throw Error("PartialBijection: point outside ground set");
  if (img_[x - 1] != 0) throw Error("PartialBijection: point " + std::to_string(x) + " mapped twice");
  for (int v : img_)
    if (v == y) throw Error("PartialBijection: not injective at " + std::to_string(y));
  img_[x - 1] = y;
}

PartialBijection PartialBijection::identity_on(int ground_size, const std::vector<int>& points) {
  PartialBijection f(ground_size);
  for (int x : points) f.map_point(x, x);
  return f;
}

std::vector<int> PartialBijection::domain() const {
  std::vector<int> d;
  for (int x = 1; x <= ground_size(); ++x)
    if (defined_at(x)) d.push_back(x);
  return d;
}

std::vector<int> PartialBijection::range() const {
  std::vector<int> r;
  for (int v : img_)
    if (v != 0) r.push_back(v);
  std::sort(r.begin(), r.end());
  return r;
}

int PartialBijection::rank() const {
  return static_cast<int>(domain().size());
}

bool PartialBijection::is_identity_map() const {
  for (int x = 1; x <= ground_size(); ++x)
    if (defined_at(x) && image_of(x) != x) return false;
  return true;
}

std::vector<std::pair<int, int>> PartialBijection::graph() const {
  std::vector<std::pair<int, int>> g;
  for (int x = 1; x <= ground_size(); ++x)
    if (defined_at(x)) g.emplace_back(x, image_of(x));
  return g;
}

std::string PartialBijection::str() const {
  std::string s = "(";
  bool first = true;
  for (auto [x, y] : graph()) {
    if (!first) s += " ";
    first = false;
    s += std::to_string(x) + ">" + std::to_string(y);
  }
  return s + ")";
}

PartialBijection compose(const PartialBijection& f, const PartialBijection& g) {
  if (f.ground_size() != g.ground_size()) throw Error("compose: ground-size mismatch");
  std::vector<std::pair<int, int>> graph;
  for (int x = 1; x <= g.ground_size(); ++x) {
    if (!g.defined_at(x)) continue;
    const int y = g.image_of(x);
    if (f.defined_at(y)) graph.emplace_back(x, f.image_of(y));
  }
  return PartialBijection(f.ground_size(), graph);
}

PartialBijection invert(const PartialBijection& f) {
  std::vector<std::pair<int, int>> graph;
  for (auto [x, y] : f.graph()) graph.emplace_back(y, x);
  return PartialBijection(f.ground_size(), graph);
}

}  // namespace isgal
