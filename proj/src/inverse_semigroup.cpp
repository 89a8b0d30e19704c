#include "isgal/inverse_semigroup.hpp"

#include <algorithm>
#include <map>

namespace isgal {

namespace {

std::string digits(const std::vector<int>& points) {
  std::string s;
  for (int p : points) s += std::to_string(p);
  return s;
}

}  // namespace

std::string element_name(const PartialBijection& f) {
  if (f.ground_size() > 3) return f.str();
  const auto dom = f.domain();
  const auto ran = f.range();
  if (dom.empty()) return "I0";
  if (f.is_identity_map()) return "I" + digits(dom);
  if (f.rank() == 1) return "T" + std::to_string(dom[0]) + std::to_string(f.image_of(dom[0]));
  if (f.rank() == 2) {
    if (dom == ran) return "S" + digits(dom);  // non-identity on 2 points = swap
    std::vector<int> common;
    std::set_intersection(dom.begin(), dom.end(), ran.begin(), ran.end(), std::back_inserter(common));
    if (common.size() == 1) {
      const char kind = f.image_of(common[0]) == common[0] ? 'D' : 'P';
      return kind + digits(dom) + "^" + digits(ran);
    }
    return f.str();
  }
  // rank 3 on ground {1,2,3}: the symmetric group
  std::vector<int> moved;
  for (int x : dom)
    if (f.image_of(x) != x) moved.push_back(x);
  if (moved.size() == 2) {
    int fixed = 0;
    for (int x : dom)
      if (f.image_of(x) == x) fixed = x;
    return "T" + digits(moved) + "^" + std::to_string(fixed);
  }
  // 3-cycle: list as x, f(x), f(f(x)) starting from the least point
  const int a = dom[0];
  return "S" + std::to_string(a) + std::to_string(f.image_of(a)) + std::to_string(f.image_of(f.image_of(a)));
}

InverseSemigroup InverseSemigroup::from_table(std::vector<std::string> names,
                                              std::vector<std::vector<int>> mul) {
  InverseSemigroup s;
  s.names_ = std::move(names);
  s.mul_ = std::move(mul);
  const int n = static_cast<int>(s.names_.size());
  if (static_cast<int>(s.mul_.size()) != n) throw Error("from_table: table size mismatch");
  for (const auto& row : s.mul_) {
    if (static_cast<int>(row.size()) != n) throw Error("from_table: ragged table");
    for (int v : row)
      if (v < 0 || v >= n) throw Error("from_table: entry outside element set");
  }
  s.finalize();
  return s;
}

InverseSemigroup InverseSemigroup::close(const std::vector<PartialBijection>& generators) {
  if (generators.empty()) throw Error("close: empty generator set");
  const int m = generators[0].ground_size();
  for (const auto& g : generators)
    if (g.ground_size() != m) throw Error("close: mixed ground sizes");

  std::map<PartialBijection, int> index;
  std::vector<PartialBijection> elems;
  auto add = [&](const PartialBijection& f) {
    if (index.emplace(f, static_cast<int>(elems.size())).second) elems.push_back(f);
  };
  for (const auto& g : generators) {
    add(g);
    add(invert(g));
  }
  // closed under products; inverses follow since inv(ab) = inv(b) inv(a)
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      add(compose(elems[i], elems[j]));
      add(compose(elems[j], elems[i]));
    }

  InverseSemigroup s;
  s.realization_ = elems;
  s.names_.reserve(elems.size());
  for (const auto& f : elems) s.names_.push_back(element_name(f));
  const int n = static_cast<int>(elems.size());
  s.mul_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.mul_[i][j] = index.at(compose(elems[i], elems[j]));
  s.finalize();
  return s;
}

void InverseSemigroup::finalize() {
  const int n = size();
  // associativity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          throw Error("not associative at (" + names_[a] + ", " + names_[b] + ", " + names_[c] + ")");
  // unique inverses
  inv_.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (mul_[mul_[s][t]][s] == s && mul_[mul_[t][s]][t] == t) {
        if (inv_[s] != -1)
          throw Error("inverse of " + names_[s] + " is not unique (" + names_[inv_[s]] + ", " + names_[t] + ")");
        inv_[s] = t;
      }
    }
    if (inv_[s] == -1) throw Error("no inverse for " + names_[s]);
  }
  // idempotents commute
  idempotents_.clear();
  for (int s = 0; s < n; ++s)
    if (is_idempotent(s)) idempotents_.push_back(s);
  for (int e : idempotents_)
    for (int f : idempotents_)
      if (mul_[e][f] != mul_[f][e])
        throw Error("idempotents " + names_[e] + ", " + names_[f] + " do not commute");
  // natural partial order
  leq_.assign(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int f : idempotents_)
        if (mul_[t][f] == s) {
          leq_[s][t] = true;
          break;
        }
}

int InverseSemigroup::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  throw Error("no element named " + name);
}

std::optional<int> InverseSemigroup::restricted_product(int s, int t) const {
  if (mul_[inv_[s]][s] != mul_[t][inv_[t]]) return std::nullopt;
  return mul_[s][t];
}

std::vector<int> InverseSemigroup::max_elements() const {
  std::vector<int> out;
  for (int s = 0; s < size(); ++s) {
    bool maximal = true;
    for (int t = 0; t < size(); ++t)
      if (t != s && leq_[s][t]) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(s);
  }
  return out;
}

std::vector<int> InverseSemigroup::max_idempotents() const {
  std::vector<int> out;
  for (int e : idempotents_) {
    bool maximal = true;
    for (int f : idempotents_)
      if (f != e && leq_[e][f]) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(e);
  }
  return out;
}

std::optional<int> InverseSemigroup::identity() const {
  for (int e = 0; e < size(); ++e) {
    bool id = true;
    for (int s = 0; s < size(); ++s)
      if (mul_[e][s] != s || mul_[s][e] != s) {
        id = false;
        break;
      }
    if (id) return e;
  }
  return std::nullopt;
}

}  // namespace isgal
