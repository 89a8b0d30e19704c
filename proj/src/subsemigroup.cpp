#include "isgal/subsemigroup.hpp"

#include <algorithm>
#include <set>

namespace isgal {

bool Subsemigroup::contains(int s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

std::pair<InverseSemigroup, std::vector<int>> Subsemigroup::extract() const {
  const int n = parent->size();
  std::vector<int> old_to_new(n, -1);
  for (size_t i = 0; i < members.size(); ++i) old_to_new[members[i]] = static_cast<int>(i);
  std::vector<std::string> names;
  for (int m : members) names.push_back(parent->name(m));
  std::vector<std::vector<int>> mul(members.size(), std::vector<int>(members.size()));
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      const int p = parent->mul(members[i], members[j]);
      if (old_to_new[p] < 0) throw Error("extract: member set not closed at " + parent->name(p));
      mul[i][j] = old_to_new[p];
    }
  return {InverseSemigroup::from_table(std::move(names), std::move(mul)), old_to_new};
}

Subsemigroup close_subset(const InverseSemigroup& s, std::vector<int> seed) {
  std::vector<bool> in(s.size(), false);
  std::vector<int> work;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = true;
      work.push_back(x);
    }
  };
  for (int x : seed) {
    add(x);
    add(s.inv(x));
  }
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      add(s.mul(work[i], work[j]));
      add(s.mul(work[j], work[i]));
    }
  std::sort(work.begin(), work.end());
  return Subsemigroup{&s, std::move(work)};
}

bool is_closed_subset(const InverseSemigroup& s, const std::vector<int>& members) {
  std::vector<bool> in(s.size(), false);
  for (int m : members) in[m] = true;
  for (int a : members) {
    if (!in[s.inv(a)]) return false;
    for (int b : members)
      if (!in[s.mul(a, b)]) return false;
  }
  return true;
}

bool is_full(const Subsemigroup& t) {
  for (int e : t.parent->idempotents())
    if (!t.contains(e)) return false;
  return true;
}

bool is_normal(const Subsemigroup& t) {
  if (!is_full(t)) return false;
  const InverseSemigroup& s = *t.parent;
  for (int x = 0; x < s.size(); ++x)
    for (int m : t.members)
      if (!t.contains(s.mul(s.mul(s.inv(x), m), x))) return false;
  return true;
}

bool is_clifford_subset(const Subsemigroup& t) {
  const InverseSemigroup& s = *t.parent;
  for (int m : t.members)
    if (s.mul(m, s.inv(m)) != s.mul(s.inv(m), m)) return false;
  return true;
}

bool is_clifford(const InverseSemigroup& s) {
  for (int x = 0; x < s.size(); ++x)
    if (s.mul(x, s.inv(x)) != s.mul(s.inv(x), x)) return false;
  return true;
}

std::vector<Subsemigroup> enumerate_full_subsemigroups(const InverseSemigroup& s,
                                                       const std::vector<int>& required) {
  std::vector<int> seed = required;
  for (int e : s.idempotents()) seed.push_back(e);
  const std::vector<int> max_elems = s.max_elements();

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  const Subsemigroup base = close_subset(s, seed);
  seen.insert(base.members);
  frontier.push_back(base.members);

  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& cur : frontier) {
      for (int m : max_elems) {
        if (std::binary_search(cur.begin(), cur.end(), m)) continue;
        std::vector<int> grown = cur;
        grown.push_back(m);
        auto closed = close_subset(s, grown);
        if (seen.insert(closed.members).second) next.push_back(closed.members);
      }
    }
    frontier = std::move(next);
  }

  std::vector<Subsemigroup> out;
  for (const auto& members : seen) out.push_back(Subsemigroup{&s, members});
  std::sort(out.begin(), out.end(), [](const Subsemigroup& a, const Subsemigroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

}  // namespace isgal
