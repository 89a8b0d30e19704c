#include "isgal/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace isgal {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// logical lines: comments and blanks stripped, with original numbers
std::vector<std::pair<int, std::string>> logical_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string word;
    if (probe >> word) out.emplace_back(no, line);
  }
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

InverseSemigroup parse_partial_maps(const std::vector<std::pair<int, std::string>>& lines,
                                    size_t start) {
  int ground = -1;
  std::vector<PartialBijection> gens;
  std::vector<std::string> gen_names;
  for (size_t k = start; k < lines.size(); ++k) {
    const auto& [no, line] = lines[k];
    const std::vector<std::string> tok = tokens_of(line);
    if (tok[0] == "ground") {
      if (tok.size() != 2) parse_fail(no, "expected: ground m");
      ground = std::stoi(tok[1]);
      if (ground < 1) parse_fail(no, "ground size must be positive");
    } else if (tok[0] == "element") {
      if (ground < 0) parse_fail(no, "ground must come before elements");
      if (tok.size() < 3 || tok[2] != "map") parse_fail(no, "expected: element NAME map i:j ...");
      std::vector<std::pair<int, int>> graph;
      for (size_t t = 3; t < tok.size(); ++t) {
        const size_t colon = tok[t].find(':');
        if (colon == std::string::npos) parse_fail(no, "expected i:j, got " + tok[t]);
        try {
          graph.emplace_back(std::stoi(tok[t].substr(0, colon)), std::stoi(tok[t].substr(colon + 1)));
        } catch (const std::exception&) {
          parse_fail(no, "bad map pair " + tok[t]);
        }
      }
      try {
        gens.emplace_back(ground, graph);
      } catch (const Error& e) {
        parse_fail(no, e.what());
      }
      gen_names.push_back(tok[1]);
    } else {
      parse_fail(no, "unknown directive " + tok[0]);
    }
  }
  if (gens.empty()) throw Error("no elements listed");
  InverseSemigroup closed = InverseSemigroup::close(gens);

  // given names win over the derived ones on the listed generators
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul(closed.size(), std::vector<int>(closed.size()));
  for (int i = 0; i < closed.size(); ++i) {
    std::string name = closed.name(i);
    for (size_t g = 0; g < gens.size(); ++g)
      if (closed.realization()[i] == gens[g]) name = gen_names[g];
    names.push_back(name);
    for (int j = 0; j < closed.size(); ++j) mul[i][j] = closed.mul(i, j);
  }
  return InverseSemigroup::from_table(std::move(names), std::move(mul));
}

InverseSemigroup parse_table(const std::vector<std::pair<int, std::string>>& lines, size_t start) {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  std::vector<std::vector<int>> mul;
  std::vector<int> declared_inv;
  std::vector<bool> row_seen;

  auto lookup = [&](int no, const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) parse_fail(no, "unknown element " + name);
    return it->second;
  };

  for (size_t k = start; k < lines.size(); ++k) {
    const auto& [no, line] = lines[k];
    std::vector<std::string> tok = tokens_of(line);
    if (tok[0] == "elements") {
      for (size_t t = 1; t < tok.size(); ++t) {
        if (index.count(tok[t])) parse_fail(no, "duplicate element " + tok[t]);
        index[tok[t]] = static_cast<int>(names.size());
        names.push_back(tok[t]);
      }
      mul.assign(names.size(), std::vector<int>(names.size(), -1));
      declared_inv.assign(names.size(), -1);
      row_seen.assign(names.size(), false);
    } else if (tok[0] == "row") {
      if (names.empty()) parse_fail(no, "elements must come before rows");
      if (tok.size() != names.size() + 2 || tok[1].back() != ':')
        parse_fail(no, "expected: row NAME: one entry per element");
      const int r = lookup(no, tok[1].substr(0, tok[1].size() - 1));
      row_seen[r] = true;
      for (size_t t = 2; t < tok.size(); ++t) mul[r][t - 2] = lookup(no, tok[t]);
    } else if (tok[0] == "inverse") {
      if (names.empty()) parse_fail(no, "elements must come before inverses");
      for (size_t t = 1; t < tok.size(); ++t) {
        const size_t colon = tok[t].find(':');
        if (colon == std::string::npos) parse_fail(no, "expected a:b, got " + tok[t]);
        declared_inv[lookup(no, tok[t].substr(0, colon))] = lookup(no, tok[t].substr(colon + 1));
      }
    } else {
      parse_fail(no, "unknown directive " + tok[0]);
    }
  }
  if (names.empty()) throw Error("no elements listed");
  for (size_t r = 0; r < names.size(); ++r)
    if (!row_seen[r]) throw Error("missing row for " + names[r]);

  InverseSemigroup s = InverseSemigroup::from_table(names, std::move(mul));
  for (int x = 0; x < s.size(); ++x)
    if (declared_inv[x] != -1 && declared_inv[x] != s.inv(x))
      throw Error("declared inverse of " + names[x] + " disagrees with the table");
  return s;
}

}  // namespace

InverseSemigroup parse_isg_text(const std::string& text) {
  const auto lines = logical_lines(text);
  if (lines.empty()) throw Error("empty semigroup file");
  const std::vector<std::string> head = tokens_of(lines[0].second);
  if (head.size() != 2 || head[0] != "kind")
    parse_fail(lines[0].first, "expected: kind partial_maps|table");
  if (head[1] == "partial_maps") return parse_partial_maps(lines, 1);
  if (head[1] == "table") return parse_table(lines, 1);
  parse_fail(lines[0].first, "unknown kind " + head[1]);
}

InverseSemigroup parse_isg(const std::string& path) { return parse_isg_text(read_file(path)); }

Action parse_act_text(const std::string& text, const InverseSemigroup& s, const Field& field) {
  const auto lines = logical_lines(text);
  int n = -1;
  std::vector<std::vector<int>> ideal(s.size());            // declared idempotent supports
  std::vector<std::vector<int>> sigma(s.size());            // known maps, empty = unknown
  std::vector<bool> known(s.size(), false);

  for (const auto& [no, line] : lines) {
    std::vector<std::string> tok = tokens_of(line);
    if (tok[0] == "idempotents") {
      if (tok.size() != 2) parse_fail(no, "expected: idempotents n");
      n = std::stoi(tok[1]);
      if (n < 1) parse_fail(no, "need at least one idempotent");
    } else if (tok[0] == "ideal") {
      if (n < 0) parse_fail(no, "idempotents must come first");
      if (tok.size() < 3 || tok[2] != "=") parse_fail(no, "expected: ideal NAME = i j ...");
      const int e = s.index_of(tok[1]);
      if (!s.is_idempotent(e)) parse_fail(no, tok[1] + " is not an idempotent");
      for (size_t t = 3; t < tok.size(); ++t) {
        const int i = std::stoi(tok[t]);
        if (i < 1 || i > n) parse_fail(no, "ideal point out of range");
        ideal[e].push_back(i);
      }
    } else if (tok[0] == "map") {
      if (n < 0) parse_fail(no, "idempotents must come first");
      if (tok.size() < 3 || tok[2] != ":") parse_fail(no, "expected: map NAME : i>j ...");
      const int m = s.index_of(tok[1]);
      std::vector<int> sg(n, 0);
      for (size_t t = 3; t < tok.size(); ++t) {
        const size_t gt = tok[t].find('>');
        if (gt == std::string::npos) parse_fail(no, "expected i>j, got " + tok[t]);
        const int i = std::stoi(tok[t].substr(0, gt)), j = std::stoi(tok[t].substr(gt + 1));
        if (i < 1 || i > n || j < 1 || j > n) parse_fail(no, "map point out of range");
        if (sg[i - 1] != 0) parse_fail(no, "point mapped twice in " + tok[1]);
        sg[i - 1] = j;
      }
      if (known[m]) parse_fail(no, "duplicate map for " + tok[1]);
      sigma[m] = std::move(sg);
      known[m] = true;
    } else {
      parse_fail(no, "unknown directive " + tok[0]);
    }
  }
  if (n < 0) throw Error("missing idempotents line");

  // idempotents act as the identity on their declared ideals
  for (int e : s.idempotents()) {
    std::vector<int> sg(n, 0);
    for (int i : ideal[e]) sg[i - 1] = i;
    if (known[e]) {
      if (sigma[e] != sg) throw Error("map for idempotent " + s.name(e) + " is not the identity");
    } else {
      sigma[e] = std::move(sg);
      known[e] = true;
    }
  }

  // complete by products and inverses until nothing changes
  auto compose = [&](int a, int b) {
    std::vector<int> sg(n, 0);
    for (int i = 1; i <= n; ++i) {
      const int step = sigma[b][i - 1];
      if (step != 0) sg[i - 1] = sigma[a][step - 1];
    }
    return sg;
  };
  auto merge = [&](int target, std::vector<int> sg, const std::string& how) {
    if (known[target]) {
      if (sigma[target] != sg)
        throw Error("two completions of " + s.name(target) + " disagree (" + how + ")");
      return false;
    }
    sigma[target] = std::move(sg);
    known[target] = true;
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < s.size(); ++a) {
      if (!known[a]) continue;
      std::vector<int> inv_sg(n, 0);
      for (int i = 1; i <= n; ++i)
        if (sigma[a][i - 1] != 0) inv_sg[sigma[a][i - 1] - 1] = i;
      if (merge(s.inv(a), std::move(inv_sg), "inverse of " + s.name(a))) changed = true;
      for (int b = 0; b < s.size(); ++b) {
        if (!known[b]) continue;
        if (merge(s.mul(a, b), compose(a, b), s.name(a) + " . " + s.name(b))) changed = true;
      }
    }
  }
  for (int a = 0; a < s.size(); ++a)
    if (!known[a]) throw Error("no map derivable for " + s.name(a));

  // supports come from the maps; declared ideals must agree
  std::vector<std::vector<int>> supports(s.size());
  for (int a = 0; a < s.size(); ++a)
    for (int i = 1; i <= n; ++i)
      if (sigma[a][i - 1] != 0) supports[a].push_back(sigma[a][i - 1]);
  for (int a = 0; a < s.size(); ++a) std::sort(supports[a].begin(), supports[a].end());
  for (int e : s.idempotents()) {
    std::vector<int> want = ideal[e];
    std::sort(want.begin(), want.end());
    if (supports[e] != want) throw Error("derived support of " + s.name(e) + " differs from its ideal");
  }

  Action b(s, SplitAlgebra(n, field), std::move(supports), std::move(sigma));
  ActionReport rep = validate_action(b);
  for (const auto& c : rep.checks)
    if (!c.ok) throw Error("action invalid: " + c.name + ": " + c.witness);
  return b;
}

Action parse_act(const std::string& path, const InverseSemigroup& s, const Field& field) {
  return parse_act_text(read_file(path), s, field);
}

std::string emit_isg(const InverseSemigroup& s) {
  std::ostringstream out;
  out << "kind table\n";
  out << "elements";
  for (int i = 0; i < s.size(); ++i) out << " " << s.name(i);
  out << "\n";
  for (int i = 0; i < s.size(); ++i) {
    out << "row " << s.name(i) << ":";
    for (int j = 0; j < s.size(); ++j) out << " " << s.name(s.mul(i, j));
    out << "\n";
  }
  out << "inverse";
  for (int i = 0; i < s.size(); ++i) out << " " << s.name(i) << ":" << s.name(s.inv(i));
  out << "\n";
  return out.str();
}

std::string emit_act(const Action& b) {
  const InverseSemigroup& s = b.semigroup();
  std::ostringstream out;
  out << "idempotents " << b.algebra().n << "\n";
  for (int e : s.idempotents()) {
    if (b.support(e).empty()) continue;
    out << "ideal " << s.name(e) << " =";
    for (int i : b.support(e)) out << " " << i;
    out << "\n";
  }
  for (int a = 0; a < s.size(); ++a) {
    if (s.is_idempotent(a)) continue;
    out << "map " << s.name(a) << " :";
    for (int i = 1; i <= b.algebra().n; ++i)
      if (b.sigma(a, i) != 0) out << " " << i << ">" << b.sigma(a, i);
    out << "\n";
  }
  return out.str();
}

std::string hasse_dot(const InverseSemigroup& s) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < s.size(); ++i) out << "  n" << i << " [label=\"" << s.name(i) << "\"];\n";
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      if (a == b || !s.leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < s.size() && cover; ++c)
        if (c != a && c != b && s.leq(a, c) && s.leq(c, b)) cover = false;
      if (cover) out << "  n" << a << " -> n" << b << ";\n";
    }
  out << "}\n";
  return out.str();
}

std::string correspondence_dot(const CorrespondenceReport& rep) {
  std::ostringstream out;
  out << "digraph correspondence {\n  rankdir=BT;\n  node [shape=box];\n";
  const auto& pairs = rep.pairs;
  for (size_t i = 0; i < pairs.size(); ++i)
    out << "  n" << i << " [label=\"" << pairs[i].subalgebra.str() << "\\n|T| = "
        << pairs[i].subsemigroup.members.size() << "\"];\n";
  for (size_t a = 0; a < pairs.size(); ++a)
    for (size_t b = 0; b < pairs.size(); ++b) {
      if (a == b || !pairs[a].subalgebra.is_refinement_of(pairs[b].subalgebra)) continue;
      bool cover = true;
      for (size_t c = 0; c < pairs.size() && cover; ++c)
        if (c != a && c != b && pairs[a].subalgebra.is_refinement_of(pairs[c].subalgebra) &&
            pairs[c].subalgebra.is_refinement_of(pairs[b].subalgebra))
          cover = false;
      if (cover) out << "  n" << a << " -> n" << b << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace isgal
