#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "isgal/builders.hpp"
#include "isgal/correspondence.hpp"
#include "isgal/io.hpp"
#include "isgal/quotient.hpp"
#include "isgal/skew_ring.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Inputs {
  std::string isg_path, act_path;
  std::string example;  // paper | bounded-rank | group
  int m = 3, k = 2;
  std::string group = "Z2";
  std::int64_t mod_p = 0;
  std::string format = "text";
};

void add_input_options(CLI::App* cmd, Inputs& in, bool with_act) {
  cmd->add_option("--isg", in.isg_path, "semigroup file");
  if (with_act) cmd->add_option("--act", in.act_path, "action file");
  cmd->add_option("--example", in.example, "builtin input: paper | bounded-rank | group");
  cmd->add_option("--m", in.m, "bounded-rank ground size");
  cmd->add_option("--k", in.k, "bounded-rank bound");
  cmd->add_option("--group", in.group, "group name, e.g. Z4 or Z2xZ2");
  cmd->add_option("--mod-p", in.mod_p, "work over Z/p instead of the rationals");
  cmd->add_option("--format", in.format, "text | json | dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
}

isgal::Field field_of(const Inputs& in) {
  return in.mod_p ? isgal::Field::mod(in.mod_p) : isgal::Field::rationals();
}

isgal::InverseSemigroup load_semigroup(const Inputs& in) {
  if (!in.isg_path.empty()) return isgal::parse_isg(in.isg_path);
  if (in.example == "paper") return isgal::paper_example(field_of(in)).semigroup();
  if (in.example == "bounded-rank")
    return isgal::bounded_rank_example(in.m, in.k, field_of(in)).semigroup();
  if (in.example == "group") return isgal::named_group(in.group);
  throw isgal::Error("no input: give --isg or --example");
}

isgal::Action load_action(const Inputs& in) {
  if (!in.isg_path.empty()) {
    if (in.act_path.empty()) throw isgal::Error("this command needs --act with --isg");
    const isgal::InverseSemigroup s = isgal::parse_isg(in.isg_path);
    return isgal::parse_act(in.act_path, s, field_of(in));
  }
  if (in.example == "paper") return isgal::paper_example(field_of(in));
  if (in.example == "bounded-rank") return isgal::bounded_rank_example(in.m, in.k, field_of(in));
  if (in.example == "group")
    return isgal::group_regular_example(isgal::named_group(in.group), field_of(in));
  throw isgal::Error("no input: give --isg/--act or --example");
}

json report_to_json(const isgal::ActionReport& rep) {
  json out = json::array();
  for (const auto& c : rep.checks)
    out.push_back({{"check", c.name}, {"ok", c.ok}, {"witness", c.witness}});
  return out;
}

json report_to_json(const isgal::AxiomReport& rep) {
  json out = json::array();
  for (const auto& c : rep.checks)
    out.push_back({{"axiom", c.axiom}, {"ok", c.ok}, {"witness", c.witness}});
  return out;
}

int run_validate(const Inputs& in) {
  const isgal::InverseSemigroup s = load_semigroup(in);
  json out;
  out["elements"] = s.size();
  out["idempotents"] = s.idempotents().size();
  out["maximal"] = s.max_elements().size();
  bool ok = true;

  const isgal::OrderedGroupoid g = isgal::esn_groupoid(s);
  const isgal::AxiomReport axioms = isgal::validate_ordered(g);
  out["groupoid_axioms"] = report_to_json(axioms);
  ok = ok && axioms.all_ok();

  if (!in.act_path.empty() || !in.example.empty()) {
    try {
      const isgal::Action b = load_action(in);
      const isgal::ActionReport arep = isgal::validate_action(b);
      out["action_axioms"] = report_to_json(arep);
      out["orthogonal"] = isgal::is_orthogonal(b);
      ok = ok && arep.all_ok();
    } catch (const isgal::Error& e) {
      out["action_error"] = e.what();
      ok = false;
    }
  }
  out["ok"] = ok;
  if (in.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else if (in.format == "dot") {
    std::cout << isgal::hasse_dot(s);
  } else {
    std::cout << "elements: " << s.size() << ", idempotents: " << s.idempotents().size()
              << ", maximal: " << s.max_elements().size() << "\n";
    for (const auto& c : axioms.checks)
      std::cout << "  " << c.axiom << ": " << (c.ok ? "ok" : "FAIL " + c.witness) << "\n";
    if (out.contains("orthogonal"))
      std::cout << "  orthogonal: " << (out["orthogonal"].get<bool>() ? "yes" : "no") << "\n";
    if (out.contains("action_error"))
      std::cout << "  action: ERROR " << out["action_error"].get<std::string>() << "\n";
    std::cout << (ok ? "valid" : "INVALID") << "\n";
  }
  return ok ? 0 : 1;
}

int run_esn(const Inputs& in) {
  const isgal::InverseSemigroup s = load_semigroup(in);
  const isgal::OrderedGroupoid g = isgal::esn_groupoid(s);
  const isgal::InverseSemigroup back = isgal::esn_semigroup(g);
  bool same = back.size() == s.size();
  for (int a = 0; a < s.size() && same; ++a)
    for (int b = 0; b < s.size() && same; ++b) same = back.mul(a, b) == s.mul(a, b);
  const isgal::AxiomReport axioms = isgal::validate_ordered(g);
  if (in.format == "json") {
    json out;
    out["elements"] = s.size();
    out["inductive"] = g.is_inductive();
    out["axioms"] = report_to_json(axioms);
    out["round_trip_equal"] = same;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "groupoid on " << s.size() << " elements, inductive: "
              << (g.is_inductive() ? "yes" : "no") << ", round trip "
              << (same ? "recovers the semigroup" : "FAILS") << "\n";
  }
  return same && axioms.all_ok() ? 0 : 1;
}

int run_quotient(const Inputs& in, const std::string& normal) {
  const isgal::InverseSemigroup s = load_semigroup(in);
  std::vector<int> seed = s.idempotents();
  std::istringstream split(normal);
  std::string name;
  while (std::getline(split, name, ',')) seed.push_back(s.index_of(name));
  const isgal::Subsemigroup t = isgal::close_subset(s, seed);
  if (!isgal::is_normal(t)) {
    std::cout << "the closure of the given elements is not normal\n";
    return 1;
  }
  const isgal::QuotientStructure q = isgal::quotient(s, t);
  if (in.format == "json") {
    json out;
    out["subsemigroup_size"] = t.members.size();
    out["classes"] = json::array();
    for (int c = 0; c < q.num_classes(); ++c) {
      json cls;
      cls["name"] = q.class_names[c];
      cls["members"] = json::array();
      for (int a : q.classes[c]) cls["members"].push_back(s.name(a));
      out["classes"].push_back(cls);
    }
    out["is_inverse_semigroup"] = q.is_inverse_semigroup;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "T has " << t.members.size() << " elements; " << q.num_classes() << " classes\n";
    for (int c = 0; c < q.num_classes(); ++c) {
      std::cout << "  " << q.class_names[c] << " = {";
      for (size_t i = 0; i < q.classes[c].size(); ++i)
        std::cout << (i ? ", " : " ") << s.name(q.classes[c][i]);
      std::cout << " }\n";
    }
    std::cout << "inverse semigroup: " << (q.is_inverse_semigroup ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_subsemigroups(const Inputs& in) {
  const isgal::InverseSemigroup s = load_semigroup(in);
  std::vector<int> required;
  const std::vector<int> max = s.max_elements();
  for (int x = 0; x < s.size(); ++x)
    if (!std::binary_search(max.begin(), max.end(), x)) required.push_back(x);
  const auto lattice = isgal::enumerate_full_subsemigroups(s, required);
  if (in.format == "json") {
    json out = json::array();
    for (const auto& t : lattice) {
      json entry;
      entry["size"] = t.members.size();
      entry["normal"] = isgal::is_normal(t);
      entry["clifford"] = isgal::is_clifford_subset(t);
      entry["members"] = json::array();
      for (int a : t.members) entry["members"].push_back(s.name(a));
      out.push_back(entry);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << lattice.size() << " full subsemigroups containing the non-maximal part\n";
    for (const auto& t : lattice) {
      std::cout << "  size " << t.members.size() << ":";
      for (int a : t.members) std::cout << " " << s.name(a);
      std::cout << "\n";
    }
  }
  return 0;
}

int run_correspondence(const Inputs& in) {
  const isgal::Action b = load_action(in);
  const isgal::CorrespondenceReport rep = isgal::correspondence(b);
  if (in.format == "dot") {
    std::cout << isgal::correspondence_dot(rep);
    return 0;
  }
  if (in.format == "json") {
    json out;
    out["pairs"] = json::array();
    for (const auto& p : rep.pairs) {
      json entry;
      entry["subalgebra"] = p.subalgebra.str();
      entry["stabilizer_size"] = p.subsemigroup.members.size();
      entry["stabilizer"] = json::array();
      for (int a : p.subsemigroup.members) entry["stabilizer"].push_back(b.semigroup().name(a));
      out["pairs"].push_back(entry);
    }
    out["pair_count"] = rep.pairs.size();
    out["rejected_count"] = rep.rejected.size();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << rep.pairs.size() << " correspondence pairs ("
              << rep.candidate_subalgebra_count << " candidate subalgebras, "
              << rep.rejected.size() << " rejected)\n";
    for (const auto& p : rep.pairs) {
      std::cout << "  " << p.subalgebra.str() << "  <->  {";
      for (size_t i = 0; i < p.subsemigroup.members.size(); ++i)
        std::cout << (i ? ", " : " ") << b.semigroup().name(p.subsemigroup.members[i]);
      std::cout << " }\n";
    }
  }
  return 0;
}

int run_crossed_product(const Inputs& in) {
  const isgal::Action b = load_action(in);
  const isgal::SkewRing ring = isgal::build_skew_semigroup_ring(b);
  const auto n_basis = isgal::relation_ideal(b, ring);
  std::string witness;
  const bool assoc = isgal::check_associativity(ring, &witness);
  const isgal::CrossedProductIso iso = isgal::crossed_product_iso(b);
  if (in.format == "json") {
    json out;
    out["dimension"] = ring.dim();
    out["relation_ideal_generators"] = n_basis.size();
    out["associative"] = assoc;
    if (!assoc) out["witness"] = witness;
    out["groupoid_ring_iso"] = iso.bijective && iso.multiplicative;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "dimension " << ring.dim() << ", relation ideal generators: " << n_basis.size()
              << ", associative: " << (assoc ? "yes" : "no") << ", groupoid ring agrees: "
              << (iso.bijective && iso.multiplicative ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_theorem5(const Inputs& in) {
  const isgal::Action b = load_action(in);
  const auto coords = isgal::find_galois_coordinates(b);
  if (!coords) {
    std::cout << "no Galois coordinates found\n";
    return 1;
  }
  const isgal::GaloisTheoremReport rep = isgal::galois_theorem_checks(b, *coords);
  if (in.format == "json") {
    json out;
    out["supported"] = rep.supported;
    out["note"] = rep.note;
    out["coordinates_valid"] = rep.coordinates_valid;
    out["j_bijective"] = rep.j.bijective;
    out["j_multiplicative"] = rep.j_multiplicative;
    out["phi_bijective"] = rep.phi.bijective;
    out["t_generates"] = rep.t_generates;
    out["tau_surjective"] = rep.tau.surjective;
    out["ok"] = rep.all_ok();
    std::cout << out.dump(2) << "\n";
  } else {
    if (!rep.supported) {
      std::cout << "unsupported: " << rep.note << "\n";
      return 1;
    }
    std::cout << "coordinates: " << (rep.coordinates_valid ? "ok" : "FAIL")
              << ", j bijective: " << (rep.j.bijective ? "yes" : "no")
              << ", j multiplicative: " << (rep.j_multiplicative ? "yes" : "no")
              << ", phi bijective: " << (rep.phi.bijective ? "yes" : "no")
              << ", AtA spans: " << (rep.t_generates ? "yes" : "no")
              << ", tau surjective: " << (rep.tau.surjective ? "yes" : "no") << "\n";
  }
  return rep.all_ok() ? 0 : 1;
}

int run_example(const Inputs& in, const std::string& which, const std::string& what) {
  Inputs local = in;
  local.example = which;
  if (what == "act") {
    std::cout << isgal::emit_act(load_action(local));
  } else {
    std::cout << isgal::emit_isg(load_semigroup(local));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with inverse semigroup actions on split algebras"};
  app.require_subcommand(1);
  Inputs in;
  std::string normal, which = "paper", what = "isg";

  add_input_options(app.add_subcommand("validate", "check semigroup and action axioms"), in, true);
  add_input_options(app.add_subcommand("esn", "groupoid round trip"), in, false);
  auto* quot = app.add_subcommand("quotient", "quotient by a normal subsemigroup");
  add_input_options(quot, in, false);
  quot->add_option("--normal", normal, "comma-separated generators of T (idempotents are implied)");
  add_input_options(app.add_subcommand("subsemigroups", "full subsemigroup lattice"), in, false);
  add_input_options(app.add_subcommand("correspondence", "Galois correspondence report"), in, true);
  add_input_options(app.add_subcommand("crossed-product", "skew ring structure report"), in, true);
  add_input_options(app.add_subcommand("theorem5", "Galois equivalence checks"), in, true);
  auto* ex = app.add_subcommand("example", "emit a builtin fixture");
  ex->add_option("which", which, "paper | bounded-rank | group")->required();
  ex->add_option("what", what, "isg | act")->check(CLI::IsMember({"isg", "act"}));
  add_input_options(ex, in, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("validate")) return run_validate(in);
    if (app.got_subcommand("esn")) return run_esn(in);
    if (app.got_subcommand("quotient")) return run_quotient(in, normal);
    if (app.got_subcommand("subsemigroups")) return run_subsemigroups(in);
    if (app.got_subcommand("correspondence")) return run_correspondence(in);
    if (app.got_subcommand("crossed-product")) return run_crossed_product(in);
    if (app.got_subcommand("theorem5")) return run_theorem5(in);
    if (app.got_subcommand("example")) return run_example(in, which, what);
  } catch (const isgal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
