#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "isgal/builders.hpp"
#include "isgal/matrix.hpp"
#include "isgal/skew_ring.hpp"

using namespace isgal;

namespace {

// the two-element chain semilattice acting with nested supports:
// a legal action that is not orthogonal
Action chain_action(const Field& f) {
  // e > f as idempotents: mul table of the meet semilattice {e, f}
  const InverseSemigroup s = InverseSemigroup::from_table({"e", "f"}, {{0, 1}, {1, 1}});
  const SplitAlgebra a(2, f);
  return Action(s, a, {{1, 2}, {1}}, {{1, 2}, {1, 0}});
}

}  // namespace

TEST_CASE("skew ring of the running example") {
  const Action b = paper_example(Field::rationals());
  const SkewRing ring = build_skew_semigroup_ring(b);
  CHECK(ring.dim() == 36);  // two points for each of the 18 maximal elements
  std::string witness;
  CHECK_MESSAGE(check_associativity(ring, &witness), witness);
  CHECK(relation_ideal(b, ring).empty());  // orthogonal: no collapsing needed
  const CrossedProductIso iso = crossed_product_iso(b);
  CHECK(iso.bijective);
  CHECK_MESSAGE(iso.multiplicative, iso.witness);
}

TEST_CASE("structure constants follow the relabelings") {
  const Action b = group_regular_example(named_group("Z4"), Field::rationals());
  const SkewRing ring = build_skew_semigroup_ring(b);
  const InverseSemigroup& g = b.semigroup();
  CHECK(ring.dim() == 16);
  for (int p = 0; p < ring.dim(); ++p)
    for (int q = 0; q < ring.dim(); ++q) {
      auto [s, i] = ring.basis[p];
      auto [t, j] = ring.basis[q];
      const int st = g.mul(s, t);
      const int expect =
          b.sigma(s, j) == i ? ring.basis_index(st, i) : -1;
      CHECK(ring.prod[p][q] == expect);
    }
}

TEST_CASE("a non-orthogonal action has a nontrivial relation ideal") {
  const Action b = chain_action(Field::rationals());
  REQUIRE(validate_action(b).all_ok());
  CHECK_FALSE(is_orthogonal(b));
  const SkewRing ring = build_skew_semigroup_ring(b);
  CHECK(ring.dim() == 3);  // e_1 u_e, e_2 u_e, e_1 u_f
  const auto gens = relation_ideal(b, ring);
  REQUIRE(gens.size() == 1);  // e_1 u_f - e_1 u_e
  CHECK(span_rank(ring.field, gens) == 1);
}

TEST_CASE("the equivalence checks pass for regular group actions") {
  for (const char* name : {"Z2", "Z3", "Z2xZ2"}) {
    const Action b = group_regular_example(named_group(name), Field::rationals());
    const auto coords = find_galois_coordinates(b);
    REQUIRE(coords.has_value());
    const GaloisTheoremReport rep = galois_theorem_checks(b, *coords);
    CHECK(rep.supported);
    CHECK(rep.coordinates_valid);
    CHECK(rep.j.bijective);
    CHECK(rep.j_multiplicative);
    CHECK(rep.phi.bijective);
    CHECK(rep.t_generates);
    CHECK(rep.tau.surjective);
    CHECK(rep.all_ok());
  }
}

TEST_CASE("a disconnected fixed algebra is reported as out of scope") {
  // Z2 acting on four points as (1 2)(3 4): two fixed blocks
  const InverseSemigroup z2 = named_group("Z2");
  const SplitAlgebra a(4, Field::rationals());
  const int e = z2.index_of("0"), g = z2.index_of("1");
  std::vector<std::vector<int>> supports(2), sigma(2, std::vector<int>(4));
  supports[e] = supports[g] = {1, 2, 3, 4};
  sigma[e] = {1, 2, 3, 4};
  sigma[g] = {2, 1, 4, 3};
  const Action b(z2, a, supports, sigma);
  REQUIRE(validate_action(b).all_ok());
  const auto coords = find_galois_coordinates(b);
  REQUIRE(coords.has_value());
  const GaloisTheoremReport rep = galois_theorem_checks(b, *coords);
  CHECK_FALSE(rep.supported);
  CHECK_FALSE(rep.note.empty());
}

TEST_CASE("groupoid and semigroup rings coincide for orthogonal actions") {
  const Action b = paper_example(Field::rationals());
  const SkewRing sr = build_skew_semigroup_ring(b);
  const SkewRing gr = build_skew_groupoid_ring(groupoid_action_of(b));
  REQUIRE(sr.dim() == gr.dim());
  CHECK(sr.basis == gr.basis);
  CHECK(sr.prod == gr.prod);
}

TEST_CASE("mod-p arithmetic gives the same structural verdicts") {
  const Action b = paper_example(Field::mod(5));
  const SkewRing ring = build_skew_semigroup_ring(b);
  CHECK(ring.dim() == 36);
  CHECK(check_associativity(ring));
  const auto coords = find_galois_coordinates(b);
  REQUIRE(coords.has_value());
  CHECK(galois_theorem_checks(b, *coords).all_ok());
}
