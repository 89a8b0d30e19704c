#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>

#include "isgal/builders.hpp"
#include "isgal/io.hpp"

using namespace isgal;

namespace {

const std::string fixtures = ISGAL_FIXTURE_DIR;
const std::string cli = ISGAL_CLI_PATH;

int run(const std::string& args) {
  const int status = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

// isomorphic via the identity on names (element order may differ)
void check_same(const InverseSemigroup& a, const InverseSemigroup& b) {
  REQUIRE(a.size() == b.size());
  for (int i = 0; i < a.size(); ++i) {
    const int bi = b.index_of(a.name(i));
    for (int j = 0; j < a.size(); ++j)
      CHECK(a.name(a.mul(i, j)) == b.name(b.mul(bi, b.index_of(a.name(j)))));
  }
}

}  // namespace

TEST_CASE("the generator fixture closes to the running example") {
  const InverseSemigroup s = parse_isg(fixtures + "/paper.isg");
  check_same(s, paper_example(Field::rationals()).semigroup());
}

TEST_CASE("the action fixture completes to the running example") {
  const InverseSemigroup s = parse_isg(fixtures + "/paper.isg");
  const Action b = parse_act(fixtures + "/paper.act", s, Field::rationals());
  const Action expect = paper_example(Field::rationals());
  for (int x = 0; x < s.size(); ++x) {
    const int px = expect.semigroup().index_of(s.name(x));
    CHECK(b.support(x) == expect.support(px));
    for (int i = 1; i <= 6; ++i) CHECK(b.sigma(x, i) == expect.sigma(px, i));
  }
}

TEST_CASE("table files parse and declared inverses are checked") {
  const InverseSemigroup s = parse_isg(fixtures + "/z2_with_zero.isg");
  CHECK(s.size() == 3);
  CHECK(s.inv(s.index_of("S12")) == s.index_of("S12"));
  CHECK_THROWS_AS(parse_isg_text("kind table\n"
                                 "elements e a\n"
                                 "row e: e a\n"
                                 "row a: a e\n"
                                 "inverse a:e\n"),
                  Error);
}

TEST_CASE("emit and parse are mutually inverse") {
  for (const InverseSemigroup& s :
       {paper_example(Field::rationals()).semigroup(), named_group("Z4"),
        symmetric_inverse_monoid(2)}) {
    check_same(parse_isg_text(emit_isg(s)), s);
  }
  const Action b = paper_example(Field::rationals());
  const Action back = parse_act_text(emit_act(b), b.semigroup(), Field::rationals());
  for (int x = 0; x < b.semigroup().size(); ++x) {
    CHECK(back.support(x) == b.support(x));
    for (int i = 1; i <= 6; ++i) CHECK(back.sigma(x, i) == b.sigma(x, i));
  }
}

TEST_CASE("parse errors carry line numbers and reasons") {
  CHECK_THROWS_AS(parse_isg_text(""), Error);
  CHECK_THROWS_AS(parse_isg_text("kind widgets\n"), Error);
  CHECK_THROWS_AS(parse_isg_text("kind partial_maps\nelement f map 1:2\n"), Error);  // no ground
  CHECK_THROWS_AS(parse_isg_text("kind partial_maps\nground 2\nelement f map 1:3\n"), Error);
  const InverseSemigroup z2 = named_group("Z2");
  CHECK_THROWS_AS(parse_act_text("ideal 0 = 1\n", z2, Field::rationals()), Error);
  // inconsistent maps: the non-identity squares to the identity, so its
  // relabeling must be an involution
  CHECK_THROWS_AS(parse_act_text("idempotents 2\nideal 0 = 1 2\nmap 1 : 1>2 2>2\n", z2,
                                 Field::rationals()),
                  Error);
}

TEST_CASE("command line: exit codes and formats") {
  CHECK(run("validate --example paper") == 0);
  CHECK(run("validate --example paper --format json") == 0);
  CHECK(run("validate --isg " + fixtures + "/paper.isg") == 0);
  CHECK(run("validate --isg " + fixtures + "/paper.isg --act " + fixtures + "/paper.act") == 0);
  CHECK(run("esn --example group --group Z4") == 0);
  CHECK(run("quotient --example group --group Z4 --normal 2") == 0);
  CHECK(run("subsemigroups --example paper") == 0);
  CHECK(run("crossed-product --example paper") == 0);
  CHECK(run("theorem5 --example paper") == 0);
  CHECK(run("example paper isg") == 0);
  CHECK(run("example paper act") == 0);
  // validation failures exit 1
  CHECK(run("validate --isg /nonexistent.isg") == 1);
  CHECK(run("validate") == 1);  // no input given
  // usage errors exit 2
  CHECK(run("frobnicate") == 2);
  CHECK(run("validate --format yaml") == 2);
  CHECK(run("") == 2);
}
