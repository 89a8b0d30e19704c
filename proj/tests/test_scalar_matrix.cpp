#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isgal/matrix.hpp"
#include "isgal/scalar.hpp"

using namespace isgal;

TEST_CASE("rational arithmetic is exact") {
  const Field q = Field::rationals();
  const Scalar third = Scalar::one(q) / Scalar(q, 3);
  CHECK(third + third + third == Scalar::one(q));
  CHECK((Scalar(q, 2) * third).str() == "2/3");
  CHECK(Scalar(q, 5) - Scalar(q, 5) == Scalar::zero(q));
  CHECK((-Scalar(q, 4)) + Scalar(q, 4) == Scalar::zero(q));
  CHECK_THROWS_AS(Scalar(q, 1) / Scalar::zero(q), Error);
}

TEST_CASE("mod-p arithmetic") {
  const Field f7 = Field::mod(7);
  CHECK(Scalar(f7, 10) == Scalar(f7, 3));
  CHECK(Scalar(f7, -1) == Scalar(f7, 6));
  // Fermat: a^6 = 1 for a != 0
  for (int a = 1; a < 7; ++a) {
    Scalar x = Scalar::one(f7);
    for (int i = 0; i < 6; ++i) x *= Scalar(f7, a);
    CHECK(x.is_one());
  }
  CHECK(Scalar(f7, 3) / Scalar(f7, 5) * Scalar(f7, 5) == Scalar(f7, 3));
  CHECK_THROWS_AS(Scalar(f7, 1) + Scalar(Field::rationals(), 1), Error);
  CHECK_THROWS_AS(Field::mod(6), Error);
}

TEST_CASE("rank by Gaussian elimination") {
  const Field q = Field::rationals();
  Matrix m(q, 3, 3);
  // rows: (1,2,3), (2,4,6), (0,1,1): rank 2
  int vals[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.at(r, c) = Scalar(q, vals[r][c]);
  CHECK(m.rank() == 2);
  CHECK(Matrix(q, 4, 4).rank() == 0);
}

TEST_CASE("solve finds a solution exactly when consistent") {
  const Field q = Field::rationals();
  Matrix m(q, 2, 2);
  m.at(0, 0) = Scalar(q, 1);
  m.at(0, 1) = Scalar(q, 2);
  m.at(1, 0) = Scalar(q, 2);
  m.at(1, 1) = Scalar(q, 4);
  // consistent: b in the column span
  auto sol = m.solve({Scalar(q, 3), Scalar(q, 6)});
  REQUIRE(sol.has_value());
  CHECK(m.apply(*sol) == std::vector<Scalar>{Scalar(q, 3), Scalar(q, 6)});
  // inconsistent
  CHECK_FALSE(m.solve({Scalar(q, 3), Scalar(q, 7)}).has_value());
}

TEST_CASE("matrix product against hand computation") {
  const Field q = Field::rationals();
  Matrix a(q, 2, 2), b(q, 2, 2);
  int av[2][2] = {{1, 2}, {3, 4}}, bv[2][2] = {{0, 1}, {1, 1}};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      a.at(r, c) = Scalar(q, av[r][c]);
      b.at(r, c) = Scalar(q, bv[r][c]);
    }
  const Matrix p = a * b;
  int pv[2][2] = {{2, 3}, {4, 7}};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) CHECK(p.at(r, c) == Scalar(q, pv[r][c]));
}

TEST_CASE("span_rank") {
  const Field q = Field::rationals();
  std::vector<std::vector<Scalar>> vecs = {
      {Scalar(q, 1), Scalar(q, 0), Scalar(q, 1)},
      {Scalar(q, 0), Scalar(q, 1), Scalar(q, 1)},
      {Scalar(q, 1), Scalar(q, 1), Scalar(q, 2)},
  };
  CHECK(span_rank(q, vecs) == 2);
  CHECK(span_rank(q, {}) == 0);
}
