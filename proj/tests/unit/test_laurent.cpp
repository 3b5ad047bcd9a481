#include <doctest.h>

#include "sst/errors.hpp"
#include "sst/laurent.hpp"

using namespace sst;

namespace {

LaurentPoly X(int j) { return LaurentPoly::var(VarId::coarse(j)); }
LaurentPoly X(int i, int j) { return LaurentPoly::var(VarId::fine(i, j)); }

}  // namespace

TEST_CASE("ring operations") {
  CHECK((X(1) + X(2)) * (X(1) - X(2)) == X(1).pow(2) - X(2).pow(2));
  CHECK(X(1) * LaurentPoly(1) == X(1));
  CHECK((X(1) - X(1)).is_zero());
  CHECK(div_exact(X(1, 1) * X(2, 3), X(1, 1)) == X(2, 3));
  CHECK(div_exact(X(1).pow(2) - X(2).pow(2), X(1) + X(2)) == X(1) - X(2));
  CHECK_THROWS_AS(div_exact(X(1) + LaurentPoly(1), X(1) + X(2)), ArithmeticError);
}

TEST_CASE("face monomials") {
  CHECK(monomial_for_face({1, 3, 5}) == X(1, 1) * X(2, 3) * X(3, 5));
  CHECK(monomial_for_face({}) == LaurentPoly(1));
  CHECK(monomial_for_face({1, 3, 5}, Weighting::Coarse) == X(1) * X(3) * X(5));
  CHECK(monomial_for_face({1, 3}, Weighting::Fine, false) ==
        LaurentPoly::xvar(VarId::fine(1, 1)) * LaurentPoly::xvar(VarId::fine(2, 3)));
}

TEST_CASE("raising") {
  CHECK(raise(X(1, 3), 1, 2) == X(2, 3));
  CHECK(raise(X(3, 3), 1, 2).is_zero());
  CHECK(raise(X(1, 1) + X(2, 5), 0, 2) == X(1, 1) + X(2, 5));
  CHECK_THROWS_AS(raise(LaurentPoly::var(VarId::fine(3, 3), -1), 1, 2), ArithmeticError);
}

TEST_CASE("evaluation and collapse") {
  CHECK(coarse_collapse(X(1, 2) * X(2, 3) + X(3, 2)) == X(2) * X(3) + X(2));
  Assignment a{{VarId::fine(1, 2), mpq_class(3, 7)}};
  CHECK(evaluate(div_exact(X(1, 2), X(1, 2)), a) == 1);
  CHECK(evaluate(X(1, 2).pow(2), a) == mpq_class(9, 49));
  CHECK(evaluate_at_ones(LaurentPoly(3) * X(1) + X(2)) == 4);
  CHECK_THROWS_AS(evaluate(X(1, 1), a), InputError);
  CHECK(substitute(X(1, 2) + X(2, 2), a) == LaurentPoly(mpq_class(3, 7)) + X(2, 2));
}

TEST_CASE("sampler is deterministic") {
  RationalSampler a(20080814), b(20080814);
  for (int i = 0; i < 10; ++i) {
    mpq_class x = a.next();
    CHECK(x == b.next());
    CHECK(x > 0);
    CHECK(x.get_num() <= 10000);
    CHECK(x.get_den() <= 10000);
  }
}

TEST_CASE("canonical strings") {
  CHECK(canonical_string(LaurentPoly()) == "0");
  CHECK(canonical_string(X(2) + X(1)) == "X[1] + X[2]");
  CHECK(canonical_string(LaurentPoly::var(VarId::fine(1, 1), -1) * X(2, 3)) == "X[1,1]^-1 * X[2,3]");
  CHECK(canonical_string(LaurentPoly(mpq_class(3, 2)) * X(1) - X(2)) == "3/2 * X[1] - X[2]");
  CHECK(json_terms(X(1, 2)) == R"({"exponent_unit":"X","terms":[{"coeff":"1","exps":[[1,2,1]]}]})");
}
