#include "doctest.h"
#include "modgraph/errors.hpp"
#include "modgraph/polynomial.hpp"

using namespace modgraph;

TEST_CASE("display order is graded lexicographic") {
  const IntPolynomial x0 = IntPolynomial::variable(3, 0), x1 = IntPolynomial::variable(3, 1),
                      x2 = IntPolynomial::variable(3, 2);
  CHECK((x1 * x2 + x0 * x2 + x0 * x1).to_string() == "x0*x1 + x0*x2 + x1*x2");
  CHECK((x0 * x0 + x0 * x0).to_string() == "2*x0^2");
  CHECK((x2 + x0 * x1 - IntPolynomial::constant(3, 4)).to_string() == "x0*x1 + x2 - 4");
  CHECK(IntPolynomial(3).to_string() == "0");
  CHECK((x0 - x0).is_zero());
}

TEST_CASE("arithmetic") {
  const long a[] = {1, 2, 0};
  const long b[] = {0, 1, -1};
  const IntPolynomial p = IntPolynomial::linear(a), q = IntPolynomial::linear(b);
  const IntPolynomial product = p * q;
  CHECK(product.total_degree() == 2);
  CHECK(product.is_homogeneous());
  CHECK(product.divide_exact(q) == p);
  CHECK_THROWS_AS(product.divide_exact(p + IntPolynomial::constant(3, 1)), InternalError);
  CHECK((-p + p).is_zero());
  CHECK_FALSE((p + IntPolynomial::constant(3, 1)).is_homogeneous());
  CHECK_THROWS(p + IntPolynomial(2));
}

TEST_CASE("big coefficients stay exact") {
  IntPolynomial x = IntPolynomial::variable(1, 0) + IntPolynomial::constant(1, 1);
  IntPolynomial p = IntPolynomial::constant(1, 1);
  for (int i = 0; i < 70; ++i) p = p * x;
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), 70, 35);
  CHECK(p.terms().at(Exponents{35}) == binom);
}

TEST_CASE("evaluation") {
  const IntPolynomial x0 = IntPolynomial::variable(2, 0), x1 = IntPolynomial::variable(2, 1);
  const IntPolynomial p = x0 * x1 + x0 * x0 * IntPolynomial::constant(2, 3);
  const double at[] = {2.0, 0.5};
  CHECK(eval_poly(p, at) == doctest::Approx(13.0));
  CHECK(CompiledPolynomial(p)(at) == doctest::Approx(13.0));
  const double short_point[] = {1.0};
  CHECK_THROWS_AS(eval_poly(p, short_point), GraphError);
}
