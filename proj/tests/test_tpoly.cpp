#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "caj/tpoly.hpp"

#include <random>

using namespace caj;

namespace {

TPolynomial t(int sector, int level) { return TPolynomial::variable(sector, level); }

TPolynomial random_poly(std::mt19937& rng, int sectors, int max_level, int terms) {
  std::uniform_int_distribution<int> lvl(0, max_level);
  std::uniform_int_distribution<int> sec(1, sectors);
  std::uniform_int_distribution<int> num(-5, 5);
  TPolynomial p;
  for (int i = 0; i < terms; ++i) {
    TPolynomial mono = TPolynomial::constant(Rat(num(rng), 1 + (i % 3)));
    int nv = 1 + (i % 3);
    for (int v = 0; v < nv; ++v) mono = mono * t(sec(rng), lvl(rng));
    p += mono;
  }
  return p;
}

}  // namespace

TEST_CASE("degree grading") {
  CHECK(t(1, 0).degree() == 1);
  TPolynomial p = t(1, 2) * t(1, 2) * t(1, 2);
  CHECK(p.degree() == 15);
  CHECK(TPolynomial::constant(5).degree() == 0);
  CHECK(!TPolynomial().degree().has_value());
}

TEST_CASE("degree is multiplicative") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    TPolynomial p = random_poly(rng, 2, 4, 3);
    TPolynomial q = random_poly(rng, 2, 4, 2);
    if (p.is_zero() || q.is_zero()) continue;
    // leading parts cannot cancel: compare top degrees
    TPolynomial prod = p * q;
    if (prod.is_zero()) continue;  // possible only through exact cancellation
    CHECK(*prod.degree() <= *p.degree() + *q.degree());
    TPolynomial top = p.homogeneous_part(*p.degree()) * q.homogeneous_part(*q.degree());
    if (!top.is_zero()) CHECK(*prod.degree() == *p.degree() + *q.degree());
  }
}

TEST_CASE("graded parts") {
  TPolynomial p = t(1, 0) * t(1, 0) * t(1, 0) + t(1, 1);
  auto parts = p.graded_parts();
  CHECK(parts.size() == 1);
  CHECK(parts.count(3) == 1);
  CHECK(parts[3] == p);

  TPolynomial q = t(1, 0) + t(1, 0) * t(1, 0);
  auto qp = q.graded_parts();
  CHECK(qp.size() == 2);
  CHECK(qp[1] == t(1, 0));
  CHECK(qp[2] == t(1, 0) * t(1, 0));

  CHECK(TPolynomial().graded_parts().empty());
  TPolynomial sum;
  for (auto& [d, part] : qp) sum += part;
  CHECK(sum == q);
}

TEST_CASE("derivative and mul_var") {
  TPolynomial p = t(1, 0) * t(1, 0);
  CHECK(p.derivative(1, 0) == t(1, 0).scaled(2));
  CHECK(p.derivative(1, 1).is_zero());
  CHECK(t(1, 1).mul_var(1, 0) == t(1, 0) * t(1, 1));
}

TEST_CASE("monomial text is canonical") {
  TPolynomial p = t(2, 1) * t(1, 3) * t(1, 3);
  CHECK(monomial_to_string(p.terms().begin()->first) == "T[1][3]^2 * T[2][1]^1");
  CHECK(monomial_to_string({}) == "1");
}

TEST_CASE("substitute_basis identity and scaling") {
  std::mt19937 rng(17);
  HbarSeries s(2);
  s.at(0) = TPolynomial::constant(1);
  s.at(1) = random_poly(rng, 1, 3, 4);
  s.at(2) = random_poly(rng, 1, 3, 4);
  CHECK(substitute_basis(s, RatMatrix::identity(1)) == s);

  RatMatrix two(1);
  two.at(0, 0) = 2;
  TPolynomial sq = t(1, 0) * t(1, 0);
  CHECK(substitute_basis(sq, two) == sq.scaled(4));
}

TEST_CASE("substitute_basis round trip and grading") {
  std::mt19937 rng(23);
  RatMatrix psi(2);
  psi.at(0, 0) = Rat(2, 3);
  psi.at(0, 1) = Rat(1, 5);
  psi.at(1, 0) = Rat(-1, 2);
  psi.at(1, 1) = Rat(3, 7);
  HbarSeries s(2);
  s.at(0) = TPolynomial::constant(1);
  s.at(1) = random_poly(rng, 2, 3, 5);
  s.at(2) = random_poly(rng, 2, 4, 5);
  HbarSeries image = substitute_basis(s, psi);
  CHECK(substitute_basis(image, psi.inverse()) == s);
  // degree-d monomials map to degree-d polynomials
  for (auto& [d, part] : s.at(2).graded_parts()) {
    TPolynomial mapped = substitute_basis(part, psi);
    for (auto& [dd, pp] : mapped.graded_parts()) CHECK(dd == d);
  }
}

TEST_CASE("substitute_basis rejects singular matrices") {
  RatMatrix sing(2);
  sing.at(0, 0) = 1;
  sing.at(0, 1) = 2;
  sing.at(1, 0) = 2;
  sing.at(1, 1) = 4;
  CHECK_THROWS_AS((void)substitute_basis(HbarSeries::one(1), sing), std::domain_error);
}

TEST_CASE("hbar series product truncates at the smaller order") {
  HbarSeries a(3), b(2);
  a.at(0) = TPolynomial::constant(1);
  a.at(1) = t(1, 0);
  b.at(0) = TPolynomial::constant(1);
  b.at(2) = t(1, 1);
  HbarSeries p = a * b;
  CHECK(p.order() == 2);
  CHECK(p.at(0) == TPolynomial::constant(1));
  CHECK(p.at(1) == t(1, 0));
  CHECK(p.at(2) == t(1, 1));
}
