#include <map>

#include "doctest.h"
#include "legdet/quadfield.hpp"

using namespace legdet;

TEST_SUITE("quadfield") {

TEST_CASE("fundamental units at small primes") {
  // (1 + sqrt 5)/2, 2 + sqrt 3, (3 + sqrt 13)/2, 8 + 3 sqrt 7.
  std::map<long, std::pair<long, long>> table{
      {5, {1, 1}}, {3, {4, 2}}, {13, {3, 1}}, {7, {16, 6}},
      {11, {20, 6}}, {17, {8, 2}}, {19, {340, 78}}, {29, {5, 1}}};
  for (const auto& [p, tu] : table) {
    QuadInt eps = fundamental_unit(p);
    CAPTURE(p);
    CHECK(eps.two_a == tu.first);
    CHECK(eps.two_b == tu.second);
  }
  CHECK_THROWS(fundamental_unit(15));
  CHECK_THROWS(fundamental_unit(2));
}

TEST_CASE("unit norm is plus or minus four in doubled coordinates") {
  for (long p : primes_in(3, 499)) {
    const QuadInvariants& v = invariants(p);
    mpz_class norm =
        v.eps.two_a * v.eps.two_a - p * v.eps.two_b * v.eps.two_b;
    CAPTURE(p);
    CHECK(norm == 4 * v.unit_norm);
    CHECK((v.unit_norm == 1 || v.unit_norm == -1));
    if (p % 4 == 3) CHECK(v.unit_norm == 1);  // norm -1 needs p = 1 (mod 4)
    CHECK((v.eps.two_a - v.eps.two_b) % 2 == 0);
    CHECK(v.eps.two_b > 0);
  }
}

TEST_CASE("unit powers compose") {
  for (long p : {5L, 7L, 13L, 61L}) {
    QuadInt e = fundamental_unit(p);
    QuadInt e2 = mul_unit(e, e);
    QuadInt e3 = mul_unit(e2, e);
    QuadInt e5 = mul_unit(e3, e2);
    CHECK(pow_unit(e, 0).two_a == 2);
    CHECK(pow_unit(e, 0).two_b == 0);
    CHECK(pow_unit(e, 1).two_a == e.two_a);
    CHECK(pow_unit(e, 3).two_a == e3.two_a);
    CHECK(pow_unit(e, 3).two_b == e3.two_b);
    CHECK(pow_unit(e, 5).two_a == e5.two_a);
    CHECK(pow_unit(e, 5).two_b == e5.two_b);
  }
}

TEST_CASE("real class numbers by independent methods") {
  std::map<long, long> table{{5, 1},  {13, 1},  {61, 1},  {79, 3},
                             {101, 1}, {199, 1}, {229, 3}, {257, 3},
                             {401, 5}};
  for (const auto& [p, h] : table) {
    CAPTURE(p);
    CHECK(class_number_real(p) == h);
    CHECK(class_number_real_analytic(p) == h);
    CHECK(class_number_real_forms(p) == h);
  }
  for (long p : primes_in(3, 499)) {
    CAPTURE(p);
    CHECK(class_number_real_analytic(p) == class_number_real_forms(p));
  }
}

TEST_CASE("imaginary class numbers by independent methods") {
  std::map<long, long> table{{7, 1},  {11, 1}, {19, 1}, {23, 3},
                             {31, 3}, {43, 1}, {47, 5}, {59, 3},
                             {67, 1}, {71, 7}, {79, 5}, {83, 3},
                             {103, 5}, {127, 5}, {163, 1}, {191, 13}};
  for (const auto& [p, h] : table) {
    CAPTURE(p);
    CHECK(class_number_imag(p) == h);
    CHECK(class_number_imag_forms(p) == h);
  }
  for (long p : primes_in(3, 499)) {
    if (p % 4 != 3 || p == 3) continue;
    CAPTURE(p);
    CHECK(class_number_imag(p) == class_number_imag_forms(p));
  }
}

TEST_CASE("invariants assemble unit powers and class data") {
  for (long p : primes_in(3, 199)) {
    const QuadInvariants& v = invariants(p);
    CAPTURE(p);
    CHECK(v.p == p);
    CHECK(v.h_plus >= 1);
    QuadInt ab = pow_unit(v.eps, v.h_plus);
    CHECK(v.ab.two_a == ab.two_a);
    CHECK(v.ab.two_b == ab.two_b);
    int c2 = jacobi(2, p);
    QuadInt abp = pow_unit(v.eps, (2 - c2) * v.h_plus);
    CHECK(v.ab_prime.two_a == abp.two_a);
    CHECK(v.ab_prime.two_b == abp.two_b);
    if (p % 4 == 3 && p > 3)
      CHECK(v.h_minus >= 1);
    else
      CHECK(v.h_minus == 0);
    // Doubled coordinates keep the half-integer parity coupled.
    CHECK((v.ab.two_a - v.ab.two_b) % 2 == 0);
    CHECK((v.ab_prime.two_a - v.ab_prime.two_b) % 2 == 0);
    // a'_p and b'_p are always integers: the exponent (2 - (2/p)) h is even
    // or the unit is integral whenever p != 5 (mod 8).
    if (p % 4 == 1) {
      CHECK(v.ab_prime.two_a % 2 == 0);
      CHECK(v.ab_prime.two_b % 2 == 0);
    }
  }
  const QuadInvariants& five = invariants(5);
  CHECK(five.ab.two_a == 1);  // (2 a_5, 2 b_5) = (1, 1)
  CHECK(five.ab.two_b == 1);
  CHECK(invariants(7).h_minus == 1);
  CHECK(invariants(23).h_minus == 3);
}

TEST_CASE("seeding preloads the memo consistently") {
  QuadInvariants copy = invariants(37);
  seed_invariants(copy);
  const QuadInvariants& again = invariants(37);
  CHECK(again.eps.two_a == copy.eps.two_a);
  CHECK(again.h_plus == copy.h_plus);
}

TEST_CASE("analytic unit product crosschecks") {
  for (long p : primes_in(5, 97)) {
    if (p % 4 != 1) continue;
    for (long a : {1L, 2L, 3L}) {
      if (a % p == 0) continue;
      CAPTURE(p);
      CAPTURE(a);
      CHECK(dirichlet_crosscheck(p, a));
    }
  }
  // Negative control: a wrong exponent must fail the comparison.
  CHECK(!dirichlet_crosscheck_with(13, 1, 4));
}

}  // TEST_SUITE
