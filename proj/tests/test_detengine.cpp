#include <random>

#include "doctest.h"
#include "legdet/detengine.hpp"
#include "legdet/matrixgen.hpp"

using namespace legdet;

namespace {

IntMat random_mat(std::mt19937_64& rng, long n, long long lo, long long hi) {
  std::uniform_int_distribution<long long> ed(lo, hi);
  IntMat m(n);
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) m.at(r, c) = ed(rng);
  return m;
}

IntMat matmul(const IntMat& a, const IntMat& b) {
  IntMat c(a.n);
  for (long i = 0; i < a.n; ++i)
    for (long k = 0; k < a.n; ++k) {
      long long aik = a.at(i, k);
      if (aik == 0) continue;
      for (long j = 0; j < a.n; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntMat transpose(const IntMat& a) {
  IntMat t(a.n);
  for (long r = 0; r < a.n; ++r)
    for (long c = 0; c < a.n; ++c) t.at(c, r) = a.at(r, c);
  return t;
}

}  // namespace

TEST_SUITE("detengine") {

TEST_CASE("degenerate and triangular determinants") {
  IntMat empty(0);
  CHECK(det_bareiss(empty) == 1);
  CHECK(det_modular(empty) == 1);

  IntMat one(1);
  one.at(0, 0) = -7;
  CHECK(det_bareiss(one) == -7);
  CHECK(det_modular(one) == -7);

  IntMat tri(4);
  long long diag[] = {2, -3, 5, 7};
  for (long r = 0; r < 4; ++r) {
    tri.at(r, r) = diag[r];
    for (long c = r + 1; c < 4; ++c) tri.at(r, c) = 100 * r + c;
  }
  CHECK(det_bareiss(tri) == 2 * -3 * 5 * 7);
  CHECK(det_modular(tri) == 2 * -3 * 5 * 7);

  IntMat dup(3);
  for (long c = 0; c < 3; ++c) {
    dup.at(0, c) = c + 1;
    dup.at(1, c) = c + 1;
    dup.at(2, c) = 7 * c - 2;
  }
  CHECK(det_bareiss(dup) == 0);
  CHECK(det_modular(dup) == 0);
}

TEST_CASE("bareiss equals modular on random matrices") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 150; ++t) {
    long n = 1 + static_cast<long>(rng() % 20);
    IntMat m = random_mat(rng, n, -99, 99);
    mpz_class a = det_bareiss(m);
    CHECK(a == det_modular(m));
    CHECK(a == det_modular_from(m, 160));
  }
}

TEST_CASE("product rule and transpose invariance") {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 40; ++t) {
    IntMat a = random_mat(rng, 6, -5, 5);
    IntMat b = random_mat(rng, 6, -5, 5);
    CHECK(det_bareiss(matmul(a, b)) == det_bareiss(a) * det_bareiss(b));
    CHECK(det_bareiss(transpose(a)) == det_bareiss(a));
  }
}

TEST_CASE("det_mod agrees with the exact determinant") {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 60; ++t) {
    long n = 1 + static_cast<long>(rng() % 10);
    IntMat m = random_mat(rng, n, -50, 50);
    mpz_class exact = det_bareiss(m);
    for (long long mod : {2LL, 9LL, 97LL, 1000003LL, 2147483647LL}) {
      mpz_class r = exact % static_cast<long>(mod);
      if (r < 0) r += static_cast<long>(mod);
      CAPTURE(n);
      CAPTURE(mod);
      CHECK(det_mod(m, mod) == r.get_si());
      if (is_prime(static_cast<unsigned long long>(mod)) && mod < (1LL << 31))
        CHECK(det_mod_prime(m, mod) == r.get_si());
    }
  }
}

TEST_CASE("structure detectors and fast paths") {
  std::mt19937_64 rng(109);

  IntMat skew(7);
  std::uniform_int_distribution<long long> ed(-20, 20);
  for (long r = 0; r < 7; ++r)
    for (long c = r + 1; c < 7; ++c) {
      long long v = ed(rng);
      skew.at(r, c) = v;
      skew.at(c, r) = -v;
    }
  CHECK(is_skew_odd(skew));
  CHECK(det_exact(skew) == 0);
  CHECK(det_bareiss(skew) == 0);

  // Entry (r, c) mirrored to (n-1-r, n-1-c) makes the matrix centrosymmetric.
  IntMat cs(8);
  for (long r = 0; r < 8; ++r)
    for (long c = 0; c < 8; ++c) {
      if (r * 8 + c < (7 - r) * 8 + (7 - c)) {
        cs.at(r, c) = ed(rng);
        cs.at(7 - r, 7 - c) = cs.at(r, c);
      }
    }
  CHECK(is_centrosymmetric(cs));
  CHECK(det_exact(cs) == det_bareiss(cs));
  CHECK(det_exact(cs, Engine::modular) == det_bareiss(cs));
}

TEST_CASE("auto dispatch is consistent across the size threshold") {
  std::mt19937_64 rng(113);
  for (long n : {63L, 64L, 65L, 66L}) {
    IntMat m = random_mat(rng, n, -3, 3);
    mpz_class ref = det_bareiss(m);
    CHECK(det_exact(m) == ref);
    CHECK(det_modular(m) == ref);
  }
}

TEST_CASE("modular prime pool is sound") {
  const std::vector<long long>& pool = modular_prime_pool();
  REQUIRE(pool.size() >= 320);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    CHECK(pool[i] < (1LL << 31));
    CHECK(is_prime(static_cast<unsigned long long>(pool[i])));
    if (i) CHECK(pool[i] < pool[i - 1]);
  }
}

TEST_CASE("symbol matrix determinants agree across engines") {
  for (long long p : {13LL, 29LL, 53LL}) {
    MatrixSpec spec{p, 0, (p - 1) / 2, 0, (p - 1) / 2,
                    {{1, Atom{0, 0, 0, 1, 1, 0}}}, 0};
    IntMat m = build_numeric(spec, {});
    CHECK(det_bareiss(m) == det_modular(m));
  }
}

}  // TEST_SUITE
