#include <random>

#include "doctest.h"
#include "legdet/multiaffine.hpp"
#include "legdet/registry.hpp"

using namespace legdet;

namespace {

MultiAffinePoly random_poly(std::mt19937_64& rng, unsigned vars) {
  std::uniform_int_distribution<long> cd(-50, 50);
  MultiAffinePoly p(vars);
  for (unsigned mask = 0; mask < 16; ++mask)
    if ((mask & ~vars) == 0) p.set_coeff(mask, mpz_class(cd(rng)));
  return p;
}

Assignment random_point(std::mt19937_64& rng, unsigned vars) {
  std::uniform_int_distribution<long long> vd(-9, 9);
  Assignment at;
  for (int i = 0; i < 4; ++i)
    if (vars & (1u << i)) at[var_name(i)] = vd(rng);
  return at;
}

}  // namespace

TEST_SUITE("multiaffine") {

TEST_CASE("coefficients, evaluation, and rendering") {
  MultiAffinePoly p = MultiAffinePoly::from_terms(
      VX | VY, {{0, -2}, {VX, -5}});
  CHECK(p.coeff(0) == -2);
  CHECK(p.coeff(VX) == -5);
  CHECK(p.coeff(VY) == 0);
  CHECK(p.evaluate({{'x', 3}, {'y', 100}}) == -17);
  CHECK(p.text() == "-2 - 5*x");
  CHECK(!p.is_zero());
  CHECK(!p.is_constant());

  MultiAffinePoly q = MultiAffinePoly::from_terms(
      VX | VY | VZ, {{0, 8}, {VY, 8}, {VZ, 8}, {VY | VZ, 8}});
  CHECK(q.text() == "8 + 8*y + 8*z + 8*y*z");

  MultiAffinePoly r = MultiAffinePoly::from_terms(
      VX | VY | VZ | VW, {{VZ, 2}, {VX | VY, 1}, {VX | VY | VZ | VW, -1}});
  CHECK(r.text() == "2*z + x*y - x*y*z*w");

  CHECK(MultiAffinePoly(VX).text() == "0");
  CHECK(MultiAffinePoly(VX).is_zero());
  CHECK(MultiAffinePoly::from_terms(0, {{0, 1}}).text() == "1");
  CHECK(MultiAffinePoly::from_terms(0, {{0, 1}}).is_constant());
}

TEST_CASE("equality ignores which variables were declared") {
  MultiAffinePoly a(VX | VY);
  MultiAffinePoly b(VW);
  CHECK(a == b);  // both identically zero
  a.set_coeff(0, 3);
  b.set_coeff(0, 3);
  CHECK(a == b);
  a.set_coeff(VX, 1);
  CHECK(!(a == b));
}

TEST_CASE("from_terms rejects masks outside the declared set") {
  CHECK_THROWS_AS(MultiAffinePoly::from_terms(VX, {{VY, 1}}),
                  std::invalid_argument);
}

TEST_CASE("arithmetic operators act coefficientwise") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 30; ++t) {
    MultiAffinePoly a = random_poly(rng, VX | VZ);
    MultiAffinePoly b = random_poly(rng, VY | VZ | VW);
    MultiAffinePoly s = a + b;
    MultiAffinePoly d = a - b;
    for (unsigned mask = 0; mask < 16; ++mask) {
      CHECK(s.coeff(mask) == a.coeff(mask) + b.coeff(mask));
      CHECK(d.coeff(mask) == a.coeff(mask) - b.coeff(mask));
      CHECK((-a).coeff(mask) == -a.coeff(mask));
    }
    CHECK(s.vars() == (a.vars() | b.vars()));
    MultiAffinePoly scaled = a;
    scaled *= mpz_class(-7);
    for (unsigned mask = 0; mask < 16; ++mask)
      CHECK(scaled.coeff(mask) == -7 * a.coeff(mask));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("interpolation round trip over every variable subset") {
  std::mt19937_64 rng(43);
  for (unsigned vars = 0; vars < 16; ++vars) {
    for (int t = 0; t < 8; ++t) {
      MultiAffinePoly want = random_poly(rng, vars);
      MultiAffinePoly got = interpolate(vars, [&](unsigned corner) {
        Assignment at;
        for (int i = 0; i < 4; ++i)
          if (vars & (1u << i))
            at[var_name(i)] = (corner & (1u << i)) ? 1 : 0;
        return want.evaluate(at);
      });
      CHECK(got == want);
    }
  }
}

TEST_CASE("det_poly evaluates to the numeric determinant") {
  std::mt19937_64 rng(47);
  for (unsigned vars : {0u, VX, VX | VY, VX | VY | VZ, VX | VY | VZ | VW,
                        VY | VW, VZ}) {
    MatrixSpec spec{13, 0, 5, 0, 5,
                    {{1, Atom{0, 0, 0, 1, 1, 0}}, {1, Atom{0, 0, 0, 1, -1, 0}}},
                    vars};
    MultiAffinePoly d = det_poly(spec);
    for (int t = 0; t < 6; ++t) {
      Assignment at = random_point(rng, vars);
      CHECK(d.evaluate(at) == det_bareiss(build_numeric(spec, at)));
    }
  }
}

TEST_CASE("det_poly is engine independent") {
  for (long long p : {11LL, 17LL}) {
    MatrixSpec spec{p, 1, (p - 1) / 2, 1, (p - 1) / 2,
                    {{1, Atom{0, 0, 0, 1, 1, -1}}}, VX | VY | VZ};
    CHECK(det_poly(spec, Engine::bareiss) == det_poly(spec, Engine::modular));
  }
}

TEST_CASE("multiaffinity guard accepts true families and rejects a square") {
  CHECK(multiaffinity_guard(chapman_spec(13, ChapmanVariant::C)));
  MatrixSpec four{17, 0, 8, 0, 8, {{1, Atom{0, 0, 0, 1, 1, 0}}},
                  VX | VY | VZ | VW};
  CHECK(multiaffinity_guard(four));

  // x^2 is not affine in x, so the second-difference test must fail.
  bool quadratic_passes = multiaffinity_guard_fn(VX, [](const Assignment& at) {
    long x = static_cast<long>(at.at('x'));
    return mpz_class(x * x);
  });
  CHECK(!quadratic_passes);
}

TEST_CASE("registry family shapes stay multiaffine") {
  for (const char* id : {"thm1.3.ii", "conj3.8.i.b", "conj4.6", "conj4.9"}) {
    const Identity* ident = find_identity(id);
    REQUIRE(ident);
    for (long long p : {7LL, 13LL, 29LL}) {
      if (!ident->applies(p) || !ident->family) continue;
      CAPTURE(id);
      CAPTURE(p);
      CHECK(multiaffinity_guard(ident->family(p)));
    }
  }
}

}  // TEST_SUITE
