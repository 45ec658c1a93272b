#pragma once

#include <gmpxx.h>

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "legdet/detengine.hpp"
#include "legdet/matrixgen.hpp"

namespace legdet {

// Polynomial of degree <= 1 in each of x, y, z, w. Coefficients are indexed
// by subset masks (VX|VY|VZ|VW); a coefficient of zero and an absent monomial
// are the same thing, so equality ignores which variables were declared.
class MultiAffinePoly {
 public:
  MultiAffinePoly() = default;
  explicit MultiAffinePoly(unsigned vars) : vars_(vars) {}

  unsigned vars() const { return vars_; }
  const mpz_class& coeff(unsigned mask) const { return c_[mask]; }
  void set_coeff(unsigned mask, mpz_class v);

  mpz_class evaluate(const Assignment& point) const;
  bool is_zero() const;
  bool is_constant() const;

  // Terms ordered by subset size then variable order x < y < z < w,
  // e.g. "-2 - 5*x" and "8 + 8*y + 8*z + 8*y*z".
  std::string text() const;

  bool operator==(const MultiAffinePoly& o) const { return c_ == o.c_; }

  MultiAffinePoly operator-() const;
  MultiAffinePoly& operator*=(const mpz_class& s);
  friend MultiAffinePoly operator+(const MultiAffinePoly& a,
                                   const MultiAffinePoly& b);
  friend MultiAffinePoly operator-(const MultiAffinePoly& a,
                                   const MultiAffinePoly& b);

  static MultiAffinePoly from_terms(
      unsigned vars, const std::vector<std::pair<unsigned, mpz_class>>& terms);

 private:
  unsigned vars_ = 0;
  std::array<mpz_class, 16> c_{};
};

// Moebius inversion over the Boolean lattice: coeff(S) = sum over T subset S
// of (-1)^{|S|-|T|} corner(T), where corner(T) evaluates with the variables
// in T set to 1 and the rest of vars set to 0.
MultiAffinePoly interpolate(unsigned vars,
                            const std::function<mpz_class(unsigned)>& corner);

// Exact determinant of the family as a polynomial: 2^k corner determinants
// plus inversion.
MultiAffinePoly det_poly(const MatrixSpec& spec, Engine e = Engine::auto_pick);

// Checks f(v=2) - 2 f(v=1) + f(v=0) = 0 per variable with the others at
// seeded random integers. A false return means interpolation is unsound for
// this family.
bool multiaffinity_guard_fn(unsigned vars,
                            const std::function<mpz_class(const Assignment&)>& f,
                            unsigned long long seed = 0x5eedULL);

bool multiaffinity_guard(const MatrixSpec& spec);

}  // namespace legdet
