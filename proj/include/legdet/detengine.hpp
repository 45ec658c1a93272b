#pragma once

#include "legdet/arith.hpp"

namespace legdet {

// auto_pick: modular when the (possibly split) block dimension exceeds 64,
// else bareiss.
enum class Engine { bareiss, modular, auto_pick };

const char* engine_name(Engine e);

// Fraction-free elimination, serial, exact. Reference engine.
mpz_class det_bareiss(const IntMat& m);

// Multi-modular CRT engine: det mod word-size primes until the product of
// moduli exceeds twice the Hadamard bound, then symmetric-range lift.
// Per-prime work is distributed across OpenMP threads; assembly order is
// fixed, so the result is independent of thread count.
mpz_class det_modular(const IntMat& m);

// Same, but drawing primes from pool index `offset` onward. Used to recheck
// a result with a disjoint modulus set.
mpz_class det_modular_from(const IntMat& m, size_t offset);

// Dispatcher with structure fast paths applied first (odd skew-symmetric
// order forces 0; a centrosymmetric even-order matrix splits into two
// half-size blocks whose determinants multiply). Residual blocks go to the
// chosen engine.
mpz_class det_exact(const IntMat& m, Engine e = Engine::auto_pick);

// det mod m in [0, m): single elimination over Z/m for prime m < 2^31,
// exact determinant reduced otherwise. m >= 2.
long long det_mod(const IntMat& m, long long mod);

// det mod q for prime q < 2^31 via in-place elimination with Barrett
// reduction. Exposed for the engine benchmark.
long long det_mod_prime(const IntMat& m, long long q);

// Primes descending from 2^31, fixed pool for the modular engine.
const std::vector<long long>& modular_prime_pool();

bool is_skew_odd(const IntMat& m);
bool is_centrosymmetric(const IntMat& m);

}  // namespace legdet
