#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "legdet/detengine.hpp"
#include "legdet/matrixgen.hpp"
#include "legdet/multiaffine.hpp"
#include "legdet/quadfield.hpp"

namespace legdet {

// Multiaffine polynomial with rational coefficients, same 16-slot mask
// layout as MultiAffinePoly. Right-hand sides are assembled here so the
// half-integer unit coordinates (a, b, a', b') can appear mid-expression;
// a finished expected value must clear all denominators (to_int_poly
// throws otherwise -- a non-integer result is an encoding bug, never
// rounded away).
class QPoly {
 public:
  QPoly() = default;
  QPoly(long v) { c_[0] = v; }              // NOLINT(runtime/explicit)
  QPoly(const mpz_class& v) { c_[0] = v; }  // NOLINT(runtime/explicit)
  // mpq arithmetic assumes canonical operands; two-argument mpq_class
  // construction (e.g. (4, 2)) does not canonicalize on its own.
  QPoly(const mpq_class& v) {  // NOLINT(runtime/explicit)
    c_[0] = v;
    c_[0].canonicalize();
  }

  static QPoly var(char name);                     // 'x','y','z','w'
  static QPoly term(unsigned mask, const mpq_class& coeff);

  const mpq_class& coeff(unsigned mask) const { return c_.at(mask); }
  // Union of the variable masks carrying a nonzero coefficient.
  unsigned var_mask() const;
  bool is_zero() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  // Product requires variable-disjoint factors; anything else would leave
  // the multiaffine space, so it throws std::logic_error.
  friend QPoly operator*(const QPoly& a, const QPoly& b);

  // Exact conversion; throws std::domain_error on a non-integer
  // coefficient or on a variable outside `vars`.
  MultiAffinePoly to_int_poly(unsigned vars) const;

 private:
  std::array<mpq_class, 16> c_{};
};

// Everything a closed form may reference: the prime, the quadratic-field
// invariants, and the current value of the identity's named unknown.
struct RhsContext {
  long long p = 0;
  const QuadInvariants* qi = nullptr;  // set iff the identity needs the unit
  mpq_class unknown = 0;

  long long n() const { return (p - 1) / 2; }
  int c2() const;        // jacobi(2, p)
  long h_minus() const;  // h(-p), p = 3 (mod 4)
  int s0() const;        // (-1)^{(h(-p)-1)/2}
  int s1() const;        // (-1)^{(h(-p)+1)/2}
  QPoly a() const;       // eps^h = a + b sqrt(p); half-integers as mpq
  QPoly b() const;
  QPoly ap() const;      // eps^{(2-(2/p))h} = a' + b' sqrt(p)
  QPoly bp() const;
  QPoly u() const { return QPoly(unknown); }
  static QPoly pw2(long long e);   // 2^e, e >= 0
  QPoly ppow(long long e) const;   // p^e, e >= 0
  QPoly npow(long long e) const;   // (-p)^e, e >= 0
};

using RhsExpr = std::function<QPoly(const RhsContext&)>;

enum class Status { theorem, known_result, conjecture };
enum class Outcome { match, mismatch, inapplicable, guard_failed };

const char* status_name(Status s);
const char* outcome_name(Outcome o);

struct VerificationReport {
  std::string id;
  long long modulus = 0;
  Outcome outcome = Outcome::inapplicable;
  MultiAffinePoly computed;
  MultiAffinePoly expected;
  MultiAffinePoly residual;  // computed - expected; match <=> identically 0
  std::string note;
  std::optional<mpz_class> solved;  // value of the unknown, when one exists
  Engine engine = Engine::auto_pick;
  double millis = 0.0;
};

struct RunConfig {
  Engine engine = Engine::auto_pick;
  int jobs = 1;
  bool timing = true;       // false zeroes millis for byte-stable reports
  std::string falsify_id;   // test hook: perturb this identity's expected value
};

struct Identity;
using CustomCheck = std::function<VerificationReport(
    const Identity&, long long modulus, const RunConfig&)>;

// One displayed result: applicability predicate, matrix family, symbolic
// right-hand side (or a custom predicate check for residue / divisibility /
// squareness claims), plus the published table when an unknown is declared.
struct Identity {
  std::string id;
  Status status = Status::conjecture;
  std::string summary;
  bool over_primes = true;   // false: ranges over all odd n > 1
  bool needs_unit = false;   // rhs reads the quadratic-field invariants
  std::function<bool(long long)> applies;  // congruence + bound side conditions
  std::function<MatrixSpec(long long)> family;
  RhsExpr rhs;
  std::string unknown;             // e.g. "q_p"; empty when fully explicit
  bool unknown_positive = false;   // claim requires a positive integer
  std::map<long long, long long> table;  // published unknown values
  CustomCheck custom;              // exclusive with family/rhs
};

const std::vector<Identity>& identity_registry();
const Identity* find_identity(const std::string& id);
// Glob match on identity ids: '*' any run, '?' one char.
std::vector<const Identity*> match_identities(const std::string& pattern);
bool glob_match(const std::string& pattern, const std::string& text);

// Evaluate a closed form at a modulus into an integer multiaffine
// polynomial over the family's variables.
MultiAffinePoly rhs_eval(const Identity& ident, long long modulus,
                         const mpq_class& unknown_value = 0);

// Verify one identity at one modulus. Inapplicable moduli report
// outcome=inapplicable. Identities with an unknown are solved first
// (single linear coefficient), then checked like any other; the solved
// value lands in report.solved and is compared against the published
// table. A mismatch is recomputed with the alternate determinant engine
// before being reported; engines disagreeing is an internal error
// (std::logic_error), not a counterexample.
VerificationReport verify(const Identity& ident, long long modulus,
                          const RunConfig& cfg = {});

// Verify over every applicable modulus in `moduli`; reports come back in
// modulus order regardless of jobs.
std::vector<VerificationReport> scan(const Identity& ident,
                                     const std::vector<long long>& moduli,
                                     const RunConfig& cfg = {});

// Report for a value/predicate claim (zero, divisibility, squareness,
// residue class): computed mirrors the exact value; on failure expected is
// offset by one so the match <=> zero-residual invariant stays mechanical.
VerificationReport value_claim_report(const mpz_class& value, bool ok,
                                      const std::string& fail_note);

// The two displayed S/T facts: S = 2T/(p-1) or S = 0 according to (d/p),
// and the stated value of jacobi(T mod p, p).
VerificationReport st_relation_check(long long d, long long p);

// det [ jacobi(j^2 + c j k + d k^2, n) ]_{1 < j,k < n-1}, exact, memoized.
mpz_class cdn_det(long long c, long long d, long long n);
// The realized matrix behind cdn_det, for independent rechecks.
IntMat cdn_matrix(long long c, long long d, long long n);

std::string report_json(const VerificationReport& r);
std::string report_csv_header();
std::string report_csv_row(const VerificationReport& r);

}  // namespace legdet
