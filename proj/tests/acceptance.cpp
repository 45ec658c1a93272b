// Acceptance gate: one criterion per invocation, one PASS/FAIL line on
// stdout, exit 0/1. Criteria are independent so the harness can time and
// parallelize them separately.

#include <cstddef>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "legdet/cache.hpp"
#include "legdet/detengine.hpp"
#include "legdet/matrixgen.hpp"
#include "legdet/multiaffine.hpp"
#include "legdet/quadfield.hpp"
#include "legdet/registry.hpp"

using namespace legdet;

namespace {

// One published table entry is wrong: the x_p table prints 6 at p = 41, but
// the exact yz coefficient there is 4 * 41^9 * 8 (both engines agree, and an
// independent re-derivation confirms 8; every other table entry checks out).
// The registry keeps the published 6 so verify/discover flag the row; the
// gate asserts exactly that shape and never counts it as a counterexample.
struct Erratum {
  const char* id;
  long long modulus;
  long solved;
  long long published;
};
constexpr Erratum kErrata[] = {{"conj3.7.ii", 41, 8, 6}};

const Erratum* find_erratum(const std::string& id, long long m) {
  for (const Erratum& e : kErrata)
    if (id == e.id && m == e.modulus) return &e;
  return nullptr;
}

struct Tally {
  long reports = 0;
  long match = 0;
  long errata = 0;
  long bad = 0;
  std::string first_bad;

  void note_bad(const VerificationReport& r, const char* extra) {
    ++bad;
    if (!first_bad.empty()) return;
    std::ostringstream os;
    os << r.id << " at " << r.modulus << ": " << outcome_name(r.outcome);
    if (extra) os << " [" << extra << "]";
    if (!r.note.empty()) os << " (" << r.note << ")";
    first_bad = os.str();
  }

  void absorb(const VerificationReport& r) {
    ++reports;
    if (const Erratum* e = find_erratum(r.id, r.modulus)) {
      if (r.outcome == Outcome::mismatch && r.solved.has_value() &&
          *r.solved == e->solved)
        ++errata;
      else
        note_bad(r, "documented erratum row took an unexpected shape");
      return;
    }
    if (r.outcome == Outcome::match)
      ++match;
    else
      note_bad(r, nullptr);
  }
};

std::vector<long long> applicable_moduli(const Identity& ident, long long bound) {
  std::vector<long long> out;
  if (ident.over_primes) {
    for (long p : primes_in(3, static_cast<long>(bound))) out.push_back(p);
  } else {
    for (long long n = 3; n <= bound; n += 2) out.push_back(n);
  }
  return out;
}

void scan_into(Tally* t, const std::vector<const Identity*>& ids,
               long long bound, const RunConfig& cfg) {
  for (const Identity* ident : ids)
    for (const auto& r : scan(*ident, applicable_moduli(*ident, bound), cfg))
      t->absorb(r);
}

int report(bool ok, const std::string& pass_text, const std::string& fail_text) {
  if (ok)
    std::cout << "PASS: " << pass_text << "\n";
  else
    std::cout << "FAIL: " << fail_text << "\n";
  return ok ? 0 : 1;
}

// 1. Proven closed forms, every applicable prime p <= 199, zero tolerance.
int criterion1() {
  const char* ids[] = {"thm1.1.i",  "thm1.1.ii", "thm1.3.i", "thm1.3.ii",
                       "thm1.4.i",  "thm1.4.ii", "lem2.2.i", "lem2.2.ii",
                       "eq.C",      "eq.Cstar",  "eq.2.10",  "eq.evil-x"};
  Tally t;
  RunConfig cfg;
  std::vector<const Identity*> list;
  for (const char* id : ids) list.push_back(find_identity(id));
  scan_into(&t, list, 199, cfg);
  std::ostringstream pass;
  pass << "theorem suite: " << t.match << " verifications across "
       << list.size() << " identities, primes <= 199, zero mismatches";
  return report(t.bad == 0 && t.reports > 0, pass.str(),
                "theorem suite: " + t.first_bad);
}

// 2. Meta-identity suite, 4 randomized instances per (identity, prime).
int criterion2() {
  Tally t;
  RunConfig cfg;
  scan_into(&t,
            {find_identity("thm1.2.cx"), find_identity("thm1.2.01"),
             find_identity("thm1.2.yz")},
            61, cfg);
  long instances = t.match * 4;
  std::ostringstream pass;
  pass << "meta-identity suite: " << instances
       << " randomized instances (m <= 3, primes <= 61), all exact";
  if (t.bad != 0) return report(false, "", "meta-identity suite: " + t.first_bad);
  return report(instances >= 200, pass.str(),
                "meta-identity suite: only " + std::to_string(instances) +
                    " instances, need 200");
}

// 3. Published unknown-value tables, reproduced exactly by the solver.
int criterion3() {
  struct Row {
    const char* id;
    long long bound;
  };
  const Row rows[] = {{"conj3.7.ii", 61},
                      {"conj3.8.ii", 127},
                      {"conj3.9", 59},
                      {"conj4.6", 53}};
  long checked = 0;
  size_t errata = 0;
  for (const auto& row : rows) {
    const Identity* ident = find_identity(row.id);
    if (ident->table.empty())
      return report(false, "", std::string("remark tables: ") + row.id +
                                   " has no published table");
    for (const auto& [p, want] : ident->table) {
      if (p > row.bound)
        return report(false, "", std::string("remark tables: ") + row.id +
                                     " table entry past its bound");
      VerificationReport r = verify(*ident, p);
      std::ostringstream where;
      where << "remark tables: " << row.id << " at " << p;
      if (!r.solved.has_value())
        return report(false, "", where.str() + ": no value solved");
      if (const Erratum* e = find_erratum(row.id, p)) {
        // The known-bad row must keep flagging: solver finds the true value,
        // the comparison against the published number stays a mismatch.
        if (r.outcome != Outcome::mismatch || *r.solved != e->solved ||
            want != e->published)
          return report(false, "",
                        where.str() + ": documented erratum row took an "
                                      "unexpected shape (solved " +
                            r.solved->get_str() + ", outcome " +
                            outcome_name(r.outcome) + ")");
        ++errata;
        continue;
      }
      if (r.outcome != Outcome::match)
        return report(false, "", where.str() + ": " + outcome_name(r.outcome) +
                                     (r.note.empty() ? "" : " (" + r.note + ")"));
      if (*r.solved != static_cast<long>(want)) {
        std::ostringstream os;
        os << where.str() << ": solved " << r.solved->get_str()
           << ", published " << want;
        return report(false, "", os.str());
      }
      ++checked;
    }
  }
  std::ostringstream pass;
  pass << "remark tables: " << checked
       << " published values re-derived exactly; " << errata
       << " documented erratum (x_41: exact value 8, published 6, still "
          "flagged as a mismatch by verify)";
  return report(errata == std::size(kErrata), pass.str(), "");
}

// 4. Full conjecture scan over sections 3 and 4, modular engine, 4 jobs.
int criterion4() {
  Tally t;
  RunConfig cfg;
  cfg.engine = Engine::modular;
  cfg.jobs = 4;
  std::vector<const Identity*> ids = match_identities("conj3.*");
  for (const Identity* ident : match_identities("conj4.*")) ids.push_back(ident);
  scan_into(&t, ids, 199, cfg);
  std::ostringstream pass;
  pass << "conjecture scan: " << ids.size() << " conjectures, " << t.match
       << " prime verifications <= 199, zero counterexample candidates ("
       << t.errata << " documented published-table erratum excluded)";
  return report(t.bad == 0 && t.reports > 0, pass.str(),
                "conjecture scan: " + t.first_bad);
}

// 5. Character-sum equivalence for odd n < 2000 plus the quadratic-form
//    determinant conjectures for odd n <= 499.
int criterion5() {
  Tally sums;
  RunConfig cfg;
  scan_into(&sums, {find_identity("thm5.1")}, 1999, cfg);
  if (sums.bad != 0)
    return report(false, "", "section 5 scan: " + sums.first_bad);
  if (sums.reports != 499)
    return report(false, "",
                  "section 5 scan: expected 499 applicable n, saw " +
                      std::to_string(sums.reports));
  Tally forms;
  scan_into(&forms, match_identities("conj5.*"), 499, cfg);
  if (forms.bad != 0)
    return report(false, "", "section 5 scan: " + forms.first_bad);
  std::ostringstream pass;
  pass << "section 5 scan: 499 character-sum equivalences (odd n < 2000) and "
       << forms.match << " quadratic-form determinant checks (odd n <= 499)";
  return report(forms.reports > 0, pass.str(), "section 5 scan: no reports");
}

// 6. Engine and interpolation oracles, all exact.
int criterion6() {
  std::mt19937_64 rng(0xACCE97ULL);
  std::uniform_int_distribution<long long> entry(-99, 99);

  // Serial and multi-modular engines on 500 random matrices, plus a
  // disjoint-pool recheck.
  for (int t = 0; t < 500; ++t) {
    IntMat m(1 + static_cast<long>(rng() % 20));
    for (auto& v : m.a) v = entry(rng);
    mpz_class b = det_bareiss(m), md = det_modular(m);
    if (b != md || md != det_modular_from(m, 160))
      return report(false, "",
                    "oracles: engines disagree on a random matrix, case " +
                        std::to_string(t));
  }

  // Interpolation round trip over every variable subset.
  std::uniform_int_distribution<long> cd(-50, 50);
  for (unsigned vars = 0; vars < 16; ++vars) {
    for (int t = 0; t < 20; ++t) {
      MultiAffinePoly p(vars);
      for (unsigned mask = 0; mask < 16; ++mask)
        if ((mask & ~vars) == 0) p.set_coeff(mask, mpz_class(cd(rng)));
      MultiAffinePoly q = interpolate(vars, [&](unsigned corner) {
        Assignment at;
        for (unsigned bit = 0; bit < 4; ++bit)
          if (vars & (1u << bit))
            at[var_name(static_cast<int>(bit))] = (corner >> bit) & 1;
        return p.evaluate(at);
      });
      if (!(p == q))
        return report(false, "", "oracles: interpolation round trip failed");
    }
  }

  // Determinant difference lemma: det[x + a] - det[a] over 0..m equals
  // x * det[a_jk - a_j0 - a_0k + a_00] over 1..m. Affine in x, so x = 1
  // carries the whole identity.
  for (int t = 0; t < 120; ++t) {
    long m = static_cast<long>(rng() % 9);
    IntMat a(m + 1);
    for (auto& v : a.a) v = entry(rng) % 50;
    IntMat shifted = a;
    for (auto& v : shifted.a) v += 1;
    IntMat inner(m);
    for (long j = 1; j <= m; ++j)
      for (long k = 1; k <= m; ++k)
        inner.at(j - 1, k - 1) = a.at(j, k) - a.at(j, 0) - a.at(0, k) + a.at(0, 0);
    if (det_bareiss(shifted) - det_bareiss(a) != det_bareiss(inner))
      return report(false, "",
                    "oracles: determinant difference lemma failed, case " +
                        std::to_string(t));
  }

  // Structural multiaffinity guard on every registered family shape.
  long guarded = 0;
  for (const Identity& ident : identity_registry()) {
    if (!ident.family) continue;
    long long m0 = 0;
    for (long long m : applicable_moduli(ident, 499))
      if (!ident.applies || ident.applies(m)) {
        m0 = m;
        break;
      }
    if (m0 == 0)
      return report(false, "",
                    "oracles: no applicable modulus <= 499 for " + ident.id);
    if (!multiaffinity_guard(ident.family(m0)))
      return report(false, "", "oracles: multiaffinity guard rejected " +
                                   ident.id + " at " + std::to_string(m0));
    ++guarded;
  }

  // Class numbers by two independent methods.
  for (long p : primes_in(3, 499)) {
    if (class_number_real_analytic(p) != class_number_real_forms(p))
      return report(false, "",
                    "oracles: real class number methods disagree at " +
                        std::to_string(p));
    if (p % 4 == 3 && p > 3 &&
        class_number_imag(p) != class_number_imag_forms(p))
      return report(false, "",
                    "oracles: imaginary class number methods disagree at " +
                        std::to_string(p));
  }

  std::ostringstream pass;
  pass << "oracles: 500 engine equivalences, 320 interpolation round trips, "
          "120 difference-lemma cases, "
       << guarded << " family guards, class numbers dual-checked to 499";
  return report(true, pass.str(), "");
}

// 7. Floating-point Dirichlet product against the exact unit power.
int criterion7() {
  long checked = 0;
  for (long p : primes_in(5, 97)) {
    if (p % 4 != 1) continue;
    for (long a = 1; a <= 3; ++a) {
      if (!dirichlet_crosscheck(p, a))
        return report(false, "",
                      "dirichlet cross-check failed at p = " +
                          std::to_string(p) + ", a = " + std::to_string(a));
      ++checked;
    }
  }
  std::ostringstream pass;
  pass << "dirichlet cross-check: " << checked
       << " unit-power products within 1e-6, p = 1 (mod 4), p <= 97";
  return report(checked >= 33, pass.str(), "dirichlet cross-check: too few cases");
}

// 8. Pinned single values.
int criterion8() {
  IntMat c7 = build_numeric(chapman_spec(7, ChapmanVariant::C), {{'x', 1}});
  if (det_exact(c7) != -8)
    return report(false, "", "pinned values: det C_7(1) is not -8");

  std::string evil = det_poly(find_identity("eq.evil-x")->family(5)).text();
  if (evil != "-2 - 5*x")
    return report(false, "",
                  "pinned values: order-3 determinant came out as " + evil);

  if (cdn_det(3, 2, 7) != 3)
    return report(false, "", "pinned values: {3,2}_7 is not 3");

  if (invariants(23).h_minus != 3)
    return report(false, "", "pinned values: h(-23) is not 3");

  long corollary = 0;
  for (long p : primes_in(3, 199)) {
    if (p % 4 != 3) continue;
    VerificationReport r = verify(*find_identity("cor1.1.minus"), p);
    if (r.outcome != Outcome::match || !r.computed.is_constant() ||
        r.computed.coeff(0) != 4)
      return report(false, "",
                    "pinned values: corollary determinant is not 4 at p = " +
                        std::to_string(p));
    ++corollary;
  }

  std::ostringstream pass;
  pass << "pinned values: C_7(1), the order-3 determinant, {3,2}_7, h(-23), "
          "and the corollary constant 4 at "
       << corollary << " primes";
  return report(true, pass.str(), "");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <criterion 1..8>\n";
    return 2;
  }
  char* end = nullptr;
  long which = std::strtol(argv[1], &end, 10);
  if (*end != '\0' || which < 1 || which > 8) {
    std::cerr << "usage: acceptance <criterion 1..8>\n";
    return 2;
  }
  switch (which) {
    case 1: return criterion1();
    case 2: return criterion2();
    case 3: return criterion3();
    case 4: return criterion4();
    case 5: return criterion5();
    case 6: return criterion6();
    case 7: return criterion7();
    case 8: return criterion8();
  }
  return 2;
}
