#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "legdet/arith.hpp"
#include "legdet/cache.hpp"
#include "legdet/detengine.hpp"
#include "legdet/matrixgen.hpp"
#include "legdet/multiaffine.hpp"
#include "legdet/quadfield.hpp"
#include "legdet/registry.hpp"

namespace {

using namespace legdet;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

enum class Format { table, json, csv };

Format pick_format(const std::string& requested) {
  if (requested == "table") return Format::table;
  if (requested == "json") return Format::json;
  if (requested == "csv") return Format::csv;
  return isatty(STDOUT_FILENO) ? Format::table : Format::json;
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kUsage;
}

bool parse_range(const std::string& s, long long* lo, long long* hi) {
  std::size_t dots = s.find("..");
  if (dots == std::string::npos) return false;
  try {
    std::size_t used = 0;
    *lo = std::stoll(s.substr(0, dots), &used);
    if (used != dots) return false;
    std::string rest = s.substr(dots + 2);
    *hi = std::stoll(rest, &used);
    if (used != rest.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

// --primes A..B -> primes in [A, B]; --odd A..B -> odd n >= 3 in [A, B].
int build_moduli(const std::string& primes_range, const std::string& odd_range,
                 std::vector<long long>* out) {
  if (primes_range.empty() == odd_range.empty())
    return usage_error("exactly one of --primes A..B or --odd A..B is required");
  long long lo = 0, hi = 0;
  const std::string& text = primes_range.empty() ? odd_range : primes_range;
  if (!parse_range(text, &lo, &hi))
    return usage_error("cannot parse range '" + text + "' (want A..B)");
  if (!primes_range.empty()) {
    for (long p : primes_in(std::max(lo, 3LL), hi)) out->push_back(p);
  } else {
    for (long long n = std::max(lo, 3LL) | 1; n <= hi; n += 2) out->push_back(n);
  }
  if (out->empty()) return usage_error("range '" + text + "' contains no moduli");
  return kOk;
}

Engine parse_engine(const std::string& s) {
  if (s == "bareiss") return Engine::bareiss;
  if (s == "modular") return Engine::modular;
  return Engine::auto_pick;
}

Engine resolved_engine(Engine e, long long dim) {
  if (e != Engine::auto_pick) return e;
  return dim > 64 ? Engine::modular : Engine::bareiss;
}

// ---- output helpers ----------------------------------------------------------

std::string millis_text(const VerificationReport& r) {
  std::ostringstream os;
  os << static_cast<long long>(r.millis + 0.5) << "ms";
  return os.str();
}

void print_report_table_row(const VerificationReport& r, std::size_t id_width) {
  std::ostringstream os;
  os.setf(std::ios::left);
  os.width(static_cast<std::streamsize>(id_width + 2));
  os << r.id;
  os.width(8);
  os << r.modulus;
  os.width(14);
  os << outcome_name(r.outcome);
  os.width(9);
  os << engine_name(r.engine);
  os << millis_text(r);
  if (r.solved) os << "  [" << *r.solved << "]";
  std::cout << os.str() << "\n";
  if (r.outcome != Outcome::match && r.outcome != Outcome::inapplicable) {
    std::cout << "    computed: " << r.computed.text() << "\n"
              << "    expected: " << r.expected.text() << "\n"
              << "    residual: " << r.residual.text() << "\n";
    if (!r.note.empty()) std::cout << "    note:     " << r.note << "\n";
  }
}

struct RunTotals {
  long match = 0, mismatch = 0, guard = 0, inapplicable = 0;
  void add(const VerificationReport& r) {
    switch (r.outcome) {
      case Outcome::match: ++match; break;
      case Outcome::mismatch: ++mismatch; break;
      case Outcome::guard_failed: ++guard; break;
      case Outcome::inapplicable: ++inapplicable; break;
    }
  }
  long failures() const { return mismatch + guard; }
  std::string text() const {
    std::ostringstream os;
    os << (match + mismatch + guard) << " checks: " << match << " match, "
       << mismatch << " mismatch, " << guard << " guard failures";
    return os.str();
  }
};

// ---- subcommands --------------------------------------------------------------

int cmd_invariants(const std::string& primes_range, const std::string& format,
                   const std::string& cache_path) {
  std::vector<long long> ps;
  if (int rc = build_moduli(primes_range, "", &ps); rc != kOk) return rc;
  std::set<long> cached;
  if (!cache_path.empty())
    for (const auto& r : cache_load(cache_path)) {
      cached.insert(r.p);
      seed_invariants(r);
    }
  Format fmt = pick_format(format);
  if (fmt == Format::table)
    std::cout << "p      norm  h(p)  h(-p)  2*eps_a  2*eps_b  2a  2b  2a'  2b'\n";
  if (fmt == Format::csv)
    std::cout << "p,unit_norm,h_plus,h_minus,eps_two_a,eps_two_b,two_a,two_b,"
                 "two_a_prime,two_b_prime\n";
  for (long long p : ps) {
    const QuadInvariants& v = invariants(static_cast<long>(p));
    switch (fmt) {
      case Format::table: {
        std::ostringstream os;
        os.setf(std::ios::left);
        os.width(7);
        os << v.p;
        os.width(6);
        os << v.unit_norm;
        os.width(6);
        os << v.h_plus;
        os.width(7);
        os << v.h_minus;
        os.width(9);
        os << v.eps.two_a.get_str();
        os.width(9);
        os << v.eps.two_b.get_str();
        os.width(4);
        os << v.ab.two_a.get_str();
        os.width(4);
        os << v.ab.two_b.get_str();
        os.width(5);
        os << v.ab_prime.two_a.get_str();
        os << v.ab_prime.two_b.get_str();
        std::cout << os.str() << "\n";
        break;
      }
      case Format::json:
        std::cout << cache_record_line(v) << "\n";
        break;
      case Format::csv:
        std::cout << v.p << "," << v.unit_norm << "," << v.h_plus << ","
                  << v.h_minus << "," << v.eps.two_a << "," << v.eps.two_b
                  << "," << v.ab.two_a << "," << v.ab.two_b << ","
                  << v.ab_prime.two_a << "," << v.ab_prime.two_b << "\n";
        break;
    }
  }
  if (!cache_path.empty()) {
    std::ofstream out(cache_path, std::ios::app);
    if (!out) return usage_error("cannot write cache file " + cache_path);
    for (long long p : ps)
      if (!cached.count(static_cast<long>(p)))
        out << cache_record_line(invariants(static_cast<long>(p))) << "\n";
  }
  return kOk;
}

int cmd_det(const std::string& spec_text, const std::string& engine_text,
            const std::string& format, long long mod) {
  MatrixSpec spec;
  try {
    spec = parse_spec(spec_text);
  } catch (const std::exception& ex) {
    return usage_error(ex.what());
  }
  Engine requested = parse_engine(engine_text);
  Engine eng = resolved_engine(requested, spec.dim());
  Format fmt = pick_format(format);
  std::string det_text;
  if (spec.vars == 0) {
    IntMat m = build_numeric(spec, {});
    det_text = det_exact(m, requested).get_str();
    if (mod != 0) {
      if (mod < 2) return usage_error("--mod wants a modulus >= 2");
      long long r = det_mod(m, mod);
      if (fmt == Format::table) {
        std::cout << "det = " << det_text << "\n";
        std::cout << "det mod " << mod << " = " << r << "\n";
      } else {
        nlohmann::ordered_json j;
        j["det"] = det_text;
        j["mod"] = mod;
        j["det_mod"] = r;
        j["engine"] = engine_name(eng);
        std::cout << j.dump() << "\n";
      }
      return kOk;
    }
  } else {
    if (mod != 0) return usage_error("--mod applies only to numeric matrices (vars empty)");
    det_text = det_poly(spec, requested).text();
  }
  if (fmt == Format::table) {
    std::cout << "det = " << det_text << "\n";
  } else {
    nlohmann::ordered_json j;
    j["det"] = det_text;
    j["engine"] = engine_name(eng);
    std::cout << j.dump() << "\n";
  }
  return kOk;
}

int cmd_run(const std::string& pattern, const std::string& primes_range,
            const std::string& odd_range, const std::string& engine_text,
            int jobs, const std::string& format, bool no_timing,
            const std::string& falsify, const std::string& cache_path) {
  std::vector<const Identity*> idents = match_identities(pattern);
  if (idents.empty()) return usage_error("no identity matches '" + pattern + "'");
  std::vector<long long> moduli;
  if (int rc = build_moduli(primes_range, odd_range, &moduli); rc != kOk)
    return rc;
  if (!cache_path.empty()) seed_from_cache(cache_path);
  RunConfig cfg;
  cfg.engine = parse_engine(engine_text);
  cfg.jobs = jobs;
  cfg.timing = !no_timing;
  cfg.falsify_id = falsify;
  Format fmt = pick_format(format);
  std::size_t id_width = 2;
  for (const Identity* id : idents) id_width = std::max(id_width, id->id.size());
  if (fmt == Format::csv) std::cout << report_csv_header() << "\n";
  RunTotals totals;
  for (const Identity* ident : idents) {
    std::vector<VerificationReport> reports = scan(*ident, moduli, cfg);
    for (const VerificationReport& r : reports) {
      totals.add(r);
      switch (fmt) {
        case Format::table: print_report_table_row(r, id_width); break;
        case Format::json: std::cout << report_json(r) << "\n"; break;
        case Format::csv: std::cout << report_csv_row(r) << "\n"; break;
      }
    }
  }
  if (fmt == Format::table)
    std::cout << totals.text() << "\n";
  else
    std::cerr << totals.text() << "\n";
  return totals.failures() > 0 ? kFail : kOk;
}

int cmd_discover(const std::string& pattern, const std::string& primes_range,
                 const std::string& odd_range, const std::string& engine_text,
                 int jobs, const std::string& format,
                 const std::string& cache_path) {
  std::vector<const Identity*> idents = match_identities(pattern);
  if (idents.empty()) return usage_error("no identity matches '" + pattern + "'");
  for (const Identity* ident : idents)
    if (ident->unknown.empty())
      return usage_error("identity '" + ident->id + "' has no unknown to solve");
  std::vector<long long> moduli;
  if (int rc = build_moduli(primes_range, odd_range, &moduli); rc != kOk)
    return rc;
  if (!cache_path.empty()) seed_from_cache(cache_path);
  RunConfig cfg;
  cfg.engine = parse_engine(engine_text);
  cfg.jobs = jobs;
  cfg.timing = false;
  Format fmt = pick_format(format);
  if (fmt == Format::csv) std::cout << "id,modulus,unknown,solved,published,outcome\n";
  bool failed = false;
  for (const Identity* ident : idents) {
    std::vector<VerificationReport> reports = scan(*ident, moduli, cfg);
    for (const VerificationReport& r : reports) {
      if (!r.solved && r.outcome == Outcome::match) continue;  // unknown absent
      if (r.outcome != Outcome::match) failed = true;
      auto pub = ident->table.find(r.modulus);
      std::string solved = r.solved ? r.solved->get_str() : "-";
      std::string published =
          pub != ident->table.end() ? std::to_string(pub->second) : "-";
      std::string verdict;
      if (r.outcome != Outcome::match)
        verdict = r.note.empty() ? "failed" : r.note;
      else if (pub == ident->table.end())
        verdict = "new";
      else
        verdict = "agrees";
      switch (fmt) {
        case Format::table: {
          std::ostringstream os;
          os.setf(std::ios::left);
          os.width(14);
          os << ident->id;
          os.width(7);
          os << r.modulus;
          os.width(6);
          os << ident->unknown;
          os.width(14);
          os << solved;
          os.width(12);
          os << published;
          os << verdict;
          std::cout << os.str() << "\n";
          break;
        }
        case Format::json: {
          nlohmann::ordered_json j;
          j["id"] = ident->id;
          j["modulus"] = r.modulus;
          j["unknown"] = ident->unknown;
          if (r.solved)
            j["solved"] = r.solved->get_str();
          else
            j["solved"] = nullptr;
          if (pub != ident->table.end())
            j["published"] = pub->second;
          else
            j["published"] = nullptr;
          j["outcome"] = outcome_name(r.outcome);
          std::cout << j.dump() << "\n";
          break;
        }
        case Format::csv:
          std::cout << ident->id << "," << r.modulus << "," << ident->unknown
                    << "," << solved << "," << published << ","
                    << outcome_name(r.outcome) << "\n";
          break;
      }
    }
  }
  return failed ? kFail : kOk;
}

int cmd_selftest() {
  struct Check {
    const char* name;
    std::function<bool()> fn;
  };
  std::vector<Check> checks = {
      {"jacobi spot values",
       [] {
         return jacobi(2, 7) == 1 && jacobi(3, 7) == -1 && jacobi(-1, 7) == -1 &&
                jacobi(10, 21) == -1 && jacobi(21, 21) == 0;
       }},
      {"primality spot values",
       [] { return is_prime(199) && !is_prime(201) && !is_prime(1); }},
      {"unit coordinates at 5",
       [] {
         const QuadInvariants& v = invariants(5);
         return v.ab.two_a == 1 && v.ab.two_b == 1 && v.unit_norm == -1;
       }},
      {"imaginary class numbers",
       [] { return invariants(7).h_minus == 1 && invariants(23).h_minus == 3; }},
      {"shifted-sum determinant at x=1",
       [] {
         IntMat m = build_numeric(chapman_spec(7, ChapmanVariant::C), {{'x', 1}});
         return det_exact(m) == -8;
       }},
      {"three-variable closed form at 7",
       [] {
         const Identity* id = find_identity("thm1.3.i");
         return id && rhs_eval(*id, 7).text() == "8 + 8*y + 8*z + 8*y*z";
       }},
      {"difference-kernel closed form at 5",
       [] {
         const Identity* id = find_identity("eq.evil-x");
         return id && rhs_eval(*id, 5).text() == "-2 - 5*x";
       }},
      {"difference-kernel determinant at 5",
       [] {
         const Identity* id = find_identity("eq.evil-x");
         return id && verify(*id, 5).outcome == Outcome::match;
       }},
      {"solved unknown at 13",
       [] {
         const Identity* id = find_identity("conj3.7.ii");
         if (!id) return false;
         VerificationReport r = verify(*id, 13);
         return r.outcome == Outcome::match && r.solved && *r.solved == -3;
       }},
      {"quadratic-form determinant {3,2}_7",
       [] { return cdn_det(3, 2, 7) == 3; }},
      {"character sum relations at 11",
       [] {
         const Identity* id = find_identity("eq.ST");
         return id && verify(*id, 11).outcome == Outcome::match;
       }},
      {"corner determinant equals 4",
       [] {
         const Identity* id = find_identity("cor1.1.minus");
         return id && verify(*id, 7).outcome == Outcome::match;
       }},
      {"determinant engines agree",
       [] {
         MatrixSpec spec{13, 0, 12, 0, 12, {{1, Atom{0, 0, 0, 1, 1, 0}}, {2, Atom{0, 0, 0, 1, 0, 0}}}, 0};
         IntMat m = build_numeric(spec, {});
         return det_bareiss(m) == det_modular(m);
       }},
      {"cache round trip",
       [] {
         namespace fs = std::filesystem;
         fs::path tmp = fs::temp_directory_path() / "legdet_cache_selftest.jsonl";
         std::vector<QuadInvariants> recs{invariants(5), invariants(7),
                                          invariants(13)};
         cache_store(tmp.string(), recs);
         std::vector<QuadInvariants> back = cache_load(tmp.string());
         fs::remove(tmp);
         if (back.size() != recs.size()) return false;
         for (std::size_t i = 0; i < recs.size(); ++i)
           if (back[i].p != recs[i].p || back[i].eps.two_a != recs[i].eps.two_a ||
               back[i].h_plus != recs[i].h_plus ||
               back[i].h_minus != recs[i].h_minus ||
               back[i].ab_prime.two_b != recs[i].ab_prime.two_b)
             return false;
         return true;
       }},
  };
  int failed = 0;
  for (const Check& c : checks) {
    bool ok = false;
    std::string what;
    try {
      ok = c.fn();
    } catch (const std::exception& ex) {
      what = ex.what();
    }
    if (ok) {
      std::cout << "ok   " << c.name << "\n";
    } else {
      ++failed;
      std::cout << "FAIL " << c.name;
      if (!what.empty()) std::cout << " (" << what << ")";
      std::cout << "\n";
    }
  }
  std::cout << checks.size() - failed << "/" << checks.size()
            << " selftest checks passed\n";
  return failed == 0 ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact determinant laboratory for Legendre-symbol matrix families"};
  app.require_subcommand(1);

  std::string primes_range, odd_range, pattern = "*", engine_text = "auto";
  std::string format, cache_path, falsify, det_spec;
  int jobs = 1;
  long long mod = 0;
  bool no_timing = false;

  auto add_range = [&](CLI::App* sub, bool primes_only) {
    sub->add_option("--primes", primes_range, "prime moduli A..B");
    if (!primes_only) sub->add_option("--odd", odd_range, "odd moduli A..B");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--engine", engine_text, "bareiss|modular|auto")
        ->check(CLI::IsMember({"bareiss", "modular", "auto"}));
    sub->add_option("--jobs", jobs, "worker threads for scans")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--cache", cache_path, "invariant cache file (jsonl)");
  };

  CLI::App* inv = app.add_subcommand(
      "invariants", "fundamental unit, class numbers, unit powers per prime");
  add_range(inv, true);
  inv->add_option("--format", format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  inv->add_option("--cache", cache_path, "invariant cache file (jsonl)");

  CLI::App* det = app.add_subcommand("det", "one determinant from a matrix spec");
  det->add_option("spec", det_spec,
                  "n=<int>; rows=<lo>..<hi>; cols=<lo>..<hi>; atom=<expr>; "
                  "vars=<subset of x,y,z,w>")
      ->required();
  det->add_option("--engine", engine_text, "bareiss|modular|auto")
      ->check(CLI::IsMember({"bareiss", "modular", "auto"}));
  det->add_option("--format", format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  det->add_option("--mod", mod, "also reduce the determinant mod M");

  CLI::App* ver = app.add_subcommand("verify", "check selected identities over a range");
  ver->add_option("--id", pattern, "identity id or glob")->required();
  add_range(ver, false);
  add_common(ver);
  ver->add_flag("--no-timing", no_timing, "zero the millis column (stable output)");
  ver->add_option("--falsify", falsify, "perturb this identity's expected value")
      ->group("");

  CLI::App* scn = app.add_subcommand("scan", "check every identity over a range");
  scn->add_option("--id", pattern, "identity id or glob (default *)");
  add_range(scn, false);
  add_common(scn);
  scn->add_flag("--no-timing", no_timing, "zero the millis column (stable output)");
  scn->add_option("--falsify", falsify, "perturb this identity's expected value")
      ->group("");

  CLI::App* dis = app.add_subcommand("discover", "solve declared unknowns per prime");
  dis->add_option("--id", pattern, "identity id or glob")->required();
  add_range(dis, false);
  add_common(dis);

  CLI::App* self = app.add_subcommand("selftest", "run the built-in example suite");
  (void)self;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(primes_range, format, cache_path);
    if (det->parsed()) return cmd_det(det_spec, engine_text, format, mod);
    if (ver->parsed())
      return cmd_run(pattern, primes_range, odd_range, engine_text, jobs,
                     format, no_timing, falsify, cache_path);
    if (scn->parsed())
      return cmd_run(pattern, primes_range, odd_range, engine_text, jobs,
                     format, no_timing, falsify, cache_path);
    if (dis->parsed())
      return cmd_discover(pattern, primes_range, odd_range, engine_text, jobs,
                          format, cache_path);
    if (self->parsed()) return cmd_selftest();
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return kFail;
  }
  return kUsage;
}
