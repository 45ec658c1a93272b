#include "legdet/cache.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "json.hpp"

namespace legdet {

namespace {

using nlohmann::ordered_json;

void put_pair(ordered_json& j, const char* key, const QuadInt& q) {
  j[std::string(key) + "_two_a"] = q.two_a.get_str();
  j[std::string(key) + "_two_b"] = q.two_b.get_str();
}

// mpz_class(string) accepts whitespace and 0x prefixes; records are stricter.
bool get_mpz(const ordered_json& j, const std::string& key, mpz_class* out) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) return false;
  const std::string& s = it->get_ref<const std::string&>();
  if (s.empty()) return false;
  for (std::size_t i = (s[0] == '-' ? 1 : 0); i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  if (s == "-") return false;
  out->set_str(s, 10);
  return true;
}

bool get_pair(const ordered_json& j, const char* key, long p, QuadInt* out) {
  if (!get_mpz(j, std::string(key) + "_two_a", &out->two_a)) return false;
  if (!get_mpz(j, std::string(key) + "_two_b", &out->two_b)) return false;
  out->p = p;
  return true;
}

}  // namespace

std::string cache_record_line(const QuadInvariants& v) {
  ordered_json j;
  j["p"] = v.p;
  put_pair(j, "eps", v.eps);
  put_pair(j, "ab", v.ab);
  put_pair(j, "ab_prime", v.ab_prime);
  j["h_plus"] = v.h_plus;
  j["h_minus"] = v.h_minus;
  j["schema_version"] = kCacheSchema;
  return j.dump();
}

bool parse_cache_record(const std::string& line, QuadInvariants* out,
                        bool* stale) {
  *stale = false;
  ordered_json j = ordered_json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return false;
  auto ver = j.find("schema_version");
  if (ver == j.end() || !ver->is_number_integer()) return false;
  if (ver->get<int>() != kCacheSchema) {
    *stale = true;
    return false;
  }
  auto p_it = j.find("p");
  auto hp = j.find("h_plus");
  auto hm = j.find("h_minus");
  if (p_it == j.end() || !p_it->is_number_integer()) return false;
  if (hp == j.end() || !hp->is_number_integer()) return false;
  if (hm == j.end() || !hm->is_number_integer()) return false;
  QuadInvariants v;
  v.p = p_it->get<long>();
  v.h_plus = hp->get<long>();
  v.h_minus = hm->get<long>();
  if (v.p < 3 || v.h_plus < 1 || v.h_minus < 0) return false;
  if (!get_pair(j, "eps", v.p, &v.eps)) return false;
  if (!get_pair(j, "ab", v.p, &v.ab)) return false;
  if (!get_pair(j, "ab_prime", v.p, &v.ab_prime)) return false;
  mpz_class norm = v.eps.two_a * v.eps.two_a - v.p * v.eps.two_b * v.eps.two_b;
  if (norm != 4 && norm != -4) return false;
  v.unit_norm = norm > 0 ? 1 : -1;
  *out = v;
  return true;
}

void cache_store(const std::string& path,
                 const std::vector<QuadInvariants>& records) {
  std::vector<const QuadInvariants*> ordered;
  ordered.reserve(records.size());
  for (const auto& r : records) ordered.push_back(&r);
  std::sort(ordered.begin(), ordered.end(),
            [](const QuadInvariants* a, const QuadInvariants* b) {
              return a->p < b->p;
            });
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write cache file " + path);
  for (const QuadInvariants* r : ordered) out << cache_record_line(*r) << '\n';
}

std::vector<QuadInvariants> cache_load(const std::string& path) {
  std::ifstream in(path);
  std::vector<QuadInvariants> records;
  if (!in) return records;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    QuadInvariants v;
    bool stale = false;
    if (parse_cache_record(line, &v, &stale)) {
      records.push_back(std::move(v));
    } else if (stale) {
      std::cerr << "cache: " << path << " uses a different schema; ignoring it\n";
      return {};
    } else {
      std::cerr << "cache: skipping corrupt record at " << path << ":"
                << lineno << "\n";
    }
  }
  return records;
}

std::size_t seed_from_cache(const std::string& path) {
  std::vector<QuadInvariants> records = cache_load(path);
  for (const auto& r : records) seed_invariants(r);
  return records.size();
}

}  // namespace legdet
