#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "legdet/quadfield.hpp"

namespace legdet {

// Unit and class-number records persist as line-delimited JSON, one object
// per prime: p, two_a/two_b of eps, ab, ab_prime (decimal strings, so the
// coordinates survive past 64 bits), h_plus, h_minus, schema_version.
// unit_norm is derived from eps on load rather than stored.
inline constexpr int kCacheSchema = 1;

// One serialized record line, no trailing newline. Exposed for tests.
std::string cache_record_line(const QuadInvariants& v);

// Parses one line. Returns false on malformed JSON, missing fields, or bad
// numerals. A schema_version other than kCacheSchema sets *stale instead.
bool parse_cache_record(const std::string& line, QuadInvariants* out,
                        bool* stale);

// Rewrites the file with one record per line in increasing p.
void cache_store(const std::string& path,
                 const std::vector<QuadInvariants>& records);

// Reads every parseable record. Corrupt lines are skipped with a warning on
// stderr; any record from a different schema discards the whole file (the
// caller recomputes). A missing file yields an empty vector.
std::vector<QuadInvariants> cache_load(const std::string& path);

// cache_load plus seed_invariants on each record; returns the count seeded.
std::size_t seed_from_cache(const std::string& path);

}  // namespace legdet
