#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cdfan {

/// Exact rational scalar. All module-path arithmetic uses this type;
/// no floating point appears anywhere in the library.
using Rational = mpq_class;

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long long to_int64(const Rational& r) {
  mpz_class num = r.get_num();
  return static_cast<long long>(num.get_si());
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Deterministic 64-bit mixing, used to derive per-branch RNG streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL + salt);
  x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27; x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) { h ^= c; h *= 1099511628211ULL; }
  return h;
}

} // namespace cdfan
