#pragma once

#include <cstdint>
#include <numeric>
#include <optional>

namespace pvg {

// lcm(a, b), or nullopt if it does not fit in 64 bits.
inline std::optional<std::uint64_t> checked_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t q = a / g;
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(q, b, &out)) return std::nullopt;
  return out;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return UINT64_MAX;
  return out;
}

// Trial division; instance sizes here are tiny.
inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

// Largest prime q with q <= limit.
inline std::optional<std::uint64_t> largest_prime_at_most(std::int64_t limit) {
  for (std::int64_t q = limit; q >= 2; --q) {
    if (is_prime(static_cast<std::uint64_t>(q))) return static_cast<std::uint64_t>(q);
  }
  return std::nullopt;
}

}  // namespace pvg
