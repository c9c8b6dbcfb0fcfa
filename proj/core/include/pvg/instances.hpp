#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pvg/route_set.hpp"

namespace pvg {

enum class Family {
  kThm3ArbHomo,
  kThm4ArbHetero,
  kSimpleHomo,
  kSimpleHetero,
  kThm7CircHomo,
  kThm8CircHetero,
  kRandom,
};

std::string_view to_string(Family family);       // short CLI names: thm3, thm4, siho, sihe, thm7, thm8, random
std::optional<Family> parse_family(std::string_view name);  // accepts short and long names

struct InstanceSpec {
  Family family = Family::kRandom;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t p = 0;       // thm3, thm4: period; random: max period; ignored otherwise
  std::uint64_t seed = 0;  // random only
};

// A generated route set together with the family's move lower bound and the
// carrier the lower-bound argument injects the agent on. Families that fix no
// start leave it empty; the bound is then checked against the worst start.
struct Instance {
  InstanceSpec spec;
  RouteSet routes;
  std::optional<std::uint64_t> lower_bound;  // absent for random instances
  std::optional<CarrierId> designated_start;
};

// Closed-form lower bounds, evaluated fresh from the parameters.
std::uint64_t thm3_bound(std::size_t n, std::size_t k, std::size_t p);
std::uint64_t thm4_bound(std::size_t n, std::size_t k, std::size_t p);
std::uint64_t thm7_bound(std::size_t n, std::size_t k);
std::uint64_t thm8_bound(std::size_t k, std::size_t q, std::size_t r);

struct SimpleHomoParams {
  std::size_t prime;       // largest prime < n - k
  std::size_t mu_length;   // n - prime - k
  std::size_t period;      // prime^2 - prime + 1 + mu_length
};
// Throws ParameterViolation or NoSuitablePrime.
SimpleHomoParams siho_params(std::size_t n, std::size_t k);

struct SimpleHeteroParams {
  std::size_t prime;       // largest prime <= (n - 3k - 4) / 2
  std::size_t w_size;      // |W| = n - (3k - 4) - 2 * prime
  std::size_t hub_period;  // prime^2 - prime + k - 1
  std::size_t period;      // prime^2 - prime + k
};
SimpleHeteroParams sihe_params(std::size_t n, std::size_t k);

struct CircHeteroParams {
  std::size_t q;  // period of c_1..c_{k-1}
  std::size_t r;  // period of c_0, coprime with q, r < q
};
// Throws ParameterViolation or NoCoprimePair.
CircHeteroParams thm8_params(std::size_t n, std::size_t k);

// Arbitrary homogeneous routes. n >= 9, 3 <= k <= n/3, p >= max(k-1, ceil(n/(k-1))).
Instance gen_thm3(std::size_t n, std::size_t k, std::size_t p);
// Arbitrary heterogeneous routes: one carrier of period p-1, k-1 of period p.
// n >= 9, 3 <= k <= n/3, p >= max(k-1, ceil(n/k)); the layout also needs
// p >= k and n <= k(p-1).
Instance gen_thm4(std::size_t n, std::size_t k, std::size_t p);
// Simple homogeneous routes <mu, delta(i), y_i> over a prime modulus.
Instance gen_siho(std::size_t n, std::size_t k);
// Simple heterogeneous routes <alpha(i), gamma(i), delta(i), zeta(i)>.
Instance gen_sihe(std::size_t n, std::size_t k);
// Circular homogeneous routes of period 2(n-k) meeting at x_0.
Instance gen_thm7(std::size_t n, std::size_t k);
// Circular heterogeneous routes: c_0 of period r, others of period q.
Instance gen_thm8(std::size_t n, std::size_t k);
// Seeded random instance, repaired to be feasible. Periods are drawn from
// [1, p_max]; the repair may lengthen a route by one site and ensuring every
// site lies on a route may lengthen periods further when k * p_max < n.
Instance gen_random_feasible(std::size_t n, std::size_t k, std::size_t p_max, std::uint64_t seed);

Instance generate(const InstanceSpec& spec);

}  // namespace pvg
