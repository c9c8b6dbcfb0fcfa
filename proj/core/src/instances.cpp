#include "pvg/instances.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pvg/error.hpp"
#include "pvg/meeting_graph.hpp"
#include "pvg/numeric.hpp"

namespace pvg {
namespace {

struct FamilyName {
  Family family;
  std::string_view short_name;
  std::string_view long_name;
};

constexpr std::array<FamilyName, 7> kFamilyNames{{
    {Family::kThm3ArbHomo, "thm3", "thm3_arb_homo"},
    {Family::kThm4ArbHetero, "thm4", "thm4_arb_hetero"},
    {Family::kSimpleHomo, "siho", "siho_simple_homo"},
    {Family::kSimpleHetero, "sihe", "sihe_simple_hetero"},
    {Family::kThm7CircHomo, "thm7", "thm7_circ_homo"},
    {Family::kThm8CircHetero, "thm8", "thm8_circ_hetero"},
    {Family::kRandom, "random", "random"},
}};

void require(bool ok, std::string_view family, const std::string& constraint) {
  if (!ok) throw Error(ErrorCode::kParameterViolation, std::string(family) + ": requires " + constraint);
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Accumulates named sites and carrier routes, then freezes into a RouteSet.
class Builder {
 public:
  SiteId site(std::string name) {
    names_.push_back(std::move(name));
    return SiteId(names_.size() - 1);
  }
  void carrier(std::string name, std::vector<SiteId> route) {
    carriers_.push_back({std::move(name), std::move(route)});
  }
  RouteSet build() && { return RouteSet(std::move(names_), std::move(carriers_), Mode::kAnonymous); }

 private:
  std::vector<std::string> names_;
  std::vector<CarrierSpec> carriers_;
};

std::string indexed(std::string_view prefix, std::size_t i) { return std::string(prefix) + std::to_string(i); }

// iota(i, m*s + r) = i + (s + 1) r, everything mod m.
std::size_t iota(std::size_t i, std::size_t j, std::size_t m) {
  const std::size_t s = j / m;
  const std::size_t r = j % m;
  return (i + ((s + 1) % m) * r) % m;
}

Instance make(InstanceSpec spec, RouteSet routes, std::optional<std::uint64_t> bound,
              std::optional<CarrierId> start = CarrierId(0)) {
  return Instance{spec, std::move(routes), bound, start};
}

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& f : kFamilyNames) {
    if (f.family == family) return f.short_name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& f : kFamilyNames) {
    if (f.short_name == name || f.long_name == name) return f.family;
  }
  return std::nullopt;
}

std::uint64_t thm3_bound(std::size_t n, std::size_t k, std::size_t p) {
  return static_cast<std::uint64_t>(k - 2) * (p + 1) + n / (k - 1);
}

std::uint64_t thm4_bound(std::size_t n, std::size_t k, std::size_t p) {
  return static_cast<std::uint64_t>(k - 2) * (p - 1) * p + (n - 2) / (k - 1) - 1;
}

std::uint64_t thm7_bound(std::size_t n, std::size_t k) { return static_cast<std::uint64_t>(n) * (k - 1); }

std::uint64_t thm8_bound(std::size_t k, std::size_t q, std::size_t r) {
  return static_cast<std::uint64_t>(k - 2) * (q * r + r) + r + q;
}

SimpleHomoParams siho_params(std::size_t n, std::size_t k) {
  require(n >= 4, "siho", "n >= 4");
  require(k >= 2 && 2 * k <= n, "siho", "2 <= k <= n/2");
  const auto prime = largest_prime_at_most(static_cast<std::int64_t>(n - k) - 1);
  if (!prime) throw Error(ErrorCode::kNoSuitablePrime, "siho: no prime below n - k = " + std::to_string(n - k));
  const std::size_t m = *prime;
  require(k <= m, "siho", "k <= largest prime below n - k (" + std::to_string(m) + ")");
  const std::size_t mu = n - m - k;
  return {m, mu, m * m - m + 1 + mu};
}

SimpleHeteroParams sihe_params(std::size_t n, std::size_t k) {
  require(n >= 36, "sihe", "n >= 36");
  require(k >= 4 && 6 * (k + 2) <= n, "sihe", "4 <= k <= n/6 - 2");
  const auto prime = largest_prime_at_most(static_cast<std::int64_t>((n - 3 * k - 4) / 2));
  if (!prime) throw Error(ErrorCode::kNoSuitablePrime, "sihe: no prime at most (n - 3k - 4)/2");
  const std::size_t m = *prime;
  const std::size_t w = n - (3 * k - 4) - 2 * m;
  return {m, w, m * m - m + k - 1, m * m - m + k};
}

CircHeteroParams thm8_params(std::size_t n, std::size_t k) {
  require(k >= 2, "thm8", "k >= 2");
  require(n >= k + 2, "thm8", "n >= k + 2");
  std::size_t q = 0;
  std::size_t r = 0;
  if ((n - k) % 2 == 0) {
    r = (n - k) / 2 + 1;
    q = r + 1;
  } else {
    const std::size_t sum = n - k + 3;
    for (std::size_t cand = (sum - 1) / 2; cand >= 2; --cand) {
      if (std::gcd(cand, sum - cand) == 1) {
        r = cand;
        q = sum - cand;
        break;
      }
    }
    if (r == 0) {
      throw Error(ErrorCode::kNoCoprimePair, "thm8: no coprime r < q with r + q = " + std::to_string(sum));
    }
  }
  require(k <= q, "thm8", "k <= q (" + std::to_string(q) + ")");
  return {q, r};
}

Instance gen_thm3(std::size_t n, std::size_t k, std::size_t p) {
  require(n >= 9, "thm3", "n >= 9");
  require(k >= 3 && 3 * k <= n, "thm3", "3 <= k <= n/3");
  require(p >= k - 1 && p >= ceil_div(n, k - 1), "thm3", "p >= max(k-1, ceil(n/(k-1)))");

  const std::size_t groups = k - 1;
  const std::size_t base = n / groups;
  const std::size_t extra = n % groups;

  Builder b;
  std::vector<SiteId> x(groups);
  std::vector<std::vector<SiteId>> others(groups);
  for (std::size_t i = 0; i < groups; ++i) {
    const std::size_t size = base + (i >= groups - extra ? 1 : 0);
    x[i] = b.site(indexed("x", i));
    for (std::size_t j = 1; j < size; ++j) others[i].push_back(b.site("s" + std::to_string(i) + "_" + std::to_string(j)));
  }
  for (std::size_t i = 0; i < groups; ++i) {
    std::vector<SiteId> route(p);
    std::size_t fill = 0;
    for (std::size_t t = 0; t < p; ++t) route[t] = t == i ? x[i] : others[i][fill++ % others[i].size()];
    b.carrier(indexed("c", i), std::move(route));
  }
  std::vector<SiteId> hub(p);
  for (std::size_t t = 0; t < p; ++t) hub[t] = x[t % groups];
  b.carrier(indexed("c", k - 1), std::move(hub));

  return make({Family::kThm3ArbHomo, n, k, p, 0}, std::move(b).build(), thm3_bound(n, k, p), std::nullopt);
}

Instance gen_thm4(std::size_t n, std::size_t k, std::size_t p) {
  require(n >= 9, "thm4", "n >= 9");
  require(k >= 3 && 3 * k <= n, "thm4", "3 <= k <= n/3");
  require(p >= k - 1 && p >= ceil_div(n, k), "thm4", "p >= max(k-1, ceil(n/k))");
  require(p >= k, "thm4", "p >= k");
  const std::size_t q = (n - 2) / (k - 1);
  require(q <= p, "thm4", "floor((n-2)/(k-1)) <= p");
  require(n <= k * (p - 1), "thm4", "n <= k(p-1)");

  Builder b;
  std::vector<SiteId> x(k);
  std::vector<std::vector<SiteId>> own(k);
  for (std::size_t i = 1; i < k; ++i) {
    x[i] = b.site(indexed("x", i));
    for (std::size_t j = 1; j < q; ++j) own[i].push_back(b.site("s" + std::to_string(i) + "_" + std::to_string(j)));
  }
  const std::size_t rest = n - (k - 1) * q;
  std::vector<SiteId> s0;
  for (std::size_t j = 0; j < rest; ++j) s0.push_back(b.site("s0_" + std::to_string(j)));

  const std::size_t free_slots = p - k;
  const std::size_t on_c0 = std::min(s0.size(), free_slots);
  // Sites of S_0 that do not fit on c_0 go round-robin to c_1..c_{k-1}.
  std::size_t next = 1;
  for (std::size_t j = on_c0; j < s0.size(); ++j) {
    while (own[next].size() + 1 >= p) next = next % (k - 1) + 1;
    own[next].push_back(s0[j]);
    next = next % (k - 1) + 1;
  }

  std::vector<std::optional<SiteId>> c0(p - 1);
  for (std::size_t i = 1; i < k; ++i) c0[i % (p - 1)] = x[i];
  std::size_t fill = 0;
  for (auto& slot : c0) {
    if (!slot) slot = s0[fill++ % on_c0];
  }
  std::vector<SiteId> route0;
  for (const auto& slot : c0) route0.push_back(*slot);
  b.carrier("c0", std::move(route0));

  for (std::size_t i = 1; i < k; ++i) {
    std::vector<SiteId> route(p);
    std::size_t f = 0;
    for (std::size_t t = 0; t < p; ++t) route[t] = t == i ? x[i] : own[i][f++ % own[i].size()];
    b.carrier(indexed("c", i), std::move(route));
  }

  return make({Family::kThm4ArbHetero, n, k, p, 0}, std::move(b).build(), thm4_bound(n, k, p));
}

Instance gen_siho(std::size_t n, std::size_t k) {
  const SimpleHomoParams params = siho_params(n, k);
  const std::size_t m = params.prime;

  Builder b;
  std::vector<SiteId> x(m), y(k + 1), z(params.mu_length + 1);
  for (std::size_t i = 0; i < m; ++i) x[i] = b.site(indexed("x", i));
  for (std::size_t i = 1; i <= k; ++i) y[i] = b.site(indexed("y", i));
  for (std::size_t i = 1; i <= params.mu_length; ++i) z[i] = b.site(indexed("z", i));

  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<SiteId> route;
    route.reserve(params.period);
    for (std::size_t j = 1; j <= params.mu_length; ++j) route.push_back(z[j]);
    for (std::size_t j = 1; j <= m * m - m; ++j) route.push_back(x[iota(i, j, m)]);
    route.push_back(y[i]);
    b.carrier(indexed("c", i), std::move(route));
  }

  const std::uint64_t bound = static_cast<std::uint64_t>(k) * params.period - params.mu_length;
  return make({Family::kSimpleHomo, n, k, 0, 0}, std::move(b).build(), bound);
}

Instance gen_sihe(std::size_t n, std::size_t k) {
  const SimpleHeteroParams params = sihe_params(n, k);
  const std::size_t m = params.prime;
  const std::size_t nw = params.w_size;
  const std::size_t half_up = (nw + 1) / 2;
  const std::size_t half_down = nw / 2;
  const std::size_t big = m * m - m;

  Builder b;
  std::vector<SiteId> u(k), v(k - 1), w(nw + 1), x(m), y(m), z(k);
  for (std::size_t i = 1; i < k; ++i) u[i] = b.site(indexed("u", i));
  for (std::size_t i = 1; i + 1 < k; ++i) v[i] = b.site(indexed("v", i));
  for (std::size_t i = 1; i <= nw; ++i) w[i] = b.site(indexed("w", i));
  for (std::size_t i = 0; i < m; ++i) x[i] = b.site(indexed("x", i));
  for (std::size_t i = 0; i < m; ++i) y[i] = b.site(indexed("y", i));
  for (std::size_t i = 1; i < k; ++i) z[i] = b.site(indexed("z", i));

  {
    std::vector<SiteId> route;
    for (std::size_t j = 1; j <= big - half_up; ++j) route.push_back(x[iota(0, j, m)]);
    for (std::size_t j = 1; j <= half_up; ++j) route.push_back(w[j]);
    for (std::size_t j = 1; j < k; ++j) route.push_back(z[j]);
    b.carrier("c0", std::move(route));
  }
  for (std::size_t i = 1; i < k; ++i) {
    std::vector<SiteId> route;
    const std::size_t alpha_len = big - half_down - i + 1;
    for (std::size_t j = 1; j <= alpha_len; ++j) route.push_back(y[iota(i, j, m)]);
    for (std::size_t j = half_up + 1; j <= nw; ++j) route.push_back(w[j]);
    for (std::size_t j = alpha_len + 1; j <= big - half_down; ++j) route.push_back(y[iota(i, j, m)]);
    // zeta(i) = u_i, v_{k-i}..v_{k-2}, z_i, v_1..v_{k-1-i}
    route.push_back(u[i]);
    for (std::size_t j = k - i; j <= k - 2; ++j) route.push_back(v[j]);
    route.push_back(z[i]);
    for (std::size_t j = 1; j + i <= k - 1; ++j) route.push_back(v[j]);
    b.carrier(indexed("c", i), std::move(route));
  }

  const std::uint64_t p = params.period;
  const std::uint64_t bound = (k - 2) * p * (p - 1) + p - k + 1;
  return make({Family::kSimpleHetero, n, k, 0, 0}, std::move(b).build(), bound);
}

Instance gen_thm7(std::size_t n, std::size_t k) {
  require(n >= 4, "thm7", "n >= 4");
  require(k >= 2 && 2 * k <= n, "thm7", "2 <= k <= n/2");
  const std::size_t nx = n - k;

  Builder b;
  std::vector<SiteId> x(nx), y(k + 1);
  for (std::size_t i = 0; i < nx; ++i) x[i] = b.site(indexed("x", i));
  for (std::size_t i = 1; i <= k; ++i) y[i] = b.site(indexed("y", i));

  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<SiteId> path;  // alpha(i), beta(i)
    for (std::size_t j = i; j < nx; ++j) path.push_back(x[j]);
    for (std::size_t j = 1; j < std::min(i, nx); ++j) path.push_back(x[j]);
    std::vector<SiteId> route{x[0]};
    route.insert(route.end(), path.begin(), path.end());
    route.push_back(y[i]);
    route.insert(route.end(), path.rbegin(), path.rend());
    b.carrier(indexed("c", i), std::move(route));
  }

  return make({Family::kThm7CircHomo, n, k, 0, 0}, std::move(b).build(), thm7_bound(n, k));
}

Instance gen_thm8(std::size_t n, std::size_t k) {
  const CircHeteroParams params = thm8_params(n, k);
  const std::size_t q = params.q;
  const std::size_t r = params.r;

  Builder b;
  std::vector<SiteId> x(q - 1), y(r), z(k);
  for (std::size_t i = 0; i + 1 < q; ++i) x[i] = b.site(indexed("x", i));
  for (std::size_t i = 1; i < r; ++i) y[i] = b.site(indexed("y", i));
  for (std::size_t i = 1; i < k; ++i) z[i] = b.site(indexed("z", i));

  std::vector<SiteId> route0{x[0]};
  for (std::size_t i = 1; i < r; ++i) route0.push_back(y[i]);
  b.carrier("c0", std::move(route0));
  for (std::size_t i = 1; i < k; ++i) {
    std::vector<SiteId> route;
    for (std::size_t j = i; j + 1 < q; ++j) route.push_back(x[j]);
    for (std::size_t j = 0; j < std::min(i, q - 1); ++j) route.push_back(x[j]);
    route.push_back(z[i]);
    b.carrier(indexed("c", i), std::move(route));
  }

  return make({Family::kThm8CircHetero, n, k, 0, 0}, std::move(b).build(), thm8_bound(k, q, r));
}

Instance gen_random_feasible(std::size_t n, std::size_t k, std::size_t p_max, std::uint64_t seed) {
  require(n >= 1 && k >= 1 && p_max >= 1, "random", "n, k, p_max >= 1");
  std::mt19937_64 rng(seed);

  std::vector<std::size_t> periods(k);
  std::uniform_int_distribution<std::size_t> period_dist(1, p_max);
  for (auto& period : periods) period = period_dist(rng);
  for (std::size_t c = 0; std::accumulate(periods.begin(), periods.end(), std::size_t{0}) < n; c = (c + 1) % k) {
    ++periods[c];
  }

  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t t = 0; t < periods[c]; ++t) slots.emplace_back(c, t);
  }
  std::shuffle(slots.begin(), slots.end(), rng);

  std::vector<std::vector<std::uint32_t>> routes(k);
  for (std::size_t c = 0; c < k; ++c) routes[c].resize(periods[c]);
  std::uniform_int_distribution<std::uint32_t> site_dist(0, static_cast<std::uint32_t>(n - 1));
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto [c, t] = slots[i];
    routes[c][t] = i < n ? static_cast<std::uint32_t>(i) : site_dist(rng);
  }

  RouteSet draft = RouteSet::from_routes(n, routes);
  const MeetingGraph graph = build_meeting_graph(draft);
  const auto labels = graph.components();
  const std::uint32_t rendezvous = routes[0][0];
  bool repaired = false;
  for (std::size_t c = 1; c < k; ++c) {
    if (labels[c] != labels[0]) {
      routes[c].insert(routes[c].begin(), rendezvous);
      repaired = true;
    }
  }

  InstanceSpec spec{Family::kRandom, n, k, p_max, seed};
  if (!repaired) return make(spec, std::move(draft), std::nullopt, std::nullopt);
  return make(spec, RouteSet::from_routes(n, routes), std::nullopt, std::nullopt);
}

Instance generate(const InstanceSpec& spec) {
  switch (spec.family) {
    case Family::kThm3ArbHomo:
      return gen_thm3(spec.n, spec.k, spec.p);
    case Family::kThm4ArbHetero:
      return gen_thm4(spec.n, spec.k, spec.p);
    case Family::kSimpleHomo:
      return gen_siho(spec.n, spec.k);
    case Family::kSimpleHetero:
      return gen_sihe(spec.n, spec.k);
    case Family::kThm7CircHomo:
      return gen_thm7(spec.n, spec.k);
    case Family::kThm8CircHetero:
      return gen_thm8(spec.n, spec.k);
    case Family::kRandom:
      return gen_random_feasible(spec.n, spec.k, spec.p, spec.seed);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family");
}

}  // namespace pvg
