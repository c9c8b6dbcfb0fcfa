// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pvg/engine.hpp"
#include "pvg/error.hpp"
#include "pvg/forge.hpp"
#include "pvg/guessing_ride.hpp"
#include "pvg/hitch_a_ride.hpp"
#include "pvg/instances.hpp"
#include "pvg/meeting_graph.hpp"
#include "pvg/oracle.hpp"
#include "reference.hpp"

using namespace pvg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

struct Named {
  std::string label;
  RouteSet routes;
};

std::vector<Named> corpus() {
  std::vector<Named> out;
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 12;
    const std::size_t k = 1 + rng() % 5;
    const std::size_t p = 1 + rng() % 10;
    const std::uint64_t seed = rng();
    out.push_back({"random(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(p) + "," +
                       std::to_string(seed) + ")",
                   gen_random_feasible(n, k, p, seed).routes});
  }
  out.push_back({"thm3(9,3,5)", gen_thm3(9, 3, 5).routes});
  out.push_back({"thm4(9,3,4)", gen_thm4(9, 3, 4).routes});
  out.push_back({"siho(5,2)", gen_siho(5, 2).routes});
  out.push_back({"sihe(36,4)", gen_sihe(36, 4).routes});
  out.push_back({"thm7(4,2)", gen_thm7(4, 2).routes});
  out.push_back({"thm8(4,2)", gen_thm8(4, 2).routes});
  return out;
}

std::uint64_t largest_prime_upto(std::int64_t limit) {
  for (std::int64_t q = limit; q >= 2; --q) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= q; ++d) {
      if (q % d == 0) prime = false;
    }
    if (prime) return static_cast<std::uint64_t>(q);
  }
  return 0;
}

std::string with_failures(const Outcome& o) {
  std::string s = o.detail;
  for (const auto& f : o.failures) s += "\n    " + f;
  return s;
}

Outcome hitch_correct(const std::vector<Named>& runs, bool check_bound) {
  Outcome o;
  std::size_t count = 0;
  for (const auto& inst : runs) {
    const RouteSet& rs = inst.routes;
    const std::uint64_t b = rs.max_period();
    std::vector<bool> modes{false};
    if (is_homogeneous(rs)) modes.push_back(true);
    for (bool homo : modes) {
      const std::uint64_t b_prime = homo ? b : b * b;
      for (std::size_t c = 0; c < rs.num_carriers(); ++c) {
        HitchARide s(b, homo);
        const Trace t = run(rs, s, CarrierId(c), default_move_limit(rs));
        ++count;
        const std::string where = inst.label + " start c" + std::to_string(c) + (homo ? " B'=B" : " B'=B^2");
        if (!check_bound) {
          if (!t.halted || !is_concrete_cover(rs, t)) o.fail(where + ": halted=" + std::to_string(t.halted));
        } else if (t.moves() > (3 * rs.num_carriers() - 2) * b_prime) {
          o.fail(where + ": " + std::to_string(t.moves()) + " moves");
        }
      }
    }
  }
  o.detail = std::to_string(count) + " runs";
  return o;
}

Outcome guess_correct(const std::vector<Named>& runs) {
  Outcome o;
  std::size_t count = 0;
  for (const auto& inst : runs) {
    const RouteSet rs = inst.routes.with_mode(Mode::kWithIds);
    const std::uint64_t p = rs.max_period();
    const std::uint64_t big_p = is_homogeneous(rs) ? p : p * p;
    const std::uint64_t limit = 12 * rs.num_carriers() * big_p;
    for (std::uint64_t g0 : {std::uint64_t{rs.num_sites()}, std::uint64_t{1}}) {
      for (std::size_t c = 0; c < rs.num_carriers(); ++c) {
        GuessingRide s(rs.num_sites(), g0);
        const Trace t = run(rs, s, CarrierId(c), std::max(limit, default_move_limit(rs)));
        ++count;
        if (!t.halted || !is_concrete_cover(rs, t) || t.moves() >= limit) {
          o.fail(inst.label + " start c" + std::to_string(c) + " g0=" + std::to_string(g0) + ": " +
                 std::to_string(t.moves()) + " moves, limit " + std::to_string(limit));
        }
      }
    }
  }
  o.detail = std::to_string(count) + " runs (g0 = n and g0 = 1)";
  return o;
}

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome audit_one(const std::string& label, const Instance& inst, std::uint64_t expected_bound, double budget) {
  Outcome o;
  BoundReport r;
  const double s = seconds([&] { r = audit(inst); });
  std::ostringstream d;
  d.setf(std::ios::fixed);
  d.precision(3);
  d << label << ": bound " << r.theoretical_lower_bound.value_or(0) << ", oracle "
    << (r.oracle_optimum ? std::to_string(*r.oracle_optimum) : "n/a") << " from " << r.start
    << (r.start_is_worst ? " (worst start)" : "") << ", " << s << " s";
  o.detail = d.str();
  if (r.theoretical_lower_bound != expected_bound) o.fail(label + ": attached bound differs from formula");
  if (!r.oracle_optimum || *r.oracle_optimum < expected_bound) o.fail(label + ": oracle below bound");
  if (r.violation()) o.fail(label + ": audit reports a violation");
  if (s >= budget) o.fail(label + ": over time budget");
  return o;
}

Outcome criterion4() {
  // (k-2)(p+1) + floor(n/(k-1)) with n=12, k=4, p=6.
  return audit_one("thm3(12,4,6)", gen_thm3(12, 4, 6), 2 * 7 + 12 / 3, 5.0);
}

Outcome criterion5() {
  Outcome all;
  const std::vector<Outcome> parts{
      audit_one("thm4(9,3,5)", gen_thm4(9, 3, 5), 1 * 4 * 5 + 7 / 2 - 1, 30.0),
      audit_one("thm7(8,3)", gen_thm7(8, 3), 8 * 2, 30.0),
      audit_one("thm8(13,3)", gen_thm8(13, 3), 1 * (7 * 6 + 6) + 6 + 7, 30.0),
  };
  for (const auto& p : parts) {
    all.detail += (all.detail.empty() ? "" : "; ") + p.detail;
    for (const auto& f : p.failures) all.fail(f);
    if (!p.pass) all.pass = false;
  }
  return all;
}

Outcome criterion6() {
  Outcome o;
  std::size_t siho_count = 0;
  std::size_t sihe_count = 0;
  for (std::size_t n = 4; n <= 60; ++n) {
    for (std::size_t k = 2; 2 * k <= n; ++k) {
      const std::uint64_t m = largest_prime_upto(static_cast<std::int64_t>(n - k) - 1);
      const bool legal = m != 0 && k <= m;
      std::optional<Instance> inst;
      try {
        inst = gen_siho(n, k);
      } catch (const Error&) {
      }
      const std::string at = "siho(" + std::to_string(n) + "," + std::to_string(k) + ")";
      if (legal != inst.has_value()) {
        o.fail(at + ": legality mismatch");
        continue;
      }
      if (!legal) continue;
      ++siho_count;
      const RouteSet& rs = inst->routes;
      const std::size_t n_bar = n - m - k;
      const std::size_t p = m * m - m + 1 + n_bar;
      std::set<std::uint32_t> mu;
      for (std::size_t i = 1; i <= n_bar; ++i) mu.insert(rs.find_site("z" + std::to_string(i))->value);
      if (rs.num_sites() != n) o.fail(at + ": site count");
      for (const auto& c : rs.carriers()) {
        if (c.route.period() != p) o.fail(at + ": period " + std::to_string(c.route.period()));
        if (!is_simple(c.route)) o.fail(at + ": " + c.name + " not simple");
      }
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
          for (const auto& [site, t] : ref::meeting_sites(rs, a, b)) {
            if (!mu.count(site) || t >= n_bar) o.fail(at + ": meeting outside mu");
          }
        }
      }
    }
    for (std::size_t k = 4; n >= 36 && 6 * (k + 2) <= n; ++k) {
      const std::uint64_t m = largest_prime_upto(static_cast<std::int64_t>((n - 3 * k - 4) / 2));
      const std::string at = "sihe(" + std::to_string(n) + "," + std::to_string(k) + ")";
      std::optional<Instance> inst;
      try {
        inst = gen_sihe(n, k);
      } catch (const Error&) {
      }
      if ((m != 0) != inst.has_value()) {
        o.fail(at + ": legality mismatch");
        continue;
      }
      if (m == 0) continue;
      ++sihe_count;
      const RouteSet& rs = inst->routes;
      if (rs.num_sites() != n) o.fail(at + ": site count");
      for (std::size_t c = 0; c < k; ++c) {
        const Route& r = rs.carriers()[c].route;
        const std::size_t want = m * m - m + k - (c == 0 ? 1 : 0);
        if (r.period() != want) o.fail(at + ": period of c" + std::to_string(c));
        if (!is_simple(r)) o.fail(at + ": c" + std::to_string(c) + " not simple");
      }
      const MeetingGraph h = build_meeting_graph(rs);
      if (h.edges().size() != k - 1) o.fail(at + ": not a star");
      for (std::size_t i = 1; i < k; ++i) {
        const SiteId zi = *rs.find_site("z" + std::to_string(i));
        const MeetingEdge* e = h.edge(CarrierId(0), CarrierId(i));
        if (!e) {
          o.fail(at + ": c0 and c" + std::to_string(i) + " never meet");
          continue;
        }
        for (const auto& w : e->witnesses) {
          if (w.site != zi) o.fail(at + ": witness other than z" + std::to_string(i));
        }
      }
    }
  }
  o.detail = std::to_string(siho_count) + " siho and " + std::to_string(sihe_count) + " sihe parameter pairs";
  return o;
}

// Every route of length 1..max_len over n sites, as site-index vectors.
std::vector<std::vector<std::uint32_t>> all_routes(std::uint32_t n, std::size_t max_len) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::vector<std::uint32_t>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& r : layer) {
      for (std::uint32_t s = 0; s < n; ++s) {
        auto e = r;
        e.push_back(s);
        next.push_back(e);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

bool covers(std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& routes) {
  std::set<std::uint32_t> s;
  for (const auto& r : routes) s.insert(r.begin(), r.end());
  return s.size() == n;
}

Outcome criterion7() {
  Outcome o;
  std::size_t total = 0;
  std::size_t infeasible = 0;
  auto check = [&](std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& routes) {
    const RouteSet rs = RouteSet::from_routes(n, routes);
    const bool fast = is_feasible(rs);
    const bool exact = exact_feasible(rs);
    ++total;
    if (!exact) ++infeasible;
    if (fast != exact) {
      std::string desc;
      for (const auto& r : routes) {
        desc += " <";
        for (auto s : r) desc += std::to_string(s);
        desc += ">";
      }
      o.fail("n=" + std::to_string(n) + desc + ": is_feasible=" + std::to_string(fast));
    }
  };
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const auto routes = all_routes(n, 3);
    for (const auto& a : routes) {
      if (covers(n, {a})) check(n, {a});
      for (const auto& b : routes) {
        if (covers(n, {a, b})) check(n, {a, b});
      }
    }
  }
  const std::size_t exhaustive = total;
  std::mt19937_64 rng(77);
  for (int i = 0; i < 500; ++i) {
    const std::uint32_t n = 1 + rng() % 7;
    const std::size_t k = 1 + rng() % 4;
    std::vector<std::vector<std::uint32_t>> routes(k);
    for (auto& r : routes) {
      r.resize(1 + rng() % 5);
      for (auto& s : r) s = rng() % n;
    }
    std::set<std::uint32_t> present;
    for (const auto& r : routes) present.insert(r.begin(), r.end());
    for (std::uint32_t s = 0; s < n; ++s) {
      if (!present.count(s)) routes[rng() % k].push_back(s);
    }
    check(n, routes);
  }
  o.detail = std::to_string(exhaustive) + " enumerated + " + std::to_string(total - exhaustive) + " random, " +
             std::to_string(infeasible) + " infeasible";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& v : standard_anonymous_victims()) {
    for (std::size_t n = 3; n <= 8; ++n) {
      for (std::size_t k = 1; k <= 3; ++k) {
        ++count;
        if (!forge_thm1(v.factory, n, k).verdict) o.fail("forge_thm1 " + v.name + " n=" + std::to_string(n));
      }
    }
  }
  for (const auto& v : standard_id_victims()) {
    for (std::size_t n = 1; n <= 8; ++n) {
      for (std::size_t k = 1; k <= 3; ++k) {
        ++count;
        const ForgeResult r = forge_thm2(v.factory, n, k);
        if (!r.verdict || r.g_prime.num_sites() != n + 1) o.fail("forge_thm2 " + v.name + " n=" + std::to_string(n));
      }
    }
  }
  o.detail = std::to_string(count) + " forges over " +
             std::to_string(standard_anonymous_victims().size() + standard_id_victims().size()) + " victims";
  return o;
}

Outcome criterion9(const std::vector<Named>& runs) {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& inst : runs) {
    const RouteSet& rs = inst.routes;
    const MeetingGraph h = build_meeting_graph(rs);
    const std::uint64_t p = rs.max_period();
    const std::uint64_t b_prime = is_homogeneous(rs) ? p : p * p;
    for (std::size_t c = 0; c < rs.num_carriers(); ++c) {
      for (Time t0 = 0; t0 < p; ++t0) {
        ++checks;
        const auto seen = observed_while_riding(rs, CarrierId(c), t0, b_prime);
        for (CarrierId nb : h.neighbors(CarrierId(c))) {
          if (!seen.count(nb)) {
            o.fail(inst.label + " c" + std::to_string(c) + " t0=" + std::to_string(t0) + " misses c" +
                   std::to_string(nb.value));
          }
        }
      }
    }
  }
  o.detail = std::to_string(checks) + " (instance, carrier, t0) triples";
  return o;
}

}  // namespace

int main() {
  const std::vector<Named> runs = corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Hitch-a-ride halts with a concrete cover", [&] { return hitch_correct(runs, false); }},
      {"Hitch-a-ride moves <= (3k-2)B'", [&] { return hitch_correct(runs, true); }},
      {"Hitch-a-guessing-ride covers with moves < 12kP", [&] { return guess_correct(runs); }},
      {"thm3 lower bound audit", criterion4},
      {"thm4, thm7, thm8 lower bound audits", criterion5},
      {"SiHo and SiHe structure", criterion6},
      {"is_feasible agrees with exact_feasible", criterion7},
      {"impossibility forges fool every victim", criterion8},
      {"riding B' steps meets every meeting-graph neighbour", [&] { return criterion9(runs); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const double s = seconds([&] {
      try {
        o = criteria[i].second();
      } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
      }
    });
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu: %s [%s, %.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                with_failures(o).c_str(), s);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
