#include "pvg/route_set.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>
#include <utility>

#include "pvg/error.hpp"

namespace pvg {

std::string_view to_string(Mode mode) { return mode == Mode::kAnonymous ? "anonymous" : "ids"; }

Route::Route(std::vector<SiteId> sites) : sites_(std::move(sites)) {
  if (sites_.empty()) throw Error(ErrorCode::kInvalidArgument, "route must contain at least one site");
}

std::vector<SiteId> Route::domain() const {
  std::vector<SiteId> d(sites_.begin(), sites_.end());
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

RouteSet::RouteSet(std::vector<std::string> site_names, std::vector<CarrierSpec> carriers, Mode mode)
    : site_names_(std::move(site_names)), mode_(mode) {
  if (carriers.empty()) throw Error(ErrorCode::kInvalidArgument, "a route set needs at least one carrier");
  if (site_names_.empty()) throw Error(ErrorCode::kInvalidArgument, "a route set needs at least one site");

  std::unordered_set<std::string> names;
  for (const auto& name : site_names_) {
    if (name.empty()) throw Error(ErrorCode::kInvalidArgument, "empty site name");
    if (!names.insert(name).second) throw Error(ErrorCode::kInvalidArgument, "duplicate site name '" + name + "'");
  }

  std::unordered_set<std::string> carrier_names;
  std::vector<bool> covered(site_names_.size(), false);
  carriers_.reserve(carriers.size());
  for (auto& spec : carriers) {
    if (!carrier_names.insert(spec.name).second)
      throw Error(ErrorCode::kInvalidArgument, "duplicate carrier id '" + spec.name + "'");
    for (SiteId s : spec.sites) {
      if (s.index() >= site_names_.size())
        throw Error(ErrorCode::kInvalidArgument,
                    "carrier '" + spec.name + "' references site index " + std::to_string(s.index()));
      covered[s.index()] = true;
    }
    CarrierId id{carriers_.size()};
    carriers_.push_back(Carrier{id, std::move(spec.name), Route(std::move(spec.sites))});
    max_period_ = std::max(max_period_, carriers_.back().route.period());
  }

  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (!covered[i]) throw Error(ErrorCode::kUnreachableSite, "site '" + site_names_[i] + "' lies on no route");
  }
}

RouteSet RouteSet::from_routes(std::size_t num_sites, const std::vector<std::vector<std::uint32_t>>& routes,
                               Mode mode) {
  std::vector<std::string> names;
  names.reserve(num_sites);
  for (std::size_t i = 0; i < num_sites; ++i) names.push_back("s" + std::to_string(i));
  std::vector<CarrierSpec> specs;
  specs.reserve(routes.size());
  for (std::size_t c = 0; c < routes.size(); ++c) {
    CarrierSpec spec{"c" + std::to_string(c), {}};
    for (auto s : routes[c]) spec.sites.emplace_back(s);
    specs.push_back(std::move(spec));
  }
  return RouteSet(std::move(names), std::move(specs), mode);
}

std::optional<SiteId> RouteSet::find_site(std::string_view name) const {
  for (std::size_t i = 0; i < site_names_.size(); ++i) {
    if (site_names_[i] == name) return SiteId{i};
  }
  return std::nullopt;
}

std::optional<CarrierId> RouteSet::find_carrier(std::string_view name) const {
  for (const auto& c : carriers_) {
    if (c.name == name) return c.id;
  }
  return std::nullopt;
}

RouteSet RouteSet::with_mode(Mode mode) const {
  RouteSet copy = *this;
  copy.mode_ = mode;
  return copy;
}

bool RouteSet::carriers_equal(const RouteSet& other) const {
  if (carriers_.size() != other.carriers_.size()) return false;
  for (std::size_t i = 0; i < carriers_.size(); ++i) {
    if (carriers_[i].name != other.carriers_[i].name || !(carriers_[i].route == other.carriers_[i].route))
      return false;
  }
  return true;
}

std::vector<CarrierId> carriers_at(const RouteSet& routes, Time t, SiteId x) {
  std::vector<CarrierId> out;
  for (const auto& c : routes.carriers()) {
    if (position(c, t) == x) out.push_back(c.id);
  }
  return out;
}

bool is_simple(const Route& route) {
  const auto sites = route.sites();
  const std::size_t p = sites.size();
  std::set<std::pair<SiteId, SiteId>> edges;
  for (std::size_t i = 0; i < p; ++i) {
    SiteId from = sites[i];
    SiteId to = sites[(i + 1) % p];
    if (from == to) return false;
    if (!edges.emplace(from, to).second) return false;
  }
  return true;
}

bool is_irredundant(const Route& route) {
  if (!is_simple(route)) return false;
  const auto sites = route.sites();
  const std::size_t p = sites.size();
  const std::size_t domain_size = route.domain().size();

  // Simple cycle: every site exactly once.
  if (domain_size == p) return p >= 2;

  // Closed tree traversal: each undirected edge is used exactly twice (once per
  // direction) and the undirected edges form a tree on the domain.
  std::map<std::pair<SiteId, SiteId>, int> undirected;
  for (std::size_t i = 0; i < p; ++i) {
    SiteId a = sites[i];
    SiteId b = sites[(i + 1) % p];
    if (b < a) std::swap(a, b);
    ++undirected[{a, b}];
  }
  for (const auto& [edge, uses] : undirected) {
    if (uses != 2) return false;
  }
  // The closed walk connects its domain, so |E| = |V| - 1 makes it a tree.
  return undirected.size() + 1 == domain_size && p == 2 * (domain_size - 1);
}

bool is_homogeneous(const RouteSet& routes) {
  const auto carriers = routes.carriers();
  return std::all_of(carriers.begin(), carriers.end(),
                     [&](const Carrier& c) { return c.route.period() == carriers.front().route.period(); });
}

}  // namespace pvg
