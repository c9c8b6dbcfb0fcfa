#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pvg {

// Global time. Carriers move once per unit; positions depend on t mod period.
using Time = std::uint64_t;

template <class Tag>
struct StrongId {
  std::uint32_t value = 0;

  constexpr StrongId() = default;
  template <std::integral T>
  constexpr explicit StrongId(T v) : value(static_cast<std::uint32_t>(v)) {}

  constexpr std::size_t index() const { return value; }
  friend constexpr auto operator<=>(StrongId, StrongId) = default;
};

struct SiteTag;
struct CarrierTag;
using SiteId = StrongId<SiteTag>;
using CarrierId = StrongId<CarrierTag>;

enum class Mode { kAnonymous, kWithIds };

std::string_view to_string(Mode mode);

// An ordered, cyclic sequence of sites. sites()[0] is the starting site.
class Route {
 public:
  explicit Route(std::vector<SiteId> sites);

  std::size_t period() const { return sites_.size(); }
  SiteId at(Time t) const { return sites_[t % sites_.size()]; }
  SiteId start() const { return sites_.front(); }
  std::span<const SiteId> sites() const { return sites_; }

  // Distinct sites, ascending.
  std::vector<SiteId> domain() const;

  friend bool operator==(const Route&, const Route&) = default;

 private:
  std::vector<SiteId> sites_;
};

struct Carrier {
  CarrierId id;
  std::string name;
  Route route;
};

struct CarrierSpec {
  std::string name;
  std::vector<SiteId> sites;
};

// The system description: k carriers with their routes over n sites.
// Immutable after construction. Carrier ids are dense indices in declaration
// order; names are the external identifiers used by the text format.
class RouteSet {
 public:
  // Throws Error(kInvalidArgument) on empty carriers, duplicate names or
  // out-of-range sites, and Error(kUnreachableSite) if a site of the
  // universe lies on no route.
  RouteSet(std::vector<std::string> site_names, std::vector<CarrierSpec> carriers, Mode mode);

  // Convenience constructor: sites named s0..s{n-1}, carriers c0..c{k-1}.
  static RouteSet from_routes(std::size_t num_sites,
                              const std::vector<std::vector<std::uint32_t>>& routes,
                              Mode mode = Mode::kAnonymous);

  std::size_t num_sites() const { return site_names_.size(); }
  std::size_t num_carriers() const { return carriers_.size(); }
  Mode mode() const { return mode_; }
  std::size_t max_period() const { return max_period_; }

  std::span<const Carrier> carriers() const { return carriers_; }
  const Carrier& carrier(CarrierId id) const { return carriers_.at(id.index()); }
  const std::string& site_name(SiteId id) const { return site_names_.at(id.index()); }
  std::span<const std::string> site_names() const { return site_names_; }

  std::optional<SiteId> find_site(std::string_view name) const;
  std::optional<CarrierId> find_carrier(std::string_view name) const;

  // Same routes, different observation mode.
  RouteSet with_mode(Mode mode) const;

  friend bool operator==(const RouteSet& a, const RouteSet& b) {
    return a.mode_ == b.mode_ && a.site_names_ == b.site_names_ && a.carriers_equal(b);
  }

 private:
  bool carriers_equal(const RouteSet& other) const;

  std::vector<std::string> site_names_;
  std::vector<Carrier> carriers_;
  Mode mode_;
  std::size_t max_period_ = 0;
};

inline SiteId position(const Carrier& carrier, Time t) { return carrier.route.at(t); }

// C(t, x): carriers located at x at time t, ascending by id.
std::vector<CarrierId> carriers_at(const RouteSet& routes, Time t, SiteId x);

// No self-loop and no directed edge activated at two distinct phases.
bool is_simple(const Route& route);

// Simple route whose edge set is a simple cycle or the closed traversal of a
// tree (every tree edge once in each direction).
bool is_irredundant(const Route& route);

bool is_homogeneous(const RouteSet& routes);

}  // namespace pvg

template <class Tag>
struct std::hash<pvg::StrongId<Tag>> {
  std::size_t operator()(pvg::StrongId<Tag> id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
