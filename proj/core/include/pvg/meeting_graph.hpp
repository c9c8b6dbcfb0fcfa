#pragma once

#include <cstdint>
#include <vector>

#include "pvg/route_set.hpp"

namespace pvg {

// One simultaneous presence of two carriers at a site. It repeats every
// `recurrence` = lcm(p(a), p(b)) time units.
struct MeetingWitness {
  SiteId site;
  Time phase;
  Time recurrence;

  friend bool operator==(const MeetingWitness&, const MeetingWitness&) = default;
};

struct MeetingEdge {
  CarrierId a;  // a < b
  CarrierId b;
  std::vector<MeetingWitness> witnesses;  // ascending phase
};

// H(G): carriers as nodes, an edge for each pair with at least one meeting.
class MeetingGraph {
 public:
  MeetingGraph(std::size_t num_carriers, std::vector<MeetingEdge> edges);

  std::size_t num_carriers() const { return adjacency_.size(); }
  const std::vector<MeetingEdge>& edges() const { return edges_; }

  bool adjacent(CarrierId a, CarrierId b) const;
  // Witnesses of the pair in either argument order; nullptr if they never meet.
  const MeetingEdge* edge(CarrierId a, CarrierId b) const;
  // Ascending.
  const std::vector<CarrierId>& neighbors(CarrierId c) const { return adjacency_.at(c.index()); }

  // Component label per carrier; labels are dense and ordered by smallest member.
  std::vector<std::size_t> components() const;

 private:
  std::vector<MeetingEdge> edges_;
  std::vector<std::vector<CarrierId>> adjacency_;
  std::vector<std::vector<std::size_t>> edge_index_;  // parallel to adjacency_
};

inline constexpr std::uint64_t kDefaultPairPhaseCap = std::uint64_t{1} << 32;

// Scans each pair over lcm(p(a), p(b)) phases. Throws
// Error(kPeriodProductTooLarge) if a pair's lcm exceeds `pair_phase_cap`.
MeetingGraph build_meeting_graph(const RouteSet& routes, std::uint64_t pair_phase_cap = kDefaultPairPhaseCap);

// True iff, for every carrier, the domains of its meeting-graph component
// cover the whole site universe.
bool is_feasible(const RouteSet& routes);
bool is_feasible(const RouteSet& routes, const MeetingGraph& graph);

}  // namespace pvg
