#include "pvg/meeting_graph.hpp"

#include <algorithm>
#include <numeric>

#include "pvg/error.hpp"
#include "pvg/numeric.hpp"

namespace pvg {

MeetingGraph::MeetingGraph(std::size_t num_carriers, std::vector<MeetingEdge> edges)
    : edges_(std::move(edges)), adjacency_(num_carriers), edge_index_(num_carriers) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.b < e.a) std::swap(e.a, e.b);
    if (e.a == e.b) throw Error(ErrorCode::kInvalidArgument, "meeting graph has no self-loops");
    adjacency_.at(e.a.index()).push_back(e.b);
    edge_index_.at(e.a.index()).push_back(i);
    adjacency_.at(e.b.index()).push_back(e.a);
    edge_index_.at(e.b.index()).push_back(i);
  }
  for (std::size_t c = 0; c < adjacency_.size(); ++c) {
    std::vector<std::size_t> order(adjacency_[c].size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return adjacency_[c][x] < adjacency_[c][y]; });
    std::vector<CarrierId> adj;
    std::vector<std::size_t> idx;
    for (auto o : order) {
      adj.push_back(adjacency_[c][o]);
      idx.push_back(edge_index_[c][o]);
    }
    adjacency_[c] = std::move(adj);
    edge_index_[c] = std::move(idx);
  }
}

bool MeetingGraph::adjacent(CarrierId a, CarrierId b) const { return edge(a, b) != nullptr; }

const MeetingEdge* MeetingGraph::edge(CarrierId a, CarrierId b) const {
  const auto& adj = adjacency_.at(a.index());
  auto it = std::lower_bound(adj.begin(), adj.end(), b);
  if (it == adj.end() || *it != b) return nullptr;
  return &edges_[edge_index_[a.index()][static_cast<std::size_t>(it - adj.begin())]];
}

std::vector<std::size_t> MeetingGraph::components() const {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(adjacency_.size(), kUnset);
  std::size_t next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < adjacency_.size(); ++root) {
    if (label[root] != kUnset) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      auto c = stack.back();
      stack.pop_back();
      for (CarrierId d : adjacency_[c]) {
        if (label[d.index()] == kUnset) {
          label[d.index()] = next;
          stack.push_back(d.index());
        }
      }
    }
    ++next;
  }
  return label;
}

MeetingGraph build_meeting_graph(const RouteSet& routes, std::uint64_t pair_phase_cap) {
  const auto carriers = routes.carriers();
  std::vector<MeetingEdge> edges;
  for (std::size_t i = 0; i < carriers.size(); ++i) {
    for (std::size_t j = i + 1; j < carriers.size(); ++j) {
      const auto& a = carriers[i];
      const auto& b = carriers[j];
      auto l = checked_lcm(a.route.period(), b.route.period());
      if (!l || *l > pair_phase_cap) {
        throw Error(ErrorCode::kPeriodProductTooLarge,
                    "lcm of periods of '" + a.name + "' and '" + b.name + "' exceeds the pair phase cap");
      }
      MeetingEdge edge{a.id, b.id, {}};
      for (Time t = 0; t < *l; ++t) {
        SiteId x = position(a, t);
        if (x == position(b, t)) edge.witnesses.push_back({x, t, *l});
      }
      if (!edge.witnesses.empty()) edges.push_back(std::move(edge));
    }
  }
  return MeetingGraph(carriers.size(), std::move(edges));
}

bool is_feasible(const RouteSet& routes) { return is_feasible(routes, build_meeting_graph(routes)); }

bool is_feasible(const RouteSet& routes, const MeetingGraph& graph) {
  const auto label = graph.components();
  const std::size_t num_components = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<bool>> covered(num_components, std::vector<bool>(routes.num_sites(), false));
  for (const auto& c : routes.carriers()) {
    for (SiteId s : c.route.sites()) covered[label[c.id.index()]][s.index()] = true;
  }
  return std::all_of(covered.begin(), covered.end(),
                     [](const auto& cov) { return std::all_of(cov.begin(), cov.end(), [](bool b) { return b; }); });
}

}  // namespace pvg
