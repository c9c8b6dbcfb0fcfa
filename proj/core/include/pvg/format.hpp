#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pvg/route_set.hpp"

namespace pvg {

// Canonical line-based route-set format:
//
//   pvg 1
//   mode anonymous|ids
//   sites <n> <name>...
//   carrier <id> : <site> <site> ...
//
// Lines starting with '#' are comments. Two comment forms are read back:
// `# bound <v>` carries a known lower bound and `# start <carrier>` the
// carrier a lower-bound argument injects the agent on.
struct ParsedRouteSet {
  RouteSet routes;
  std::optional<std::uint64_t> bound;
  std::optional<CarrierId> start;
};

// Throws ParseError naming the offending line and column.
ParsedRouteSet parse_route_set(std::string_view text);

std::string write_route_set(const RouteSet& routes, std::optional<std::uint64_t> bound = std::nullopt,
                            std::optional<CarrierId> start = std::nullopt);

}  // namespace pvg
