#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lfts/errors.hpp"

namespace lfts::train {

/// Static railway network: blocks, the points some of them host, and the
/// predefined routes with their point orientations.
struct Topology {
  std::vector<std::string> blocks;
  /// (block, point) entries in declaration order; a well-formed topology
  /// lists each block at most once.
  std::vector<std::pair<std::string, std::string>> points;
  /// route name -> ordered block sequence.
  std::map<std::string, std::vector<std::string>> routes;
  /// route name -> point name -> "directed" | "diverted".
  std::map<std::string, std::map<std::string, std::string>> orientations;

  bool has_block(std::string_view name) const;
  std::optional<std::string> point_at(std::string_view block) const;
  std::vector<std::string> point_names() const;
  /// Points hosted by the blocks of a route, in route order.
  std::vector<std::string> points_on_route(const std::string& route) const;

  const std::vector<std::string>& route_blocks(const std::string& route) const;
  const std::string& first_block(const std::string& route) const;
  const std::string& last_block(const std::string& route) const;
  /// Successor of `block` within `route`; nullopt at the last block.
  /// next is route-relative: a block shared by several routes may have a
  /// different successor in each.
  std::optional<std::string> next_block(const std::string& route,
                                        const std::string& block) const;
};

struct TopologyIssue {
  std::string location;
  std::string message;
};

struct TopologyVerdict {
  std::vector<TopologyIssue> issues;
  bool valid() const noexcept { return issues.empty(); }
  std::string to_string() const;
};

/// Check every structural rule of the network; all violations are
/// reported together, with their location.
TopologyVerdict validate_topology(const Topology& topology);

/// Parse the JSON document format (keys: blocks, points, routes,
/// orientations). Raises ParseError with position diagnostics on bad
/// input and ConfigError on structurally unusable documents; rule
/// violations are left to validate_topology.
Topology topology_from_json(const std::string& text);

}  // namespace lfts::train
