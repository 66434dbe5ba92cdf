#include "lfts/train/topology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace lfts::train {

bool Topology::has_block(std::string_view name) const {
  return std::find(blocks.begin(), blocks.end(), name) != blocks.end();
}

std::optional<std::string> Topology::point_at(std::string_view block) const {
  for (const auto& [b, p] : points) {
    if (b == block) return p;
  }
  return std::nullopt;
}

std::vector<std::string> Topology::point_names() const {
  std::vector<std::string> names;
  for (const auto& [b, p] : points) {
    if (std::find(names.begin(), names.end(), p) == names.end()) {
      names.push_back(p);
    }
  }
  return names;
}

std::vector<std::string> Topology::points_on_route(
    const std::string& route) const {
  std::vector<std::string> names;
  for (const auto& block : route_blocks(route)) {
    if (auto p = point_at(block)) names.push_back(*p);
  }
  return names;
}

const std::vector<std::string>& Topology::route_blocks(
    const std::string& route) const {
  auto it = routes.find(route);
  if (it == routes.end()) {
    throw DomainError("unknown route '" + route + "'");
  }
  return it->second;
}

const std::string& Topology::first_block(const std::string& route) const {
  return route_blocks(route).front();
}

const std::string& Topology::last_block(const std::string& route) const {
  return route_blocks(route).back();
}

std::optional<std::string> Topology::next_block(const std::string& route,
                                                const std::string& block) const {
  const auto& sequence = route_blocks(route);
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    if (sequence[i] == block) return sequence[i + 1];
  }
  return std::nullopt;
}

std::string TopologyVerdict::to_string() const {
  if (valid()) return "valid";
  std::ostringstream out;
  for (const auto& issue : issues) {
    out << issue.location << ": " << issue.message << '\n';
  }
  return out.str();
}

TopologyVerdict validate_topology(const Topology& topology) {
  TopologyVerdict verdict;
  auto report = [&](std::string location, std::string message) {
    verdict.issues.push_back({std::move(location), std::move(message)});
  };

  std::set<std::string> block_set;
  for (const auto& b : topology.blocks) {
    if (!block_set.insert(b).second) {
      report("block " + b, "declared more than once");
    }
  }

  std::set<std::string> pointed_blocks;
  for (const auto& [b, p] : topology.points) {
    if (!block_set.count(b)) {
      report("point " + p, "attached to undeclared block '" + b + "'");
    }
    if (!pointed_blocks.insert(b).second) {
      report("block " + b, "hosts more than one point");
    }
  }

  for (const auto& [name, sequence] : topology.routes) {
    const std::string where = "route " + name;
    if (sequence.empty()) {
      report(where, "has no blocks");
      continue;
    }
    if (sequence.size() < 2) {
      report(where, "first and last block must differ; a route needs at "
                    "least two blocks");
    }
    std::set<std::string> seen;
    for (const auto& b : sequence) {
      if (!block_set.count(b)) {
        report(where, "references undeclared block '" + b + "'");
      }
      if (!seen.insert(b).second) {
        report(where, "lists block '" + b + "' twice");
      }
    }
  }

  // orientations(r) must be defined exactly on the points hosted by r.
  for (const auto& [name, sequence] : topology.routes) {
    const std::string where = "route " + name;
    std::set<std::string> hosted;
    for (const auto& b : sequence) {
      if (auto p = topology.point_at(b)) hosted.insert(*p);
    }
    std::set<std::string> declared;
    if (auto it = topology.orientations.find(name);
        it != topology.orientations.end()) {
      for (const auto& [p, dir] : it->second) {
        declared.insert(p);
        if (dir != "directed" && dir != "diverted") {
          report(where, "orientation of point '" + p +
                            "' must be directed or diverted, got '" + dir + "'");
        }
      }
    }
    for (const auto& p : hosted) {
      if (!declared.count(p)) {
        report(where, "missing orientation for point '" + p + "'");
      }
    }
    for (const auto& p : declared) {
      if (!hosted.count(p)) {
        report(where, "orientation for point '" + p +
                          "' which is not on the route");
      }
    }
  }

  for (const auto& [name, pts] : topology.orientations) {
    if (!topology.routes.count(name)) {
      report("route " + name, "orientations given for undeclared route");
    }
  }

  return verdict;
}

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Topology topology_from_json(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) {
    throw ConfigError("topology document must be a JSON object");
  }
  Topology topology;
  try {
    if (doc.contains("blocks")) {
      topology.blocks = doc.at("blocks").get<std::vector<std::string>>();
    }
    if (doc.contains("points")) {
      for (const auto& [block, point] : doc.at("points").items()) {
        topology.points.emplace_back(block, point.get<std::string>());
      }
    }
    if (doc.contains("routes")) {
      for (const auto& [name, sequence] : doc.at("routes").items()) {
        topology.routes[name] = sequence.get<std::vector<std::string>>();
      }
    }
    if (doc.contains("orientations")) {
      for (const auto& [name, pts] : doc.at("orientations").items()) {
        for (const auto& [point, dir] : pts.items()) {
          topology.orientations[name][point] = dir.get<std::string>();
        }
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad topology document: ") + e.what());
  }
  return topology;
}

}  // namespace lfts::train
