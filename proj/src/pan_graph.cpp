#include "pal2v/pan_graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include <fmt/format.h>

namespace pal2v {

std::string_view field_name(OutputField field) noexcept {
  switch (field) {
    case OutputField::kMuE: return "muE";
    case OutputField::kMuECT: return "muECT";
    case OutputField::kMuER: return "muER";
  }
  return "muER";
}

std::optional<OutputField> parse_output_field(std::string_view name) noexcept {
  for (OutputField field : {OutputField::kMuE, OutputField::kMuECT, OutputField::kMuER}) {
    if (field_name(field) == name) return field;
  }
  return std::nullopt;
}

double read_field(const AnalysisResult& result, OutputField field) noexcept {
  switch (field) {
    case OutputField::kMuE: return result.evidence;
    case OutputField::kMuECT: return result.contradiction_evidence;
    case OutputField::kMuER: return result.real_evidence;
  }
  return result.real_evidence;
}

NodeId PanGraph::add_node(ControlFactor ftc, std::string name) {
  const NodeId id{nodes_.size()};
  if (name.empty()) name = fmt::format("PAN{}", id.value + 1);
  if (find(name)) throw ConfigurationError(fmt::format("duplicate node name '{}'", name));
  nodes_.push_back(PanNode{id, std::move(name), ftc, std::nullopt, std::nullopt});
  return id;
}

void PanGraph::check_node(NodeId id) const {
  if (id.value >= nodes_.size()) {
    throw ConfigurationError(fmt::format("unknown node id {}", id.value));
  }
}

void PanGraph::bind(NodeId node, Port port, PortSource source) {
  check_node(node);
  if (const auto* constant = std::get_if<double>(&source)) {
    require_in_range(*constant, 0.0, 1.0, port == Port::kMu ? "mu constant" : "lam constant");
  } else {
    check_node(std::get<NodeOutput>(source).node);
  }
  auto& target = nodes_[node.value];
  (port == Port::kMu ? target.mu_source : target.lam_source) = source;
}

void PanGraph::set_output(NodeId node) {
  check_node(node);
  output_ = node;
}

NodeId PanGraph::output() const {
  if (output_) return *output_;
  if (nodes_.empty()) throw ConfigurationError("graph has no nodes");
  return nodes_.back().id;
}

const PanNode& PanGraph::node(NodeId id) const {
  check_node(id);
  return nodes_[id.value];
}

std::optional<NodeId> PanGraph::find(std::string_view name) const noexcept {
  for (const auto& node : nodes_) {
    if (node.name == name) return node.id;
  }
  return std::nullopt;
}

std::vector<NodeId> PanGraph::upstream(const PanNode& node) const {
  std::vector<NodeId> deps;
  for (const auto& source : {node.mu_source, node.lam_source}) {
    if (!source) continue;
    if (const auto* ref = std::get_if<NodeOutput>(&*source)) deps.push_back(ref->node);
  }
  return deps;
}

std::vector<NodeId> PanGraph::topological_order() const {
  const std::size_t n = nodes_.size();
  std::vector<std::size_t> pending(n, 0);
  std::vector<std::vector<std::size_t>> downstream(n);
  for (const auto& node : nodes_) {
    for (NodeId dep : upstream(node)) {
      ++pending[node.id.value];
      downstream[dep.value].push_back(node.id.value);
    }
  }

  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (pending[i] == 0) ready.push(i);
  }
  std::vector<NodeId> order;
  order.reserve(n);
  while (!ready.empty()) {
    const std::size_t current = ready.top();
    ready.pop();
    order.push_back(NodeId{current});
    for (std::size_t next : downstream[current]) {
      if (--pending[next] == 0) ready.push(next);
    }
  }
  if (order.size() == n) return order;

  // Every node left with pending inputs lies on or behind a cycle. Walking
  // upstream through such nodes must revisit one of them.
  std::size_t start = 0;
  while (pending[start] == 0) ++start;
  std::vector<std::size_t> seen_at(n, n);
  std::vector<NodeId> path;
  std::size_t current = start;
  while (seen_at[current] == n) {
    seen_at[current] = path.size();
    path.push_back(NodeId{current});
    for (NodeId dep : upstream(nodes_[current])) {
      if (pending[dep.value] != 0) {
        current = dep.value;
        break;
      }
    }
  }
  // path runs against the edges; reverse it so it reads in data-flow order.
  std::vector<NodeId> cycle(path.begin() + static_cast<std::ptrdiff_t>(seen_at[current]), path.end());
  std::reverse(cycle.begin(), cycle.end());
  cycle.push_back(cycle.front());

  std::string listing;
  for (NodeId id : cycle) {
    if (!listing.empty()) listing += " -> ";
    listing += nodes_[id.value].name;
  }
  throw CycleError(fmt::format("cycle detected: {}", listing), std::move(cycle));
}

GraphEvaluation PanGraph::evaluate() const {
  for (const auto& node : nodes_) {
    if (!node.mu_source || !node.lam_source) {
      throw ConfigurationError(fmt::format("node '{}' has an unbound {} port", node.name,
                                           node.mu_source ? "lam" : "mu"));
    }
  }

  GraphEvaluation results;
  auto resolve = [&results](const PortSource& source) {
    if (const auto* constant = std::get_if<double>(&source)) return *constant;
    const auto& ref = std::get<NodeOutput>(source);
    return read_field(results.at(ref.node).result, ref.field);
  };
  for (NodeId id : topological_order()) {
    const PanNode& node = nodes_[id.value];
    const EvidencePair input(resolve(*node.mu_source), resolve(*node.lam_source));
    results.emplace(id, NodeEvaluation{input, analyze(input, node.ftc)});
  }
  return results;
}

}  // namespace pal2v
