#pragma once

// Feed-forward networks of paraconsistent analysis nodes (PANs). Each node
// has a mu and a lam port; a port is fed either by a constant or by a
// normalized output of an upstream node.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pal2v/core.hpp"

namespace pal2v {

/// The network is mis-wired: unknown node, unbound port, missing output.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NodeId {
  std::size_t value;
  auto operator<=>(const NodeId&) const = default;
};

class CycleError : public ConfigurationError {
 public:
  CycleError(const std::string& message, std::vector<NodeId> cycle)
      : ConfigurationError(message), cycle_(std::move(cycle)) {}

  /// Nodes along the cycle; the first node is repeated at the end.
  const std::vector<NodeId>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<NodeId> cycle_;
};

enum class Port { kMu, kLam };

/// Outputs that stay inside [0,1] and can therefore be wired as evidence.
enum class OutputField { kMuE, kMuECT, kMuER };

std::string_view field_name(OutputField field) noexcept;
std::optional<OutputField> parse_output_field(std::string_view name) noexcept;
double read_field(const AnalysisResult& result, OutputField field) noexcept;

struct NodeOutput {
  NodeId node;
  OutputField field = OutputField::kMuER;
  bool operator==(const NodeOutput&) const = default;
};

using PortSource = std::variant<double, NodeOutput>;

struct PanNode {
  NodeId id;
  std::string name;
  ControlFactor ftc;
  std::optional<PortSource> mu_source;
  std::optional<PortSource> lam_source;
};

/// A node's resolved inputs together with its outputs.
struct NodeEvaluation {
  EvidencePair input;
  AnalysisResult result;
};

using GraphEvaluation = std::map<NodeId, NodeEvaluation>;

class PanGraph {
 public:
  /// Adds a node with unbound ports. An empty name becomes "PAN<n>" (1-based).
  NodeId add_node(ControlFactor ftc = {}, std::string name = {});

  /// Binds a port, replacing any previous source. Constants must lie in [0,1].
  void bind(NodeId node, Port port, PortSource source);

  void set_output(NodeId node);
  /// The designated output, or the most recently added node when none was set.
  NodeId output() const;

  const PanNode& node(NodeId id) const;
  std::optional<NodeId> find(std::string_view name) const noexcept;
  const std::vector<PanNode>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Dependency order; ties are broken by ascending id. Throws CycleError.
  std::vector<NodeId> topological_order() const;

  /// One-shot evaluation in topological order.
  GraphEvaluation evaluate() const;

 private:
  void check_node(NodeId id) const;
  std::vector<NodeId> upstream(const PanNode& node) const;

  std::vector<PanNode> nodes_;
  std::optional<NodeId> output_;
};

}  // namespace pal2v
