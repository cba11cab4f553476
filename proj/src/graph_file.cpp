#include "pal2v/graph_file.hpp"

#include <fstream>

#include <fmt/format.h>

#include "pal2v/delay.hpp"

namespace pal2v {
namespace {

const nlohmann::json& member(const nlohmann::json& object, const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) throw ParseError(fmt::format("missing field '{}'", key));
  return *it;
}

std::string string_member(const nlohmann::json& object, const char* key) {
  const auto& value = member(object, key);
  if (!value.is_string()) throw ParseError(fmt::format("field '{}' must be a string", key));
  return value.get<std::string>();
}

NodeId lookup(const PanGraph& graph, const std::string& name) {
  if (const auto id = graph.find(name)) return *id;
  throw ConfigurationError(fmt::format("unknown node '{}'", name));
}

}  // namespace

PanGraph graph_from_json(const nlohmann::json& json) {
  if (!json.is_object()) throw ParseError("graph description must be a JSON object");
  const auto& nodes = member(json, "nodes");
  if (!nodes.is_array()) throw ParseError("'nodes' must be an array");

  PanGraph graph;
  for (const auto& entry : nodes) {
    if (!entry.is_object()) throw ParseError("each node must be an object");
    double ftc = ControlFactor::kDefault;
    if (const auto it = entry.find("ftc"); it != entry.end()) {
      if (!it->is_number()) throw ParseError("'ftc' must be a number");
      ftc = it->get<double>();
    }
    const std::string id = string_member(entry, "id");
    if (id.empty()) throw ParseError("node id must not be empty");
    graph.add_node(ControlFactor(ftc), id);
  }

  if (const auto it = json.find("bindings"); it != json.end()) {
    if (!it->is_array()) throw ParseError("'bindings' must be an array");
    for (const auto& binding : *it) {
      if (!binding.is_object()) throw ParseError("each binding must be an object");
      const NodeId node = lookup(graph, string_member(binding, "node"));
      const std::string port_name = string_member(binding, "port");
      if (port_name != "mu" && port_name != "lam") {
        throw ParseError(fmt::format("port must be 'mu' or 'lam' (got '{}')", port_name));
      }
      const Port port = port_name == "mu" ? Port::kMu : Port::kLam;

      const bool has_constant = binding.contains("constant");
      const bool has_ref = binding.contains("ref");
      if (has_constant == has_ref) {
        throw ParseError("a binding needs exactly one of 'constant' or 'ref'");
      }
      if (has_constant) {
        const auto& value = binding["constant"];
        if (!value.is_number()) throw ParseError("'constant' must be a number");
        graph.bind(node, port, value.get<double>());
        continue;
      }
      const auto& ref = binding["ref"];
      if (!ref.is_object()) throw ParseError("'ref' must be an object");
      OutputField field = OutputField::kMuER;
      if (ref.contains("field")) {
        const auto parsed = parse_output_field(string_member(ref, "field"));
        if (!parsed) throw ParseError("'field' must be one of muE, muECT, muER");
        field = *parsed;
      }
      graph.bind(node, port, NodeOutput{lookup(graph, string_member(ref, "node")), field});
    }
  }

  if (json.contains("output")) graph.set_output(lookup(graph, string_member(json, "output")));
  return graph;
}

PanGraph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open graph file '{}'", path.string()));
  nlohmann::json json;
  try {
    in >> json;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(fmt::format("graph file '{}': {}", path.string(), e.what()));
  }
  return graph_from_json(json);
}

nlohmann::ordered_json graph_to_json(const PanGraph& graph) {
  nlohmann::ordered_json out;
  out["nodes"] = nlohmann::ordered_json::array();
  out["bindings"] = nlohmann::ordered_json::array();
  for (const auto& node : graph.nodes()) {
    out["nodes"].push_back({{"id", node.name}, {"ftc", node.ftc.value()}});
    for (const auto& [port, source] : {std::pair{"mu", node.mu_source}, {"lam", node.lam_source}}) {
      if (!source) continue;
      nlohmann::ordered_json binding{{"node", node.name}, {"port", port}};
      if (const auto* constant = std::get_if<double>(&*source)) {
        binding["constant"] = *constant;
      } else {
        const auto& ref = std::get<NodeOutput>(*source);
        binding["ref"] = {{"node", graph.node(ref.node).name}, {"field", field_name(ref.field)}};
      }
      out["bindings"].push_back(std::move(binding));
    }
  }
  if (!graph.nodes().empty()) out["output"] = graph.node(graph.output()).name;
  return out;
}

}  // namespace pal2v
