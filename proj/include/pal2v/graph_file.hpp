#pragma once

// JSON description of a PAN network:
//
//   {
//     "nodes":    [ {"id": "PAN1", "ftc": 0.5}, ... ],
//     "bindings": [ {"node": "PAN1", "port": "mu",  "constant": 0.6},
//                   {"node": "PAN3", "port": "lam", "ref": {"node": "PAN1", "field": "muER"}} ],
//     "output":   "PAN4"
//   }
//
// "ftc" defaults to 0.5, "field" to "muER", and "output" to the last node.

#include <filesystem>

#include "json.hpp"
#include "pal2v/pan_graph.hpp"

namespace pal2v {

/// Throws ParseError for schema violations, ConfigurationError for unknown
/// node names and DomainError for out-of-range values.
PanGraph graph_from_json(const nlohmann::json& json);
PanGraph load_graph_file(const std::filesystem::path& path);

nlohmann::ordered_json graph_to_json(const PanGraph& graph);

}  // namespace pal2v
