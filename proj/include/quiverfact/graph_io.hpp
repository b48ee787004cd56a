#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "quiverfact/pathsum.hpp"
#include "quiverfact/quiver.hpp"

namespace qf {

/// Contents of a graph file.
///
///     {
///       "vertices": ["1", "2"],
///       "edges": [["1", "2"], ["2", "1"]],
///       "labels": {"1,2": "a"},
///       "dims": {"1": 2},
///       "weights": {"1,2": [[0.1, [0.0, 0.2]]], "2,1": [[0.3], [0.1]]},
///       "scalar_weights": {"1,2": [0, 1, 1]}
///     }
///
/// Only `vertices` and `edges` are required. Names may be given as strings
/// or integers. Matrix entries are numbers or [re, im] pairs; a bare number
/// is a 1x1 matrix. `scalar_weights` are ascending polynomial coefficients
/// in z (integers or "p/q" strings).
struct GraphFile {
    Quiver quiver;
    EdgeWeights scalar_weights;
    std::optional<WeightedQuiver> weighted; // present iff `weights` was given
};

/// Throws ParseError (with byte offset) on malformed JSON and
/// InvalidArgument naming the offending vertex or edge otherwise.
GraphFile parse_graph_json(std::string_view text);
GraphFile load_graph_file(const std::string& path);

/// `vertices`, `edges` and `labels` of q as an indented JSON document.
std::string graph_to_json(const Quiver& q);

}  // namespace qf
