#pragma once

// Line-based text formats.
//
// Algebra file:
//   field F7            (or: field Q)
//   basis e1 e2 e3
//   sq e1 = 1*e1 + 2*e2 # omitted squares are zero
//
// Graph file (the field line is optional; --field supplies it otherwise):
//   vertices u1 u2
//   edge u1 -> u2 w=3/2
//
// Blank lines and text after '#' are ignored.

#include <optional>
#include <string>
#include <string_view>

#include "evoaut/algebra.hpp"
#include "evoaut/wgraph.hpp"

namespace evoaut {

struct ParsedGraph {
  std::optional<FieldSpec> field;
  WeightedGraph graph;
};

/// Parse errors carry "line L, column C" in the message.
EvolutionAlgebra parse_algebra_file(std::string_view text, std::size_t max_dim = kDefaultMaxDim);
ParsedGraph parse_graph_file(std::string_view text);

/// True when the first directive is "vertices" (after an optional field line).
bool looks_like_graph_file(std::string_view text);

/// Reads either format; graph files take their field from the header or from
/// `field_override`. A header that disagrees with the override is rejected.
EvolutionAlgebra load_algebra(std::string_view text, const std::optional<FieldSpec>& field_override,
                              std::size_t max_dim = kDefaultMaxDim);

std::string write_algebra_file(const EvolutionAlgebra& a);
std::string write_graph_file(const WeightedGraph& g, const FieldSpec& field);

/// "1,-1/2,3" in the given field.
Vector parse_vector(const FieldSpec& field, std::string_view text);
/// "(1, -1/2, 3)".
std::string format_vector(const Vector& v);

}  // namespace evoaut
