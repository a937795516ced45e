#pragma once

// Weighted directed graphs (E, w) under Condition (Sing) and their
// correspondence with evolution algebras: an edge i -> j of weight w
// records that e_j appears in e_i^2 with coefficient w.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evoaut/algebra.hpp"
#include "evoaut/permutation.hpp"
#include "evoaut/scalar.hpp"

namespace evoaut {

inline constexpr std::size_t kDefaultGraphAutCap = 12;

struct Edge {
  std::size_t src;
  std::size_t dst;
  Scalar weight;
};

class WeightedGraph {
 public:
  /// Rejects parallel edges (Condition (Sing)), zero weights, and weights
  /// from different fields.
  WeightedGraph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Sorted by (src, dst).
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(std::size_t u, std::size_t v) const { return slot_[u * vertex_count() + v] >= 0; }
  std::optional<Scalar> weight(std::size_t u, std::size_t v) const;
  std::size_t out_degree(std::size_t u) const;
  std::size_t in_degree(std::size_t u) const;
  bool has_loop(std::size_t u) const { return has_edge(u, u); }
  std::vector<std::size_t> out_neighbors(std::size_t u) const;

  /// Throws UnknownVertex.
  std::size_t index_of(const std::string& label) const;

  bool satisfies_sing() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<long> slot_;  // n x n, index into edges_ or -1
};

/// A vertex permutation preserving adjacency; weights are ignored.
struct GraphAutomorphism {
  Permutation sigma;
  friend bool operator==(const GraphAutomorphism&, const GraphAutomorphism&) = default;
};

WeightedGraph algebra_to_wgraph(const EvolutionAlgebra& a);
/// Throws FieldMismatch when a weight lies outside `field`.
EvolutionAlgebra wgraph_to_algebra(const WeightedGraph& g, const FieldSpec& field);

/// Vertices reachable from `seeds` (seeds included), sorted.
std::vector<std::size_t> tree_of(const WeightedGraph& g, const std::vector<std::size_t>& seeds);
std::vector<std::size_t> tree_of(const WeightedGraph& g, const std::vector<std::string>& seeds);

/// (u,v) in E(g) iff (sigma(u), sigma(v)) in E(h), ignoring weights.
bool is_graph_morphism(const WeightedGraph& g, const WeightedGraph& h, const Permutation& sigma);

/// All adjacency-preserving permutations, sorted by image word (identity first).
std::vector<GraphAutomorphism> enumerate_graph_automorphisms(const WeightedGraph& g,
                                                             std::size_t cap = kDefaultGraphAutCap);

}  // namespace evoaut
