#include "evoaut/wgraph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

namespace evoaut {

WeightedGraph::WeightedGraph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  const std::size_t n = labels_.size();
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n) {
    throw Error(ErrorKind::InvalidArgument, "vertex labels must be unique");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.src, a.dst) < std::tie(b.src, b.dst); });
  slot_.assign(n * n, -1);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.src >= n || e.dst >= n) throw Error(ErrorKind::UnknownVertex, "edge endpoint out of range");
    if (e.weight.is_zero()) {
      throw Error(ErrorKind::InvalidArgument, "edge " + labels_[e.src] + " -> " + labels_[e.dst] + " has zero weight");
    }
    if (e.weight.modulus() != edges_.front().weight.modulus()) {
      throw Error(ErrorKind::FieldMismatch, "edge weights from different fields");
    }
    long& s = slot_[e.src * n + e.dst];
    if (s >= 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "Condition (Sing) violated: two edges " + labels_[e.src] + " -> " + labels_[e.dst]);
    }
    s = static_cast<long>(k);
  }
}

std::optional<Scalar> WeightedGraph::weight(std::size_t u, std::size_t v) const {
  const long s = slot_[u * vertex_count() + v];
  if (s < 0) return std::nullopt;
  return edges_[static_cast<std::size_t>(s)].weight;
}

std::size_t WeightedGraph::out_degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) d += has_edge(u, v);
  return d;
}

std::size_t WeightedGraph::in_degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) d += has_edge(v, u);
  return d;
}

std::vector<std::size_t> WeightedGraph::out_neighbors(std::size_t u) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    if (has_edge(u, v)) out.push_back(v);
  }
  return out;
}

std::size_t WeightedGraph::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorKind::UnknownVertex, "no vertex named '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

bool WeightedGraph::satisfies_sing() const {
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].src == edges_[k - 1].src && edges_[k].dst == edges_[k - 1].dst) return false;
  }
  return true;
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.labels_ != b.labels_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t k = 0; k < a.edges_.size(); ++k) {
    const Edge& x = a.edges_[k];
    const Edge& y = b.edges_[k];
    if (x.src != y.src || x.dst != y.dst || !(x.weight == y.weight)) return false;
  }
  return true;
}

WeightedGraph algebra_to_wgraph(const EvolutionAlgebra& a) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (!a.omega(j, i).is_zero()) edges.push_back(Edge{i, j, a.omega(j, i)});
    }
  }
  WeightedGraph g(a.labels(), std::move(edges));
  if (!g.satisfies_sing()) invariant_failure("algebra graph violates Condition (Sing)");
  return g;
}

EvolutionAlgebra wgraph_to_algebra(const WeightedGraph& g, const FieldSpec& field) {
  const std::size_t n = g.vertex_count();
  Matrix m(field, n, n);
  for (const Edge& e : g.edges()) {
    if (!field.contains(e.weight)) {
      throw Error(ErrorKind::FieldMismatch, "weight " + e.weight.to_string() + " is not in " + field.to_string());
    }
    m(e.dst, e.src) = e.weight;
  }
  return EvolutionAlgebra(field, g.labels(), std::move(m));
}

std::vector<std::size_t> tree_of(const WeightedGraph& g, const std::vector<std::size_t>& seeds) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue;
  for (std::size_t s : seeds) {
    if (s >= g.vertex_count()) throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(s));
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : g.out_neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> tree_of(const WeightedGraph& g, const std::vector<std::string>& seeds) {
  std::vector<std::size_t> idx;
  for (const std::string& s : seeds) idx.push_back(g.index_of(s));
  return tree_of(g, idx);
}

bool is_graph_morphism(const WeightedGraph& g, const WeightedGraph& h, const Permutation& sigma) {
  const std::size_t n = g.vertex_count();
  if (h.vertex_count() != n || sigma.size() != n) return false;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (g.has_edge(u, v) != h.has_edge(sigma(u), sigma(v))) return false;
    }
  }
  return true;
}

namespace {

struct AutSearch {
  const WeightedGraph& g;
  std::vector<std::size_t> order;
  std::vector<std::tuple<std::size_t, std::size_t, bool>> invariant;
  std::vector<long> image;
  std::vector<bool> used;
  std::vector<GraphAutomorphism> found;

  bool consistent(std::size_t v, std::size_t w, std::size_t depth) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const std::size_t u = order[k];
      const auto su = static_cast<std::size_t>(image[u]);
      if (g.has_edge(u, v) != g.has_edge(su, w) || g.has_edge(v, u) != g.has_edge(w, su)) return false;
    }
    return true;
  }

  void run(std::size_t depth) {
    const std::size_t n = g.vertex_count();
    if (depth == n) {
      std::vector<std::size_t> word(n);
      for (std::size_t v = 0; v < n; ++v) word[v] = static_cast<std::size_t>(image[v]);
      found.push_back(GraphAutomorphism{Permutation(std::move(word))});
      return;
    }
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || invariant[w] != invariant[v] || !consistent(v, w, depth)) continue;
      image[v] = static_cast<long>(w);
      used[w] = true;
      run(depth + 1);
      used[w] = false;
      image[v] = -1;
    }
  }
};

}  // namespace

std::vector<GraphAutomorphism> enumerate_graph_automorphisms(const WeightedGraph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n > cap) {
    throw Error(ErrorKind::TooLarge, "graph has " + std::to_string(n) + " vertices, automorphism cap is " +
                                         std::to_string(cap));
  }
  AutSearch s{g, {}, {}, std::vector<long>(n, -1), std::vector<bool>(n, false), {}};
  for (std::size_t v = 0; v < n; ++v) {
    s.order.push_back(v);
    s.invariant.emplace_back(g.out_degree(v), g.in_degree(v), g.has_loop(v));
  }
  std::sort(s.order.begin(), s.order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(s.invariant[a], g.labels()[a]) < std::tie(s.invariant[b], g.labels()[b]);
  });
  s.run(0);
  std::sort(s.found.begin(), s.found.end(),
            [](const GraphAutomorphism& a, const GraphAutomorphism& b) { return a.sigma < b.sigma; });
  return s.found;
}

}  // namespace evoaut
