#pragma once

#include "wedge/ideal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wedge {

/// Simple edge-weighted graph. Vertices are 1-based, edges are stored with
/// u < v, every vertex is covered by some edge and all weights are >= 1.
class WeightedGraph {
public:
  struct Edge {
    int u = 0;
    int v = 0;
    Exponent w = 1;
  };

  WeightedGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const;
  Exponent weight(int u, int v) const;

private:
  int n_;
  std::vector<Edge> edges_;
};

/// Star with center x_n; leaf i is joined to the center with weight w[i-1].
WeightedGraph build_star(const std::vector<Exponent>& weights);
/// Path x_1 - x_2 - ... - x_n with edge e_i = {x_i, x_{i+1}} of weight w[i-1].
WeightedGraph build_path(const std::vector<Exponent>& weights);
/// Cycle on n = |weights| vertices, closing x_n - x_1.
WeightedGraph build_cycle(const std::vector<Exponent>& weights);

/// One generator (x_u x_v)^w per edge, in the standard n-variable context.
MonomialIdeal edge_ideal(const WeightedGraph& g);

/// Edge ideal of the induced subgraph on V \ removed, kept in the ambient
/// n-variable context (no renumbering). Useful for colon identities.
MonomialIdeal edge_ideal_without(const WeightedGraph& g, const std::vector<int>& removed);

struct VertexDeletion {
  /// Induced subgraph, renumbered order-preserving; empty when no edges remain.
  std::optional<WeightedGraph> graph;
  /// Vertices that became isolated and were dropped (callers adjust depth
  /// by one free variable each).
  int dropped_isolated = 0;
  /// Original labels of the surviving vertices, in renumbered order.
  std::vector<int> kept_vertices;
};

VertexDeletion delete_vertices(const WeightedGraph& g, const std::vector<int>& vertices);

bool is_nontrivially_weighted(const WeightedGraph& g);

/// `{"n":5,"edges":[{"u":1,"v":2,"w":2},...]}`
std::string graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const std::string& json_text);

}  // namespace wedge
