#include "wedge/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wedge {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 2) throw std::invalid_argument("WeightedGraph: need at least two vertices");
  if (edges_.empty()) throw std::invalid_argument("WeightedGraph: need at least one edge");

  std::vector<bool> covered(static_cast<std::size_t>(n_) + 1, false);
  std::set<std::pair<int, int>> seen;
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n_) throw std::invalid_argument("WeightedGraph: vertex index out of range");
    if (e.u == e.v) throw std::invalid_argument("WeightedGraph: loops are not allowed");
    if (e.w < 1) throw std::invalid_argument("WeightedGraph: weights must be >= 1");
    if (!seen.insert({e.u, e.v}).second) throw std::invalid_argument("WeightedGraph: duplicate edge");
    covered[static_cast<std::size_t>(e.u)] = covered[static_cast<std::size_t>(e.v)] = true;
  }
  for (int v = 1; v <= n_; ++v)
    if (!covered[static_cast<std::size_t>(v)])
      throw std::invalid_argument("WeightedGraph: isolated vertex x" + std::to_string(v));

  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
}

bool WeightedGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (const auto& e : edges_)
    if (e.u == u && e.v == v) return true;
  return false;
}

Exponent WeightedGraph::weight(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (const auto& e : edges_)
    if (e.u == u && e.v == v) return e.w;
  throw std::invalid_argument("WeightedGraph: no such edge");
}

WeightedGraph build_star(const std::vector<Exponent>& weights) {
  if (weights.empty()) throw std::invalid_argument("build_star: need at least one weight");
  const int n = static_cast<int>(weights.size()) + 1;
  std::vector<WeightedGraph::Edge> edges;
  for (int i = 1; i < n; ++i)
    edges.push_back({i, n, weights[static_cast<std::size_t>(i - 1)]});
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph build_path(const std::vector<Exponent>& weights) {
  if (weights.empty()) throw std::invalid_argument("build_path: need at least one weight");
  const int n = static_cast<int>(weights.size()) + 1;
  std::vector<WeightedGraph::Edge> edges;
  for (int i = 1; i < n; ++i)
    edges.push_back({i, i + 1, weights[static_cast<std::size_t>(i - 1)]});
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph build_cycle(const std::vector<Exponent>& weights) {
  if (weights.size() < 3) throw std::invalid_argument("build_cycle: need at least three weights");
  const int n = static_cast<int>(weights.size());
  std::vector<WeightedGraph::Edge> edges;
  for (int i = 1; i < n; ++i)
    edges.push_back({i, i + 1, weights[static_cast<std::size_t>(i - 1)]});
  edges.push_back({1, n, weights[static_cast<std::size_t>(n - 1)]});
  return WeightedGraph(n, std::move(edges));
}

MonomialIdeal edge_ideal(const WeightedGraph& g) {
  ContextPtr ctx = VariableContext::standard(g.vertex_count());
  std::vector<Monomial> gens;
  gens.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    ExponentVec exp = ExponentVec::Zero(g.vertex_count());
    exp(e.u - 1) = e.w;
    exp(e.v - 1) = e.w;
    gens.push_back(Monomial(ctx, std::move(exp)));
  }
  MonomialIdeal I = MonomialIdeal::make(ctx, std::move(gens));
  // Distinct edges of a simple graph give incomparable generators.
  if (I.num_gens() != g.edge_count())
    throw std::logic_error("edge_ideal: generators of a simple graph collapsed");
  return I;
}

MonomialIdeal edge_ideal_without(const WeightedGraph& g, const std::vector<int>& removed) {
  ContextPtr ctx = VariableContext::standard(g.vertex_count());
  std::vector<bool> gone(static_cast<std::size_t>(g.vertex_count()) + 1, false);
  for (int v : removed) {
    if (v < 1 || v > g.vertex_count())
      throw std::invalid_argument("edge_ideal_without: vertex index out of range");
    gone[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Monomial> gens;
  for (const auto& e : g.edges()) {
    if (gone[static_cast<std::size_t>(e.u)] || gone[static_cast<std::size_t>(e.v)]) continue;
    ExponentVec exp = ExponentVec::Zero(g.vertex_count());
    exp(e.u - 1) = e.w;
    exp(e.v - 1) = e.w;
    gens.push_back(Monomial(ctx, std::move(exp)));
  }
  return MonomialIdeal::make(ctx, std::move(gens));
}

VertexDeletion delete_vertices(const WeightedGraph& g, const std::vector<int>& vertices) {
  std::vector<bool> gone(static_cast<std::size_t>(g.vertex_count()) + 1, false);
  int gone_count = 0;
  for (int v : vertices) {
    if (v < 1 || v > g.vertex_count())
      throw std::invalid_argument("delete_vertices: vertex index out of range");
    if (!gone[static_cast<std::size_t>(v)]) ++gone_count;
    gone[static_cast<std::size_t>(v)] = true;
  }
  if (gone_count == g.vertex_count())
    throw std::invalid_argument("delete_vertices: cannot delete every vertex");

  std::vector<WeightedGraph::Edge> surviving;
  std::vector<bool> covered(static_cast<std::size_t>(g.vertex_count()) + 1, false);
  for (const auto& e : g.edges()) {
    if (gone[static_cast<std::size_t>(e.u)] || gone[static_cast<std::size_t>(e.v)]) continue;
    surviving.push_back(e);
    covered[static_cast<std::size_t>(e.u)] = covered[static_cast<std::size_t>(e.v)] = true;
  }

  VertexDeletion result;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (gone[static_cast<std::size_t>(v)]) continue;
    if (covered[static_cast<std::size_t>(v)])
      result.kept_vertices.push_back(v);
    else
      ++result.dropped_isolated;
  }
  if (surviving.empty()) return result;

  std::vector<int> new_label(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (std::size_t i = 0; i < result.kept_vertices.size(); ++i)
    new_label[static_cast<std::size_t>(result.kept_vertices[i])] = static_cast<int>(i) + 1;
  for (auto& e : surviving) {
    e.u = new_label[static_cast<std::size_t>(e.u)];
    e.v = new_label[static_cast<std::size_t>(e.v)];
  }
  result.graph = WeightedGraph(static_cast<int>(result.kept_vertices.size()), std::move(surviving));
  return result;
}

bool is_nontrivially_weighted(const WeightedGraph& g) {
  for (const auto& e : g.edges())
    if (e.w >= 2) return true;
  return false;
}

std::string graph_to_json(const WeightedGraph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"w", e.w}});
  return j.dump();
}

WeightedGraph graph_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (!j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph_from_json: need fields `n` and `edges`");
  std::vector<WeightedGraph::Edge> edges;
  for (const auto& je : j["edges"]) {
    WeightedGraph::Edge e;
    e.u = je.at("u").get<int>();
    e.v = je.at("v").get<int>();
    e.w = je.value("w", Exponent{1});
    edges.push_back(e);
  }
  return WeightedGraph(j["n"].get<int>(), std::move(edges));
}

}  // namespace wedge
