#include "singraph/graph.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <unordered_map>

namespace singraph {

void Graph::add_edge(int u, int v) {
  if (u == v) throw BadArgumentError("loops are not allowed");
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
    throw UnknownVertexError("edge endpoint out of range");
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  finalized_ = false;
}

void Graph::finalize() {
  edges_ = 0;
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    edges_ += static_cast<std::int64_t>(nb.size());
  }
  edges_ /= 2;
  finalized_ = true;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<int> Graph::regular_degree() const {
  if (adj_.empty()) return std::nullopt;
  const int d = degree(0);
  for (int v = 1; v < num_vertices(); ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

ConnectivityReport connectivity_bipartiteness(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> side(n, -1);
  bool bipartite = true;
  int reached_from_zero = 0;
  std::queue<int> q;
  for (int start = 0; start < n; ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    q.push(start);
    int component = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const int v : g.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          ++component;
          q.push(v);
        } else if (side[v] == side[u]) {
          bipartite = false;
        }
      }
    }
    if (start == 0) reached_from_zero = component;
  }
  return {n == 0 || reached_from_zero == n, bipartite};
}

Coloring Coloring::from_raw(const std::vector<int>& raw, std::string scheme) {
  Coloring c;
  c.scheme = std::move(scheme);
  c.colors.reserve(raw.size());
  std::unordered_map<int, int> remap;
  for (const int id : raw) {
    auto [it, fresh] = remap.emplace(id, static_cast<int>(remap.size()));
    (void)fresh;
    c.colors.push_back(it->second);
  }
  c.palette = static_cast<int>(remap.size());
  return c;
}

std::optional<std::pair<int, int>> find_violating_edge(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.num_vertices())
    throw IncompleteColoringError("coloring size does not match vertex count");
  for (int u = 0; u < g.num_vertices(); ++u) {
    if (c.colors[u] < 0) throw IncompleteColoringError("uncolored vertex");
    for (const int v : g.neighbors(u)) {
      if (u < v && c.colors[u] == c.colors[v]) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

void write_dimacs(std::ostream& os, const Graph& g) {
  os << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
  for (int u = 0; u < g.num_vertices(); ++u)
    for (const int v : g.neighbors(u))
      if (u < v) os << "e " << u + 1 << " " << v + 1 << "\n";
}

void write_dimacs_coloring(std::ostream& os, const Coloring& c) {
  os << "c palette " << c.palette << " scheme " << c.scheme << "\n";
  for (std::size_t i = 0; i < c.colors.size(); ++i)
    os << "v " << i + 1 << " " << c.colors[i] + 1 << "\n";
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  g.finalize();
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  g.finalize();
  return g;
}

}  // namespace singraph
