#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singraph/errors.hpp"

namespace singraph {

// Plain undirected graph with adjacency lists. finalize() sorts and dedups;
// queries require a finalized graph.
class Graph {
 public:
  explicit Graph(int n) : adj_(n) {}

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::int64_t num_edges() const { return edges_; }
  void add_edge(int u, int v);
  void finalize();
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;
  // Degree shared by all vertices, or nullopt.
  std::optional<int> regular_degree() const;

 private:
  std::vector<std::vector<int>> adj_;
  std::int64_t edges_ = 0;
  bool finalized_ = false;
};

struct ConnectivityReport {
  bool connected;
  bool bipartite;
};

ConnectivityReport connectivity_bipartiteness(const Graph& g);

// Vertex -> color id map. Ids are densified in first-use order at
// construction, so palette == number of distinct colors == max id + 1.
struct Coloring {
  std::vector<int> colors;
  int palette = 0;
  std::string scheme;

  static Coloring from_raw(const std::vector<int>& raw, std::string scheme);
};

// First monochromatic edge (u, v) or nullopt when the coloring is proper.
// IncompleteColoring when sizes mismatch or a vertex has no color.
std::optional<std::pair<int, int>> find_violating_edge(const Graph& g, const Coloring& c);

void write_dimacs(std::ostream& os, const Graph& g);
// DIMACS-style solution lines: one "v <vertex> <color>" per vertex, 1-based.
void write_dimacs_coloring(std::ostream& os, const Coloring& c);

Graph complete_graph(int n);
Graph cycle_graph(int n);

}  // namespace singraph
