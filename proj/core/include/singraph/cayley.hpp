#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "singraph/graph.hpp"
#include "singraph/group.hpp"
#include "singraph/rng.hpp"

namespace singraph {

struct CayleyOptions {
  // Above this vertex count the graph stays an adjacency oracle: no edge
  // lists are materialized and edge walks stream translates.
  std::int64_t dense_cap = 5000;
};

// Cay(G, S): vertex i ~ vertex j iff g_i^-1 g_j in S. Degree |S|, loop-free,
// undirected by the symmetry of S.
class CayleyGraph {
 public:
  std::int64_t num_vertices() const { return group_->order(); }
  int degree() const { return static_cast<int>(conn_.size()); }
  std::int64_t num_edges() const { return num_vertices() * degree() / 2; }
  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  const std::vector<int>& connection() const { return conn_; }
  const CayleyOptions& options() const { return opt_; }

  bool adjacent(int i, int j) const {
    const int d = group_->op(group_->inverse(i), j);
    return in_conn_[d];
  }
  std::vector<int> neighbors(int i) const;

  // Streams each edge once (i < j).
  template <class F>
  void for_each_edge(F&& f) const {
    const std::int64_t n = num_vertices();
    for (int i = 0; i < n; ++i) {
      for (const int s : conn_) {
        const int j = group_->op(i, s);
        if (i < j) f(i, j);
      }
    }
  }

  bool dense() const { return num_vertices() <= opt_.dense_cap; }
  Graph materialize() const;  // CapExceeded above the dense cap

 private:
  friend CayleyGraph cayley_build(std::shared_ptr<const FiniteGroup>, std::vector<int>,
                                  CayleyOptions);
  CayleyGraph(std::shared_ptr<const FiniteGroup> g, std::vector<int> conn, CayleyOptions opt);

  std::shared_ptr<const FiniteGroup> group_;
  std::vector<int> conn_;
  std::vector<bool> in_conn_;
  CayleyOptions opt_;
};

// Validates the connection set: symmetric (AsymmetricSet) and identity-free
// (IdentityInSet).
CayleyGraph cayley_build(std::shared_ptr<const FiniteGroup> group, std::vector<int> connection,
                         CayleyOptions opt = {});

// Sing_n(R): x ~ y iff det(x + y) = 0, as the Cayley graph of SL_n(R) with
// connection set {s : det(I + s) = 0}.
CayleyGraph sing_graph(std::shared_ptr<const MatrixGroup> group, CayleyOptions opt = {});
// RG_{n,ell}(F_q): x ~ y iff rank(x + y) <= n - ell.
CayleyGraph rank_le_graph(std::shared_ptr<const MatrixGroup> group, int ell,
                          CayleyOptions opt = {});
// H(R) = Cay(R^2, {(x,y) : xy = 1}).
CayleyGraph hyperbola_graph(const Ring& r, CayleyOptions opt = {});

Graph induced_subgraph(const CayleyGraph& g, std::span<const int> subset);

ConnectivityReport connectivity_bipartiteness(const CayleyGraph& g);

// Streams all translate edges; the returned violation is the (i, j)-minimal
// one, so the result does not depend on the thread count.
std::optional<std::pair<int, int>> find_violating_edge(const CayleyGraph& g, const Coloring& c,
                                                       int threads = 1);

void write_dimacs(std::ostream& os, const CayleyGraph& g);

// Entrywise reduction Z/p^e -> Z/p^k (or F_p); BadArgument when the rings are
// not a quotient pair.
Matrix reduce_matrix(const Matrix& m, const Ring& to);

// Transport a proper coloring of Sing_n(R/a) to Sing_n(R) along the entrywise
// reduction: color(X) = base(pi(X)). The base coloring is re-verified on the
// quotient graph first (ImproperBase). Palette is unchanged.
Coloring lift_coloring(const MatrixGroup& target, const MatrixGroup& base_group,
                       const CayleyGraph& base_graph, const Coloring& base);

struct SampledLiftReport {
  std::int64_t samples = 0;
  std::int64_t violations = 0;
};

// Spot-check of the lifted coloring over rings too large to enumerate:
// random edges (X, X s) of Sing_2(R) are built from the membership oracle
// and the transported colors must differ.
SampledLiftReport verify_lift_sampled(const Ring& big_ring, const MatrixGroup& base_group,
                                      const CayleyGraph& base_graph, const Coloring& base,
                                      int samples, Rng& rng);

}  // namespace singraph
