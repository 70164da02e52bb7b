#include <cstdio>
#include <vector>

#include "singraph/cayley.hpp"
#include "singraph/chromatic.hpp"

using namespace singraph;

// independent max-clique: triangle enumeration + extension by common-neighbor
// intersection, no pruning heuristics shared with the solver
int brute_omega(const Graph& g) {
  const int n = g.num_vertices();
  int best = n > 0 ? 1 : 0;
  if (g.num_edges() > 0) best = 2;
  // grow cliques level by level (k-clique lists)
  std::vector<std::vector<int>> cliques;  // each sorted ascending
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u))
      if (u < v) cliques.push_back({u, v});
  int k = 2;
  while (!cliques.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& c : cliques) {
      for (int w = c.back() + 1; w < n; ++w) {
        bool all = true;
        for (int x : c)
          if (!g.adjacent(x, w)) {
            all = false;
            break;
          }
        if (all) {
          auto ext = c;
          ext.push_back(w);
          next.push_back(std::move(ext));
        }
      }
    }
    if (next.empty()) break;
    ++k;
    best = k;
    cliques = std::move(next);
    std::printf("  %d-cliques: %zu\n", k, cliques.size());
    if (k >= 8) break;
  }
  return best;
}

int main() {
  for (long q : {3L, 5L, 7L, 9L, 11L, 13L}) {
    auto ring = q == 9 ? Ring::extension_field(3, 2) : Ring::prime_field(q);
    auto group = std::make_shared<const MatrixGroup>(ring, 2);
    auto g = sing_graph(group).materialize();
    std::printf("q=%ld (N=%d):\n", q, g.num_vertices());
    const int omega = brute_omega(g);
    SolveOptions opt;
    opt.max_vertices = 3000;
    opt.budget_seconds = 120;
    auto cl = clique_number(g, opt);
    std::printf("q=%ld brute omega=%d solver omega=%lld exact=%d\n", q, omega,
                (long long)cl.size, (int)cl.exact);
    if (q == 5) {
      // print a 4-clique witness and re-verify the adjacency definition
      for (std::size_t i = 0; i < cl.witness.size(); ++i) {
        std::printf("  w%zu = %s\n", i, group->element(cl.witness[i]).str().c_str());
      }
      for (std::size_t i = 0; i < cl.witness.size(); ++i)
        for (std::size_t j = i + 1; j < cl.witness.size(); ++j) {
          auto s = group->element(cl.witness[i]).add(group->element(cl.witness[j]));
          std::printf("  det(w%zu+w%zu) = %lld\n", i, j, (long long)s.det().code());
        }
    }
  }
  return 0;
}
