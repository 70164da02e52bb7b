#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singraph/cayley.hpp"
#include "singraph/graph.hpp"
#include "singraph/group.hpp"

namespace singraph {

// Coset of the upper-triangular subgroup B, i.e. the projective point of the
// first column: c != 0 maps to code(a c^-1) in [0, q), c = 0 maps to q.
int borel_coset_id(const Matrix& x);

// Theta: X = [[a,b],[c,d]] -> (B-coset, lambda(c), lambda(d)). Proper on
// Sing_2(F_q) with at most 8(q+1) colors since (0,0) cannot occur.
Coloring theta_coloring(const MatrixGroup& sl2);

enum class CosetVariant { Squares, FourthPowers };

// Coset coloring by B' = upper triangulars with diagonal in (F_q*)^k,
// k = 2 or 4. PreconditionFailed when -1 is a k-th power.
Coloring coset_coloring(const MatrixGroup& sl2, CosetVariant variant);

Coloring greedy_dsatur(const Graph& g);

struct SolveOptions {
  double budget_seconds = 60.0;
  int max_vertices = 300;
};

struct ChromaticResult {
  std::int64_t lower = 1;
  std::int64_t upper = 0;
  std::optional<std::int64_t> exact;
  std::vector<std::string> methods;
  bool budget_exhausted = false;
  std::optional<Coloring> certificate;
};

// Branch and bound over color classes, DSATUR vertex order, symmetry broken
// by pre-coloring a greedy clique. Returns the clique/DSATUR bracket when the
// budget runs out.
ChromaticResult exact_chromatic(const Graph& g, SolveOptions opt = {});

struct CliqueResult {
  std::int64_t size = 0;
  bool exact = false;
  std::vector<int> witness;
};

// Max clique by branch and bound with a greedy-coloring bound.
CliqueResult clique_number(const Graph& g, SolveOptions opt = {});

}  // namespace singraph
