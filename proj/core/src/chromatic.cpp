#include "singraph/chromatic.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace singraph {

int borel_coset_id(const Matrix& x) {
  const Ring& R = x.ring();
  const RingElement a = x.at(0, 0), c = x.at(1, 0);
  if (c == R.zero()) return static_cast<int>(R.size());
  return static_cast<int>(R.mul(a, R.inverse(c)).code());
}

Coloring theta_coloring(const MatrixGroup& sl2) {
  const Ring& R = sl2.ring();
  if (!R.is_field() || sl2.dim() != 2 || R.characteristic() == 2)
    throw BadArgumentError("theta coloring is over SL_2(F_q), q odd");
  std::vector<int> raw;
  raw.reserve(sl2.order());
  for (const Matrix& x : sl2.elements()) {
    const int coset = borel_coset_id(x);
    const int lc = R.sign_lambda(x.at(1, 0));
    const int ld = R.sign_lambda(x.at(1, 1));
    raw.push_back(coset * 9 + (lc + 1) * 3 + (ld + 1));
  }
  return Coloring::from_raw(raw, "theta");
}

Coloring coset_coloring(const MatrixGroup& sl2, CosetVariant variant) {
  const Ring& R = sl2.ring();
  if (!R.is_field() || sl2.dim() != 2 || R.characteristic() == 2)
    throw BadArgumentError("coset coloring is over SL_2(F_q), q odd");
  const int k = variant == CosetVariant::Squares ? 2 : 4;
  const std::int64_t q = R.size();
  const RingElement minus_one = R.neg(R.one());
  for (std::int64_t code = 1; code < q; ++code) {
    if (R.pow(R.element(code), k) == minus_one)
      throw PreconditionFailedError("-1 is a " + std::to_string(k) + "-th power in " + R.name());
  }

  // class of a unit in F_q*/(F_q*)^k via discrete log on the generator
  const std::int64_t g = std::gcd<std::int64_t>(k, q - 1);
  std::vector<int> dlog(q, -1);
  {
    RingElement pow = R.one();
    const RingElement nu = R.multiplicative_generator();
    for (std::int64_t i = 0; i < q - 1; ++i) {
      dlog[pow.code()] = static_cast<int>(i);
      pow = R.mul(pow, nu);
    }
  }
  auto unit_class = [&](RingElement x) { return static_cast<int>(dlog[x.code()] % g); };

  std::vector<int> raw;
  raw.reserve(sl2.order());
  for (const Matrix& x : sl2.elements()) {
    const RingElement a = x.at(0, 0), c = x.at(1, 0);
    const int point = borel_coset_id(x);
    const RingElement scalar = c == R.zero() ? a : c;
    raw.push_back(point * static_cast<int>(g) + unit_class(scalar));
  }
  const char* name = variant == CosetVariant::Squares ? "coset-squares" : "coset-fourth-powers";
  return Coloring::from_raw(raw, name);
}

namespace {

// saturation = number of distinct colors among colored neighbors
int pick_dsatur_vertex(const Graph& g, const std::vector<int>& colors,
                       const std::vector<int>& sat) {
  int best = -1;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (colors[v] >= 0) continue;
    if (best < 0 || sat[v] > sat[best] ||
        (sat[v] == sat[best] && g.degree(v) > g.degree(best))) {
      best = v;
    }
  }
  return best;
}

}  // namespace

Coloring greedy_dsatur(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> colors(n, -1);
  std::vector<std::vector<char>> seen(n);  // seen[v][c] = neighbor of v has color c
  std::vector<int> sat(n, 0);
  int used = 0;
  for (int step = 0; step < n; ++step) {
    const int v = pick_dsatur_vertex(g, colors, sat);
    int c = 0;
    while (c < static_cast<int>(seen[v].size()) && seen[v][c]) ++c;
    colors[v] = c;
    used = std::max(used, c + 1);
    for (const int u : g.neighbors(v)) {
      if (static_cast<int>(seen[u].size()) <= c) seen[u].resize(c + 1, 0);
      if (!seen[u][c]) {
        seen[u][c] = 1;
        ++sat[u];
      }
    }
  }
  return Coloring::from_raw(colors, "dsatur");
}

namespace {

using Clock = std::chrono::steady_clock;

struct BitAdjacency {
  int n, words;
  std::vector<std::uint64_t> rows;

  explicit BitAdjacency(const Graph& g) : n(g.num_vertices()), words((n + 63) / 64) {
    rows.assign(static_cast<std::size_t>(n) * words, 0);
    for (int u = 0; u < n; ++u)
      for (const int v : g.neighbors(u)) row(u)[v >> 6] |= 1ULL << (v & 63);
  }
  std::uint64_t* row(int u) { return rows.data() + static_cast<std::size_t>(u) * words; }
  const std::uint64_t* row(int u) const {
    return rows.data() + static_cast<std::size_t>(u) * words;
  }
  bool adjacent(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1; }
};

std::vector<int> greedy_clique(const Graph& g) {
  // seed from the max-degree vertex, extend by max degree inside the
  // candidate set
  const int n = g.num_vertices();
  if (n == 0) return {};
  std::vector<int> clique;
  std::vector<int> cand(n);
  std::iota(cand.begin(), cand.end(), 0);
  while (!cand.empty()) {
    int best = cand[0];
    for (const int v : cand)
      if (g.degree(v) > g.degree(best)) best = v;
    clique.push_back(best);
    std::vector<int> next;
    for (const int v : cand)
      if (v != best && g.adjacent(v, best)) next.push_back(v);
    cand = std::move(next);
  }
  return clique;
}

struct ChiSearch {
  const Graph& g;
  const Clock::time_point deadline;
  std::vector<int> colors;
  std::vector<int> best_colors;
  int best;  // best palette size found so far
  bool aborted = false;
  std::int64_t nodes = 0;

  ChiSearch(const Graph& graph, Clock::time_point dl, int upper)
      : g(graph), deadline(dl), colors(graph.num_vertices(), -1), best(upper) {}

  bool feasible(int v, int c) const {
    for (const int u : g.neighbors(v))
      if (colors[u] == c) return false;
    return true;
  }

  int next_vertex() const {
    // max saturation, then max degree
    int pick = -1, pick_sat = -1;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (colors[v] >= 0) continue;
      std::vector<char> used_colors(best, 0);
      int s = 0;
      for (const int u : g.neighbors(v)) {
        if (colors[u] >= 0 && !used_colors[colors[u]]) {
          used_colors[colors[u]] = 1;
          ++s;
        }
      }
      if (pick < 0 || s > pick_sat || (s == pick_sat && g.degree(v) > g.degree(pick))) {
        pick = v;
        pick_sat = s;
      }
    }
    return pick;
  }

  void run(int colored, int used) {
    if (aborted || used >= best) return;
    if ((++nodes & 1023) == 0 && Clock::now() > deadline) {
      aborted = true;
      return;
    }
    if (colored == g.num_vertices()) {
      best = used;
      best_colors = colors;
      return;
    }
    const int v = next_vertex();
    const int limit = std::min(used + 1, best - 1);
    for (int c = 0; c < limit; ++c) {
      if (!feasible(v, c)) continue;
      colors[v] = c;
      run(colored + 1, std::max(used, c + 1));
      colors[v] = -1;
      if (aborted) return;
    }
  }
};

struct CliqueSearch {
  const Graph& g;
  const BitAdjacency adj;
  const Clock::time_point deadline;
  std::vector<int> best_witness;
  int best = 0;
  bool aborted = false;
  std::int64_t nodes = 0;
  std::vector<int> current;

  CliqueSearch(const Graph& graph, Clock::time_point dl) : g(graph), adj(graph), deadline(dl) {}

  // candidates sorted with greedy color numbers; prune on |R| + color <= best
  void expand(std::vector<int>& cand) {
    if (aborted) return;
    if ((++nodes & 1023) == 0 && Clock::now() > deadline) {
      aborted = true;
      return;
    }
    if (cand.empty()) {
      if (static_cast<int>(current.size()) > best) {
        best = static_cast<int>(current.size());
        best_witness = current;
      }
      return;
    }
    // sequential greedy coloring of the candidate subgraph
    std::vector<int> color(cand.size());
    std::vector<std::vector<int>> classes;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const int v = cand[i];
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (const int u : classes[c]) {
          if (adj.adjacent(u, v)) {
            clash = true;
            break;
          }
        }
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
      color[i] = static_cast<int>(c) + 1;
    }
    // process in decreasing color order
    std::vector<std::size_t> order(cand.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&color](std::size_t a, std::size_t b) { return color[a] < color[b]; });
    for (std::size_t oi = order.size(); oi-- > 0;) {
      const std::size_t i = order[oi];
      const int v = cand[i];
      if (static_cast<int>(current.size()) + color[i] <= best) return;
      std::vector<int> next;
      for (std::size_t k = 0; k < oi; ++k) {
        const int u = cand[order[k]];
        if (adj.adjacent(u, v)) next.push_back(u);
      }
      current.push_back(v);
      expand(next);
      current.pop_back();
      if (aborted) return;
    }
  }
};

}  // namespace

ChromaticResult exact_chromatic(const Graph& g, SolveOptions opt) {
  const int n = g.num_vertices();
  if (n > opt.max_vertices)
    throw CapExceededError("exact solver capped at " + std::to_string(opt.max_vertices) +
                           " vertices");
  ChromaticResult result;
  result.methods = {"clique-seed", "dsatur", "branch-and-bound"};
  if (n == 0) {
    result.lower = result.upper = 0;
    result.exact = 0;
    return result;
  }

  const std::vector<int> clique = greedy_clique(g);
  const Coloring dsatur = greedy_dsatur(g);
  result.lower = static_cast<std::int64_t>(clique.size());
  result.upper = dsatur.palette;
  result.certificate = dsatur;
  if (result.lower == result.upper) {
    result.exact = result.lower;
    return result;
  }

  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(opt.budget_seconds));
  ChiSearch search(g, deadline, dsatur.palette);
  // symmetry breaking: the seed clique owns the first |clique| colors
  int colored = 0;
  for (std::size_t i = 0; i < clique.size(); ++i) {
    search.colors[clique[i]] = static_cast<int>(i);
    ++colored;
  }
  search.best_colors = dsatur.colors;
  search.run(colored, static_cast<int>(clique.size()));

  result.upper = search.best;
  result.certificate = Coloring::from_raw(search.best_colors, "branch-and-bound");
  result.budget_exhausted = search.aborted;
  if (!search.aborted) {
    result.lower = search.best;
    result.exact = search.best;
  }
  return result;
}

CliqueResult clique_number(const Graph& g, SolveOptions opt) {
  const int n = g.num_vertices();
  if (n > opt.max_vertices)
    throw CapExceededError("clique solver capped at " + std::to_string(opt.max_vertices) +
                           " vertices");
  CliqueResult result;
  if (n == 0) {
    result.exact = true;
    return result;
  }
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(opt.budget_seconds));
  CliqueSearch search(g, deadline);
  const std::vector<int> seed = greedy_clique(g);
  search.best = static_cast<int>(seed.size());
  search.best_witness = seed;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  search.expand(all);
  result.size = search.best;
  result.exact = !search.aborted;
  result.witness = search.best_witness;
  return result;
}

}  // namespace singraph
