#include "singraph/cayley.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <thread>

namespace singraph {

CayleyGraph::CayleyGraph(std::shared_ptr<const FiniteGroup> g, std::vector<int> conn,
                         CayleyOptions opt)
    : group_(std::move(g)), conn_(std::move(conn)), opt_(opt) {
  std::sort(conn_.begin(), conn_.end());
  conn_.erase(std::unique(conn_.begin(), conn_.end()), conn_.end());
  in_conn_.assign(group_->order(), false);
  for (const int s : conn_) in_conn_[s] = true;
}

CayleyGraph cayley_build(std::shared_ptr<const FiniteGroup> group, std::vector<int> connection,
                         CayleyOptions opt) {
  CayleyGraph g(std::move(group), std::move(connection), opt);
  const FiniteGroup& G = g.group();
  for (const int s : g.connection()) {
    if (s == G.identity()) throw IdentityInSetError("identity in connection set");
    if (!g.in_conn_[G.inverse(s)])
      throw AsymmetricSetError("connection set not closed under inverses");
  }
  return g;
}

std::vector<int> CayleyGraph::neighbors(int i) const {
  std::vector<int> out;
  out.reserve(conn_.size());
  for (const int s : conn_) out.push_back(group_->op(i, s));
  std::sort(out.begin(), out.end());
  return out;
}

Graph CayleyGraph::materialize() const {
  if (!dense())
    throw CapExceededError("graph with " + std::to_string(num_vertices()) +
                           " vertices is above the dense cap " + std::to_string(opt_.dense_cap));
  Graph g(static_cast<int>(num_vertices()));
  for_each_edge([&g](int i, int j) { g.add_edge(i, j); });
  g.finalize();
  return g;
}

CayleyGraph sing_graph(std::shared_ptr<const MatrixGroup> group, CayleyOptions opt) {
  const Ring& R = group->ring();
  const Matrix id = Matrix::identity(R, group->dim());
  std::vector<int> conn;
  for (std::int64_t i = 0; i < group->order(); ++i) {
    if (id.add(group->element(static_cast<int>(i))).det() == R.zero())
      conn.push_back(static_cast<int>(i));
  }
  return cayley_build(std::move(group), std::move(conn), opt);
}

CayleyGraph rank_le_graph(std::shared_ptr<const MatrixGroup> group, int ell, CayleyOptions opt) {
  const Ring& R = group->ring();
  if (!R.is_field()) throw NotAFieldError("rank cuts need a field");
  const int n = group->dim();
  if (ell < 1 || ell > n) throw BadArgumentError("need 1 <= ell <= n");
  const Matrix id = Matrix::identity(R, n);
  std::vector<int> conn;
  for (std::int64_t i = 0; i < group->order(); ++i) {
    if (matrix_rank(id.add(group->element(static_cast<int>(i)))) <= n - ell)
      conn.push_back(static_cast<int>(i));
  }
  return cayley_build(std::move(group), std::move(conn), opt);
}

CayleyGraph hyperbola_graph(const Ring& r, CayleyOptions opt) {
  auto group = std::make_shared<const PairGroup>(r);
  std::vector<int> conn;
  for (std::int64_t c = 0; c < r.size(); ++c) {
    const RingElement x = r.element(c);
    if (!r.is_unit(x)) continue;
    conn.push_back(group->index_of(x, r.inverse(x)));
  }
  return cayley_build(std::move(group), std::move(conn), opt);
}

Graph induced_subgraph(const CayleyGraph& g, std::span<const int> subset) {
  for (const int v : subset) {
    if (v < 0 || v >= g.num_vertices())
      throw UnknownVertexError("vertex " + std::to_string(v) + " out of range");
  }
  Graph out(static_cast<int>(subset.size()));
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      if (subset[a] == subset[b]) throw BadArgumentError("duplicate vertex in subset");
      if (g.adjacent(subset[a], subset[b])) out.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  }
  out.finalize();
  return out;
}

ConnectivityReport connectivity_bipartiteness(const CayleyGraph& g) {
  const std::int64_t n = g.num_vertices();
  std::vector<int> side(n, -1);
  bool bipartite = true;
  std::int64_t reached = 0;
  std::queue<int> q;
  side[0] = 0;
  q.push(0);
  ++reached;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (const int s : g.connection()) {
      const int v = g.group().op(u, s);
      if (side[v] < 0) {
        side[v] = 1 - side[u];
        ++reached;
        q.push(v);
      } else if (side[v] == side[u]) {
        bipartite = false;
      }
    }
  }
  // disconnected pieces cannot restore bipartiteness, but they can break it
  if (reached < n) {
    for (std::int64_t start = 0; start < n && bipartite; ++start) {
      if (side[start] >= 0) continue;
      side[start] = 0;
      q.push(static_cast<int>(start));
      while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (const int s : g.connection()) {
          const int v = g.group().op(u, s);
          if (side[v] < 0) {
            side[v] = 1 - side[u];
            q.push(v);
          } else if (side[v] == side[u]) {
            bipartite = false;
          }
        }
      }
    }
  }
  return {reached == n, bipartite};
}

std::optional<std::pair<int, int>> find_violating_edge(const CayleyGraph& g, const Coloring& c,
                                                       int threads) {
  if (static_cast<std::int64_t>(c.colors.size()) != g.num_vertices())
    throw IncompleteColoringError("coloring size does not match vertex count");
  for (const int color : c.colors)
    if (color < 0) throw IncompleteColoringError("uncolored vertex");
  const std::int64_t n = g.num_vertices();

  auto scan = [&g, &c](std::int64_t lo, std::int64_t hi) -> std::optional<std::pair<int, int>> {
    std::optional<std::pair<int, int>> found;
    for (std::int64_t i = lo; i < hi; ++i) {
      for (const int s : g.connection()) {
        const int j = g.group().op(static_cast<int>(i), s);
        if (i < j && c.colors[i] == c.colors[j]) {
          const auto e = std::make_pair(static_cast<int>(i), j);
          if (!found || e < *found) found = e;
        }
      }
      if (found) return found;  // later i only gives larger pairs
    }
    return found;
  };

  if (threads <= 1 || n < 2 * threads) return scan(0, n);

  std::vector<std::optional<std::pair<int, int>>> results(threads);
  std::vector<std::thread> pool;
  const std::int64_t chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const std::int64_t lo = t * chunk;
    const std::int64_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&results, &scan, t, lo, hi] { results[t] = scan(lo, hi); });
  }
  for (auto& th : pool) th.join();
  std::optional<std::pair<int, int>> best;
  for (const auto& r : results)
    if (r && (!best || *r < *best)) best = r;
  return best;
}

void write_dimacs(std::ostream& os, const CayleyGraph& g) {
  os << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
  g.for_each_edge([&os](int i, int j) { os << "e " << i + 1 << " " << j + 1 << "\n"; });
}

Matrix reduce_matrix(const Matrix& m, const Ring& to) {
  const Ring& from = m.ring();
  if (from == to) return m;
  if (from.characteristic() != to.characteristic() || to.exponent() > from.exponent() ||
      to.kind() == Ring::Kind::ExtensionField || from.kind() == Ring::Kind::ExtensionField)
    throw BadArgumentError("no entrywise reduction " + from.name() + " -> " + to.name());
  Matrix out(to, m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out.set(i, j, to.from_int(m.at(i, j).code()));
  return out;
}

Coloring lift_coloring(const MatrixGroup& target, const MatrixGroup& base_group,
                       const CayleyGraph& base_graph, const Coloring& base) {
  if (&base_graph.group() != static_cast<const FiniteGroup*>(&base_group))
    throw BadArgumentError("base coloring group does not match base graph");
  const Ring& quotient = base_group.ring();
  if (!quotient.is_unit(quotient.from_int(2)))
    throw PreconditionFailedError("2 must be invertible in the quotient");
  if (find_violating_edge(base_graph, base))
    throw ImproperBaseError("base coloring is not proper on the quotient graph");

  std::vector<int> raw;
  raw.reserve(target.order());
  for (std::int64_t i = 0; i < target.order(); ++i) {
    const Matrix reduced = reduce_matrix(target.element(static_cast<int>(i)), quotient);
    const int idx = base_group.index_of(reduced);
    if (idx < 0) throw Error("reduction left SL_n of the quotient");
    raw.push_back(base.colors[idx]);
  }
  Coloring out;
  out.colors = std::move(raw);  // keep base ids so palettes stay comparable
  out.palette = base.palette;
  out.scheme = base.scheme + "/lifted:" + target.ring().name();
  return out;
}

namespace {

// Uniform-ish SL_2(R) sample: random entries until det is a unit, then scale
// the first row by det^-1.
Matrix random_sl2(const Ring& r, Rng& rng) {
  for (;;) {
    Matrix m(r, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        m.set(i, j, r.element(static_cast<std::int64_t>(rng.below(r.size()))));
    const RingElement d = m.det();
    if (!r.is_unit(d)) continue;
    const RingElement dinv = r.inverse(d);
    m.set(0, 0, r.mul(m.at(0, 0), dinv));
    m.set(0, 1, r.mul(m.at(0, 1), dinv));
    return m;
  }
}

// Random trace -2, det 1 matrix with invertible upper-right entry:
// a free, d = -2-a, b a unit, c = (ad-1)/b.
Matrix random_trace_minus2(const Ring& r, Rng& rng) {
  for (;;) {
    const RingElement a = r.element(static_cast<std::int64_t>(rng.below(r.size())));
    const RingElement d = r.sub(r.neg(r.from_int(2)), a);
    const RingElement b = r.element(static_cast<std::int64_t>(rng.below(r.size())));
    if (!r.is_unit(b)) continue;
    const RingElement c = r.mul(r.sub(r.mul(a, d), r.one()), r.inverse(b));
    Matrix s(r, 2);
    s.set(0, 0, a);
    s.set(0, 1, b);
    s.set(1, 0, c);
    s.set(1, 1, d);
    return s;
  }
}

}  // namespace

SampledLiftReport verify_lift_sampled(const Ring& big_ring, const MatrixGroup& base_group,
                                      const CayleyGraph& base_graph, const Coloring& base,
                                      int samples, Rng& rng) {
  if (find_violating_edge(base_graph, base))
    throw ImproperBaseError("base coloring is not proper on the quotient graph");
  const Ring& quotient = base_group.ring();
  auto color_of = [&](const Matrix& m) {
    const int idx = base_group.index_of(reduce_matrix(m, quotient));
    if (idx < 0) throw Error("reduction left SL_2 of the quotient");
    return base.colors[idx];
  };

  SampledLiftReport report;
  for (int t = 0; t < samples; ++t) {
    const Matrix x = random_sl2(big_ring, rng);
    const Matrix s = random_trace_minus2(big_ring, rng);
    const Matrix y = x.mul(s);
    ++report.samples;
    if (color_of(x) == color_of(y)) ++report.violations;
  }
  return report;
}

}  // namespace singraph
