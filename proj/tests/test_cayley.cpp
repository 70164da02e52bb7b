#include <sstream>

#include "doctest.h"
#include "singraph/cayley.hpp"
#include "singraph/chromatic.hpp"
#include "singraph/rng.hpp"
#include "singraph/spectral.hpp"

using namespace singraph;

namespace {

std::shared_ptr<const MatrixGroup> sl2(const Ring& r) {
  return std::make_shared<const MatrixGroup>(r, 2);
}

}  // namespace

TEST_CASE("graph families are regular with the predicted degrees") {
  struct Case {
    CayleyGraph g;
    std::int64_t vertices;
    int degree;
  };
  const Case cases[] = {
      {sing_graph(sl2(Ring::prime_field(3))), 24, 9},
      {sing_graph(sl2(Ring::prime_field(5))), 120, 25},
      {hyperbola_graph(Ring::modular_ring(5, 1)), 25, 4},
      {hyperbola_graph(Ring::modular_ring(5, 2)), 625, 20},
  };
  for (const auto& c : cases) {
    CHECK(c.g.num_vertices() == c.vertices);
    CHECK(c.g.degree() == c.degree);
    CHECK(c.g.num_edges() * 2 == c.vertices * c.degree);  // handshake
    const Graph m = c.g.materialize();
    CHECK(m.num_edges() == c.g.num_edges());  // loop-free, no duplicate edges
    CHECK(m.regular_degree() == c.degree);
  }
}

TEST_CASE("adjacency oracle is symmetric") {
  const CayleyGraph g = sing_graph(sl2(Ring::prime_field(5)));
  Rng rng(3);
  for (int t = 0; t < 10000; ++t) {
    const int i = static_cast<int>(rng.below(g.num_vertices()));
    const int j = static_cast<int>(rng.below(g.num_vertices()));
    CHECK(g.adjacent(i, j) == g.adjacent(j, i));
    if (i == j) CHECK(!g.adjacent(i, j));
  }
}

TEST_CASE("build validation rejects bad connection sets") {
  auto group = std::make_shared<const CyclicGroup>(6);
  CHECK_THROWS_AS(cayley_build(group, {0, 3}), IdentityInSetError);
  CHECK_THROWS_AS(cayley_build(group, {1}), AsymmetricSetError);
  CHECK_NOTHROW(cayley_build(group, {1, 5}));
}

TEST_CASE("connectivity and bipartiteness by search agree with the spectrum") {
  struct Case {
    CayleyGraph g;
    bool connected;
    bool bipartite;
  };
  auto z6 = std::make_shared<const CyclicGroup>(6);
  const Case cases[] = {
      {sing_graph(sl2(Ring::prime_field(3))), true, false},
      {sing_graph(sl2(Ring::prime_field(5))), true, false},
      {sing_graph(sl2(Ring::prime_field(7))), true, false},
      {hyperbola_graph(Ring::modular_ring(5, 1)), true, false},
      {hyperbola_graph(Ring::modular_ring(5, 2)), true, false},
      {cayley_build(z6, {2, 4}), false, false},  // generates the index-2 subgroup
      {cayley_build(z6, {1, 5}), true, true},    // 6-cycle
  };
  for (const auto& c : cases) {
    const auto rep = connectivity_bipartiteness(c.g);
    CHECK(rep.connected == c.connected);
    CHECK(rep.bipartite == c.bipartite);
    // spectral signature: connected iff the degree eigenvalue is simple,
    // bipartite iff -degree is an eigenvalue
    const Spectrum s = eig_dense(c.g);
    const bool degree_simple = s.entries().front().multiplicity == 1 &&
                               std::abs(s.largest() - c.g.degree()) <= 1e-5;
    CHECK(degree_simple == c.connected);
    const bool has_minus_degree =
        std::abs(s.smallest() + c.g.degree()) <= 1e-6;
    CHECK(has_minus_degree == c.bipartite);
  }
}

TEST_CASE("induced subgraphs restrict edges") {
  const CayleyGraph g = sing_graph(sl2(Ring::prime_field(3)));
  std::vector<int> all(g.num_vertices());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  const Graph full = induced_subgraph(g, all);
  CHECK(full.num_edges() == g.num_edges());

  const std::vector<int> single{5};
  CHECK(induced_subgraph(g, single).num_edges() == 0);

  const std::vector<int> bad{0, 99};
  CHECK_THROWS_AS(induced_subgraph(g, bad), UnknownVertexError);
}

TEST_CASE("the embedded hyperbola is an induced subgraph of the matrix graph") {
  for (const Ring& r : {Ring::modular_ring(5, 1), Ring::modular_ring(7, 1)}) {
    const auto group = sl2(r);
    const CayleyGraph sing = sing_graph(group);
    std::vector<int> subset;
    for (std::int64_t x = 0; x < r.size(); ++x)
      for (std::int64_t y = 0; y < r.size(); ++y)
        subset.push_back(group->index_of(embed_a(r, r.element(x), r.element(y))));
    const Graph induced = induced_subgraph(sing, subset);
    const CayleyGraph h = hyperbola_graph(r);
    CHECK(induced.num_edges() == h.num_edges());
    CHECK(induced.regular_degree() == h.degree());
    bool match = true;
    h.for_each_edge([&](int a, int b) { match = match && induced.adjacent(a, b); });
    CHECK(match);
  }
}

TEST_CASE("materialization refuses oracle-scale graphs") {
  CayleyOptions opt;
  opt.dense_cap = 100;
  const CayleyGraph g = sing_graph(sl2(Ring::prime_field(5)), opt);
  CHECK(!g.dense());
  CHECK_THROWS_AS(g.materialize(), CapExceededError);
  CHECK(g.neighbors(0).size() == 25);  // the oracle still works
}

TEST_CASE("coloring transport along the identity reduction is the identity") {
  const Ring f5 = Ring::prime_field(5);
  const auto group = sl2(f5);
  const CayleyGraph graph = sing_graph(group);
  const Coloring theta = theta_coloring(*group);
  const Coloring lifted = lift_coloring(*group, *group, graph, theta);
  CHECK(lifted.colors == theta.colors);
  CHECK(lifted.palette == theta.palette);
}

TEST_CASE("coloring transport to Z/25 stays proper with the same palette") {
  const Ring f5 = Ring::prime_field(5);
  const Ring z25 = Ring::modular_ring(5, 2);
  const auto base_group = sl2(f5);
  const CayleyGraph base_graph = sing_graph(base_group);
  const Coloring base = theta_coloring(*base_group);

  const auto target = std::make_shared<const MatrixGroup>(z25, 2);
  const CayleyGraph graph = sing_graph(target);
  const Coloring lifted = lift_coloring(*target, *base_group, base_graph, base);
  CHECK(lifted.palette == base.palette);
  CHECK(lifted.palette <= 8 * (5 + 1));
  CHECK(!find_violating_edge(graph, lifted).has_value());
  // the same verification, chunked over worker threads
  CHECK(!find_violating_edge(graph, lifted, 4).has_value());
}

TEST_CASE("improper base colorings are rejected") {
  const Ring f5 = Ring::prime_field(5);
  const auto group = sl2(f5);
  const CayleyGraph graph = sing_graph(group);
  Coloring constant;
  constant.colors.assign(graph.num_vertices(), 0);
  constant.palette = 1;
  constant.scheme = "constant";
  CHECK_THROWS_AS(lift_coloring(*group, *group, graph, constant), ImproperBaseError);
}

TEST_CASE("sampled verification accepts a proper lift and flags a broken one") {
  const Ring f5 = Ring::prime_field(5);
  const Ring z125 = Ring::modular_ring(5, 3);
  const auto base_group = sl2(f5);
  const CayleyGraph base_graph = sing_graph(base_group);
  const Coloring base = theta_coloring(*base_group);

  Rng rng(0);
  const auto report = verify_lift_sampled(z125, *base_group, base_graph, base, 2000, rng);
  CHECK(report.samples == 2000);
  CHECK(report.violations == 0);
}

TEST_CASE("dimacs export") {
  auto z3 = std::make_shared<const CyclicGroup>(3);
  const CayleyGraph triangle = cayley_build(z3, {1, 2});
  std::ostringstream os;
  write_dimacs(os, triangle);
  CHECK(os.str() == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
}
