#include <cmath>
#include <functional>

#include "common.hpp"
#include "singraph/chromatic.hpp"
#include "singraph/counting.hpp"
#include "singraph/kloosterman.hpp"
#include "singraph/spectral.hpp"

namespace singraph::cli {

namespace {

class AssertionLog {
 public:
  explicit AssertionLog(std::string suite) : suite_(std::move(suite)) {}

  using Extra = std::function<void(JsonWriter&)>;

  void check(const std::string& assertion, bool pass, const Extra& extra = nullptr) {
    JsonWriter w;
    w.begin_object();
    w.key("suite").value(suite_);
    w.key("assertion").value(assertion);
    w.key("pass").value(pass);
    if (extra) extra(w);
    w.end_object();
    if (!lines_.empty()) lines_ += "\n";
    lines_ += w.str();
    all_pass_ = all_pass_ && pass;
  }

  const std::string& lines() const { return lines_; }
  bool all_pass() const { return all_pass_; }

 private:
  std::string suite_;
  std::string lines_;
  bool all_pass_ = true;
};

void suite_weil(const RunConfig& cfg, AssertionLog& log) {
  const std::int64_t p = cfg.p > 0 ? cfg.p : 5;
  const int n = cfg.n;
  const auto sweep = kloosterman_sweep(p, n);  // throws if any sum is nonreal
  log.check("sums_real", true, [&](JsonWriter& w) {
    w.key("modulus").value(sweep.front().modulus);
    w.key("checked").value(static_cast<std::int64_t>(sweep.size()));
  });
  double max_ratio = 0;
  bool all_hold = true;
  for (const auto& kv : sweep) {
    const double ratio = std::abs(kv.value) / kv.weil_budget;
    max_ratio = std::max(max_ratio, ratio);
    all_hold = all_hold && std::abs(kv.value) <= kv.weil_budget + 1e-6;
  }
  log.check("estermann_weil_bound", all_hold, [&](JsonWriter& w) {
    w.key("checked").value(static_cast<std::int64_t>(sweep.size()));
    w.key("max_ratio").value(max_ratio);
  });
}

void suite_embed(const RunConfig& cfg, AssertionLog& log) {
  const std::int64_t p = cfg.p > 0 ? cfg.p : 5;
  const Ring R = Ring::modular_ring(p, cfg.n);
  const std::int64_t m = R.size();
  if (m * m > cfg.enum_cap)
    throw CapExceededError("embedding check on " + std::to_string(m * m) + " pairs over cap");

  std::vector<Matrix> images;
  images.reserve(m * m);
  bool det_one = true;
  for (std::int64_t xc = 0; xc < m; ++xc) {
    for (std::int64_t yc = 0; yc < m; ++yc) {
      Matrix a = embed_a(R, R.element(xc), R.element(yc));
      det_one = det_one && a.det() == R.one();
      images.push_back(std::move(a));
    }
  }
  log.check("images_in_sl2", det_one,
            [&](JsonWriter& w) { w.key("count").value(static_cast<std::int64_t>(images.size())); });

  std::vector<std::uint64_t> keys;
  keys.reserve(images.size());
  for (const auto& a : images) keys.push_back(a.key());
  std::sort(keys.begin(), keys.end());
  const bool injective = std::adjacent_find(keys.begin(), keys.end()) == keys.end();
  log.check("embedding_injective", injective,
            [&](JsonWriter& w) { w.key("count").value(static_cast<std::int64_t>(keys.size())); });

  // H-adjacency (x2-x1)(y2-y1) = 1 must coincide with det(a1 + a2) = 0 on
  // every vertex pair
  bool iso = true;
  std::int64_t pairs = 0, edges = 0;
  for (std::size_t i = 0; i < images.size() && iso; ++i) {
    const std::int64_t x1 = static_cast<std::int64_t>(i) / m, y1 = static_cast<std::int64_t>(i) % m;
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      const std::int64_t x2 = static_cast<std::int64_t>(j) / m,
                         y2 = static_cast<std::int64_t>(j) % m;
      const RingElement dx = R.sub(R.element(x2), R.element(x1));
      const RingElement dy = R.sub(R.element(y2), R.element(y1));
      const bool h_edge = R.mul(dx, dy) == R.one();
      const bool sing_edge = images[i].add(images[j]).det() == R.zero();
      ++pairs;
      if (h_edge) ++edges;
      if (h_edge != sing_edge) {
        iso = false;
        break;
      }
    }
  }
  log.check("edge_isomorphism", iso, [&](JsonWriter& w) {
    w.key("pairs_checked").value(pairs);
    w.key("edges").value(edges);
  });

  if (sl_order(R, 2) <= cfg.enum_cap) {
    const auto group = std::make_shared<const MatrixGroup>(R, 2, cfg.enum_cap);
    const CayleyGraph sing = sing_graph(group, CayleyOptions{cfg.dense_cap});
    std::vector<int> subset;
    subset.reserve(images.size());
    for (const auto& a : images) subset.push_back(group->index_of(a));
    const Graph induced = induced_subgraph(sing, subset);
    const CayleyGraph h = hyperbola_graph(R, CayleyOptions{cfg.dense_cap});
    bool match = induced.num_edges() == h.num_edges();
    if (match) {
      h.for_each_edge([&](int a, int b) {
        if (!induced.adjacent(a, b)) match = false;
      });
    }
    log.check("induced_subgraph_matches", match, [&](JsonWriter& w) {
      w.key("vertices").value(static_cast<std::int64_t>(images.size()));
      w.key("edges").value(induced.num_edges());
      w.key("regular_degree").value(
          static_cast<std::int64_t>(induced.regular_degree().value_or(-1)));
    });
  }
}

void suite_chartable(const RunConfig& cfg, AssertionLog& log) {
  const std::int64_t q = cfg.q > 0 ? cfg.q : 5;
  const auto table = sl2_character_table(q);
  std::int64_t dim2 = 0;
  for (const auto& row : table) dim2 += row.dim * row.dim;
  log.check("dimension_square_sum", dim2 == q * (q * q - 1), [&](JsonWriter& w) {
    w.key("sum").value(dim2);
    w.key("group_order").value(q * (q * q - 1));
  });

  bool cancel = true, closed = true;
  for (const auto& row : table) {
    try {
      const Rational lambda = sing2_eigenvalue(row, q);
      closed = closed && lambda.is_integer() &&
               lambda.num() == sing2_eigenvalue_closed_form(row, q);
    } catch (const Error&) {
      cancel = false;
    }
  }
  log.check("radical_cancellation", cancel,
            [&](JsonWriter& w) { w.key("rows").value(static_cast<std::int64_t>(table.size())); });
  log.check("closed_form_match", closed,
            [&](JsonWriter& w) { w.key("rows").value(static_cast<std::int64_t>(table.size())); });
}

void suite_mixing(const RunConfig& cfg, AssertionLog& log) {
  const std::int64_t p = cfg.p > 0 ? cfg.p : 5;
  const Ring R = Ring::prime_field(p);
  const MatrixGroup group(R, 2, 400);
  const std::int64_t d = cfg.d > 0 ? cfg.d : sl2_quasirandom_degree(p);
  const MixingReport report = gowers_mixing_check(group, d, cfg.trials, cfg.seed);
  log.check("no_violations", report.satisfiable ? report.violations == 0 : true,
            [&](JsonWriter& w) { w.key("report"); append_json(w, report); });
}

void suite_spectrum(const RunConfig& cfg, AssertionLog& log) {
  const std::int64_t q = cfg.q > 0 ? cfg.q : 5;
  RunConfig inner = cfg;
  inner.family = "sing2";
  inner.ring_kind = "field";
  inner.q = q;
  const BuiltFamily fam = build_family(inner);
  const Spectrum exact = sing2_spectrum_exact(q);
  JacobiOptions jopt;
  jopt.dense_cap = cfg.dense_cap;
  const Spectrum dense = eig_dense(*fam.graph, jopt);
  log.check("multiset_match", exact.multiset_equal(dense, 1e-6), [&](JsonWriter& w) {
    w.key("q").value(q);
    w.key("tolerance").value(1e-6);
  });
  log.check("total_multiplicity", exact.total_multiplicity() == q * (q * q - 1),
            [&](JsonWriter& w) { w.key("total").value(exact.total_multiplicity()); });
}

void suite_sandwich(const RunConfig& cfg, AssertionLog& log) {
  const std::int64_t q = cfg.q > 0 ? cfg.q : 5;
  RunConfig inner = cfg;
  inner.family = "sing2";
  inner.ring_kind = "field";
  inner.q = q;
  const BuiltFamily fam = build_family(inner);

  const BoundValue hv = hoffman_bound(sing2_spectrum_exact(q));
  log.check("hoffman_equals_q_plus_1",
            hv.exact && *hv.exact == Rational(q + 1), [&](JsonWriter& w) {
              w.key("value").value(hv.value);
            });

  const Coloring theta = theta_coloring(*fam.mgroup);
  const bool theta_proper = !find_violating_edge(*fam.graph, theta).has_value();
  log.check("theta_proper", theta_proper, nullptr);
  log.check("theta_palette_bound", theta.palette <= 8 * (q + 1), [&](JsonWriter& w) {
    w.key("palette").value(static_cast<std::int64_t>(theta.palette));
    w.key("bound").value(8 * (q + 1));
  });

  std::int64_t best_upper = theta.palette;
  if (q % 4 == 3) {
    const Coloring coset = coset_coloring(*fam.mgroup, CosetVariant::Squares);
    const bool coset_proper = !find_violating_edge(*fam.graph, coset).has_value();
    log.check("coset_squares_proper", coset_proper, nullptr);
    log.check("coset_palette_exact", coset.palette == 2 * (q + 1), [&](JsonWriter& w) {
      w.key("palette").value(static_cast<std::int64_t>(coset.palette));
    });
    best_upper = std::min<std::int64_t>(best_upper, coset.palette);
  }
  log.check("sandwich_holds", q + 1 <= best_upper && theta_proper, [&](JsonWriter& w) {
    w.key("lower").value(q + 1);
    w.key("upper").value(best_upper);
  });
}

void suite_lift(const RunConfig& cfg, AssertionLog& log) {
  const std::int64_t p = cfg.p > 0 ? cfg.p : 5;
  const int n = cfg.n > 1 ? cfg.n : 2;
  const Ring big = Ring::modular_ring(p, n);
  const Ring base_ring = Ring::prime_field(p);
  const auto base_group = std::make_shared<const MatrixGroup>(base_ring, 2, cfg.enum_cap);
  const CayleyGraph base_graph = sing_graph(base_group, CayleyOptions{cfg.dense_cap});
  const Coloring base = theta_coloring(*base_group);

  if (sl_order(big, 2) <= cfg.enum_cap) {
    const auto target = std::make_shared<const MatrixGroup>(big, 2, cfg.enum_cap);
    const CayleyGraph graph = sing_graph(target, CayleyOptions{cfg.dense_cap});
    const Coloring lifted = lift_coloring(*target, *base_group, base_graph, base);
    const bool proper = !find_violating_edge(graph, lifted, cfg.threads).has_value();
    log.check("lift_proper_full", proper, [&](JsonWriter& w) {
      w.key("ring").value(big.name());
      w.key("vertices").value(graph.num_vertices());
      w.key("edges").value(graph.num_edges());
    });
    log.check("lift_palette_bound", lifted.palette <= 8 * (p + 1), [&](JsonWriter& w) {
      w.key("palette").value(static_cast<std::int64_t>(lifted.palette));
      w.key("bound").value(8 * (p + 1));
    });
  } else {
    Rng rng(cfg.seed);
    const auto report = verify_lift_sampled(big, *base_group, base_graph, base,
                                            static_cast<int>(cfg.samples), rng);
    log.check("lift_sampled_no_violations", report.violations == 0, [&](JsonWriter& w) {
      w.key("ring").value(big.name());
      w.key("samples").value(report.samples);
      w.key("violations").value(report.violations);
    });
  }
}

void suite_slope(const RunConfig& cfg, AssertionLog& log) {
  const std::int64_t q = cfg.q > 0 ? cfg.q : 3;
  const auto [p, f] = factor_prime_power(q);
  const Ring R = f == 1 ? Ring::prime_field(p) : Ring::extension_field(p, f);
  const CountReport report = count_rank_variety(cfg.nmat, cfg.ell, R, cfg.enum_cap);
  if (cfg.nmat == 2 && cfg.ell == 1) {
    log.check("count_equals_q_squared", report.count == q * q,
              [&](JsonWriter& w) { w.key("report"); append_json(w, report); });
  }
  log.check("slope_within_tolerance",
            std::abs(report.observed_exponent - report.expected_exponent) <= 0.35,
            [&](JsonWriter& w) { w.key("report"); append_json(w, report); });
}

void suite_chromatic(const RunConfig& cfg, AssertionLog& log) {
  SolveOptions opt;
  opt.budget_seconds = cfg.budget_seconds;
  opt.max_vertices = cfg.exact_cap;

  {
    const Ring R = Ring::prime_field(3);
    const auto group = std::make_shared<const MatrixGroup>(R, 2, cfg.enum_cap);
    const Graph g = sing_graph(group, CayleyOptions{cfg.dense_cap}).materialize();
    const ChromaticResult r = exact_chromatic(g, opt);
    log.check("sing2_f3_exact_chi_in_bracket",
              r.exact.has_value() && *r.exact >= 4 && *r.exact <= 32,
              [&](JsonWriter& w) { w.key("result"); append_json(w, r); });
  }
  for (const std::int64_t q : {3, 5, 7}) {
    const Ring R = Ring::prime_field(q);
    const auto group = std::make_shared<const MatrixGroup>(R, 2, cfg.enum_cap);
    const Graph g = sing_graph(group, CayleyOptions{cfg.dense_cap}).materialize();
    SolveOptions copt = opt;
    copt.max_vertices = std::max(copt.max_vertices, g.num_vertices());
    const CliqueResult cr = clique_number(g, copt);
    log.check("omega_exact_q" + std::to_string(q), cr.exact, [&](JsonWriter& w) {
      w.key("omega").value(cr.size);
    });
  }
}

}  // namespace

int cmd_verify(const RunConfig& cfg) {
  AssertionLog log(cfg.suite);
  if (cfg.suite == "weil") {
    suite_weil(cfg, log);
  } else if (cfg.suite == "embed") {
    suite_embed(cfg, log);
  } else if (cfg.suite == "chartable") {
    suite_chartable(cfg, log);
  } else if (cfg.suite == "mixing") {
    suite_mixing(cfg, log);
  } else if (cfg.suite == "spectrum") {
    suite_spectrum(cfg, log);
  } else if (cfg.suite == "sandwich") {
    suite_sandwich(cfg, log);
  } else if (cfg.suite == "lift") {
    suite_lift(cfg, log);
  } else if (cfg.suite == "slope") {
    suite_slope(cfg, log);
  } else if (cfg.suite == "chromatic") {
    suite_chromatic(cfg, log);
  } else {
    throw BadArgumentError("unknown suite: " + cfg.suite);
  }
  emit(cfg, log.lines());
  return log.all_pass() ? kExitOk : kExitAssertion;
}

}  // namespace singraph::cli
