#include <algorithm>
#include <cmath>
#include <sstream>

#include "common.hpp"
#include "singraph/chromatic.hpp"
#include "singraph/kloosterman.hpp"
#include "singraph/spectral.hpp"

namespace singraph::cli {

namespace {

struct Combined {
  double lower_real = 1.0;
  std::int64_t upper = -1;
  std::optional<std::int64_t> exact;

  void raise_lower(double v) { lower_real = std::max(lower_real, v); }
  void cut_upper(std::int64_t v) { upper = upper < 0 ? v : std::min(upper, v); }
  std::int64_t lower_int() const { return static_cast<std::int64_t>(std::ceil(lower_real - 1e-9)); }
};

std::optional<Spectrum> spectral_route(const RunConfig& cfg, const BuiltFamily& fam) {
  if (cfg.family == "sing2" && fam.ring->is_field())
    return sing2_spectrum_exact(fam.ring->size());
  if (cfg.family == "hyperbola")
    return hyperbola_spectrum(fam.ring->characteristic(), fam.ring->exponent());
  if (fam.graph && fam.graph->num_vertices() <= cfg.dense_cap) {
    JacobiOptions jopt;
    jopt.dense_cap = cfg.dense_cap;
    return eig_dense(*fam.graph, jopt);
  }
  return std::nullopt;
}

void append_coloring_result(JsonWriter& w, const RunConfig& cfg, const Coloring& c,
                            std::int64_t scheme_bound, bool proper, const char* verification) {
  w.begin_object();
  w.key("scheme").value(c.scheme);
  w.key("palette").value(static_cast<std::int64_t>(c.palette));
  if (scheme_bound > 0) w.key("scheme_bound").value(scheme_bound);
  w.key("proper").value(proper);
  w.key("verification").value(verification);
  if (static_cast<std::int64_t>(c.colors.size()) <= cfg.dense_cap) {
    w.key("colors").begin_array();
    for (const int x : c.colors) w.value(static_cast<std::int64_t>(x));
    w.end_array();
  }
  w.end_object();
}

}  // namespace

int cmd_chi(const RunConfig& cfg) {
  const BuiltFamily fam = build_family(cfg);
  std::vector<std::string> bounds = cfg.bounds;
  if (bounds.empty()) {
    if (cfg.family == "sing2" && !fam.ring->is_field())
      bounds = {"kloosterman", "lift"};
    else if (cfg.family == "sing2")
      bounds = {"hoffman", "theta"};
    else
      bounds = {"hoffman", "sarnak", "greedy"};
  }

  Combined combined;
  JsonWriter w;
  w.begin_object();
  w.key("command").value("chi");
  w.key("family").value(cfg.family);
  w.key("graph").value(fam.description);
  w.key("vertices").value(fam.graph->num_vertices());
  w.key("degree").value(static_cast<std::int64_t>(fam.graph->degree()));
  w.key("bounds").begin_object();

  std::optional<Spectrum> spectrum;  // computed lazily, shared by spectral bounds
  auto need_spectrum = [&]() -> const Spectrum& {
    if (!spectrum) {
      spectrum = spectral_route(cfg, fam);
      if (!spectrum)
        throw BadArgumentError("no spectral route for this family at this size");
    }
    return *spectrum;
  };
  auto materialized = [&]() { return fam.graph->materialize(); };

  for (const std::string& bound : bounds) {
    w.key(bound);
    if (bound == "hoffman") {
      const BoundValue hv = hoffman_bound(need_spectrum());
      w.begin_object();
      w.key("value").value(hv.value);
      if (hv.exact) {
        w.key("exact_num").value(hv.exact->num());
        w.key("exact_den").value(hv.exact->den());
      }
      w.end_object();
      combined.raise_lower(hv.value);
    } else if (bound == "sarnak") {
      const double sv = sarnak_bound(need_spectrum(), fam.graph->degree());
      w.begin_object();
      w.key("value").value(sv);
      w.end_object();
      combined.raise_lower(sv);
    } else if (bound == "quasirandom") {
      std::int64_t d = cfg.quasirandom_d;
      if (d == 0 && fam.ring->kind() == Ring::Kind::PrimeField)
        d = sl2_quasirandom_degree(fam.ring->characteristic());
      if (d == 0)
        throw BadArgumentError("no known quasirandomness degree; pass --quasirandom-d");
      const double qv = quasirandom_bound(
          static_cast<double>(d), static_cast<double>(fam.graph->degree()),
          static_cast<double>(fam.graph->num_vertices()));
      w.begin_object();
      w.key("d").value(d);
      w.key("value").value(qv);
      w.end_object();
      combined.raise_lower(qv);
    } else if (bound == "kloosterman") {
      if (fam.ring->characteristic() < 5)
        throw BadArgumentError("kloosterman bound needs p >= 5");
      const double kv = klo_sl_bound(fam.ring->characteristic(), fam.ring->exponent());
      w.begin_object();
      w.key("value").value(kv);
      w.key("floor").value(std::sqrt(static_cast<double>(fam.ring->characteristic())) / 4.0);
      w.end_object();
      combined.raise_lower(kv);
    } else if (bound == "clique") {
      SolveOptions opt;
      opt.budget_seconds = cfg.budget_seconds;
      opt.max_vertices = cfg.exact_cap;
      const CliqueResult cr = clique_number(materialized(), opt);
      w.begin_object();
      w.key("size").value(cr.size);
      w.key("exact").value(cr.exact);
      w.end_object();
      combined.raise_lower(static_cast<double>(cr.size));
    } else if (bound == "theta") {
      const Coloring c = theta_coloring(*fam.mgroup);
      const bool proper = !find_violating_edge(*fam.graph, c).has_value();
      append_coloring_result(w, cfg, c, 8 * (fam.ring->size() + 1), proper, "full");
      if (proper) combined.cut_upper(c.palette);
    } else if (bound == "coset") {
      const CosetVariant variant =
          cfg.variant == "fourth-powers" ? CosetVariant::FourthPowers : CosetVariant::Squares;
      try {
        const Coloring c = coset_coloring(*fam.mgroup, variant);
        const bool proper = !find_violating_edge(*fam.graph, c).has_value();
        const std::int64_t factor = variant == CosetVariant::Squares ? 2 : 4;
        append_coloring_result(w, cfg, c, factor * (fam.ring->size() + 1), proper, "full");
        if (proper) combined.cut_upper(c.palette);
      } catch (const PreconditionFailedError& e) {
        w.begin_object();
        w.key("error").value("PreconditionFailed");
        w.key("message").value(e.what());
        w.end_object();
      }
    } else if (bound == "greedy") {
      const Coloring c = greedy_dsatur(materialized());
      append_coloring_result(w, cfg, c, 0, true, "full");
      combined.cut_upper(c.palette);
    } else if (bound == "exact") {
      SolveOptions opt;
      opt.budget_seconds = cfg.budget_seconds;
      opt.max_vertices = cfg.exact_cap;
      const ChromaticResult r = exact_chromatic(materialized(), opt);
      append_json(w, r);
      combined.raise_lower(static_cast<double>(r.lower));
      combined.cut_upper(r.upper);
      if (r.exact) combined.exact = *r.exact;
      if (r.certificate) {
        w.key("certificate");
        append_coloring_result(w, cfg, *r.certificate, 0, true, "full");
      }
    } else if (bound == "lift") {
      if (fam.ring->kind() != Ring::Kind::ModularRing)
        throw BadArgumentError("lift applies to --ring zmod with n >= 2");
      const Ring base_ring = Ring::prime_field(fam.ring->characteristic());
      const auto base_group = std::make_shared<const MatrixGroup>(base_ring, 2, cfg.enum_cap);
      const CayleyGraph base_graph = sing_graph(base_group, CayleyOptions{cfg.dense_cap});
      const Coloring base = theta_coloring(*base_group);
      const std::int64_t target_order = sl_order(*fam.ring, 2);
      w.begin_object();
      w.key("scheme_bound").value(8 * (fam.ring->characteristic() + 1));
      if (target_order <= cfg.enum_cap) {
        const Coloring lifted = lift_coloring(*fam.mgroup, *base_group, base_graph, base);
        const bool proper =
            !find_violating_edge(*fam.graph, lifted, cfg.threads).has_value();
        w.key("palette").value(static_cast<std::int64_t>(lifted.palette));
        w.key("proper").value(proper);
        w.key("verification").value("full");
        if (proper) combined.cut_upper(lifted.palette);
      } else {
        Rng rng(cfg.seed);
        const auto report = verify_lift_sampled(*fam.ring, *base_group, base_graph, base,
                                                static_cast<int>(cfg.samples), rng);
        w.key("palette").value(static_cast<std::int64_t>(base.palette));
        w.key("proper").value(report.violations == 0);
        w.key("verification").value("sampled");
        w.key("samples").value(report.samples);
        w.key("violations").value(report.violations);
        if (report.violations == 0) combined.cut_upper(base.palette);
      }
      w.end_object();
    } else {
      throw BadArgumentError("unknown bound: " + bound);
    }
  }
  w.end_object();  // bounds

  w.key("lower").value(combined.lower_int());
  w.key("upper");
  if (combined.upper >= 0) {
    w.value(combined.upper);
  } else {
    w.null();
  }
  w.key("exact");
  if (combined.exact) {
    w.value(*combined.exact);
  } else {
    w.null();
  }
  w.end_object();

  maybe_write_dimacs(cfg, *fam.graph);

  if (cfg.format == "csv") {
    std::string csv = "kind,value\nlower," + std::to_string(combined.lower_int()) + "\n";
    if (combined.upper >= 0) csv += "upper," + std::to_string(combined.upper) + "\n";
    if (combined.exact) csv += "exact," + std::to_string(*combined.exact) + "\n";
    emit(cfg, csv);
    return kExitOk;
  }
  if (cfg.format == "dimacs") {
    std::ostringstream os;
    write_dimacs(os, *fam.graph);
    emit(cfg, os.str());
    return kExitOk;
  }
  emit(cfg, w.str());
  return kExitOk;
}

}  // namespace singraph::cli
