#include <sstream>

#include "common.hpp"
#include "singraph/kloosterman.hpp"
#include "singraph/spectral.hpp"

namespace singraph::cli {

namespace {

void append_params(JsonWriter& w, const RunConfig& cfg, const BuiltFamily& fam) {
  w.key("family").value(cfg.family);
  w.key("graph").value(fam.description);
  w.key("ring").value(fam.ring->name());
  if (fam.graph) {
    w.key("vertices").value(fam.graph->num_vertices());
    w.key("degree").value(static_cast<std::int64_t>(fam.graph->degree()));
  }
}

}  // namespace

int cmd_spectrum(const RunConfig& cfg) {
  const BuiltFamily fam = build_family(cfg);
  const bool want_exact = cfg.method == "exact" || cfg.method == "both";
  const bool want_dense = cfg.method == "dense" || cfg.method == "both";
  if (!want_exact && !want_dense) throw BadArgumentError("--method must be exact, dense or both");

  std::optional<Spectrum> exact;
  std::optional<Spectrum> dense;
  if (want_exact) {
    if (cfg.family == "sing2" && fam.ring->is_field()) {
      exact = sing2_spectrum_exact(fam.ring->size());
    } else if (cfg.family == "hyperbola") {
      exact = hyperbola_spectrum(fam.ring->characteristic(), fam.ring->exponent());
    } else {
      throw BadArgumentError("no character-sum spectrum for this family; use --method dense");
    }
  }
  if (want_dense) {
    JacobiOptions jopt;
    jopt.dense_cap = cfg.dense_cap;
    dense = eig_dense(*fam.graph, jopt);
  }

  if (fam.graph) maybe_write_dimacs(cfg, *fam.graph);

  if (cfg.format == "csv") {
    emit(cfg, (exact ? *exact : *dense).to_csv());
    return kExitOk;
  }
  if (cfg.format == "dimacs") {
    std::ostringstream os;
    write_dimacs(os, *fam.graph);
    emit(cfg, os.str());
    return kExitOk;
  }

  JsonWriter w;
  w.begin_object();
  w.key("command").value("spectrum");
  append_params(w, cfg, fam);
  w.key("method").value(cfg.method);
  if (exact) {
    w.key("exact");
    append_json(w, *exact);
  }
  if (dense) {
    w.key("dense");
    append_json(w, *dense);
  }
  if (exact && dense) {
    w.key("multisets_match").value(exact->multiset_equal(*dense, 1e-6));
    w.key("tolerance").value(1e-6);
  }
  w.end_object();
  emit(cfg, w.str());
  return kExitOk;
}

}  // namespace singraph::cli
