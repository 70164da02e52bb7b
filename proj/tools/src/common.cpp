#include "common.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace singraph::cli {

namespace {

std::int64_t env_int(const char* name, std::int64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const std::int64_t parsed = std::strtoll(v, &end, 10);
  if (end == v || *end != '\0' || parsed <= 0)
    throw BadArgumentError(std::string("bad value in $") + name);
  return parsed;
}

}  // namespace

void apply_env_caps(RunConfig& cfg) {
  cfg.enum_cap = env_int("SINGRAPH_ENUM_CAP", cfg.enum_cap);
  cfg.dense_cap = env_int("SINGRAPH_DENSE_CAP", cfg.dense_cap);
  cfg.exact_cap = static_cast<int>(env_int("SINGRAPH_EXACT_CAP", cfg.exact_cap));
}

Ring make_ring(const RunConfig& cfg) {
  if (cfg.family == "hyperbola" || cfg.ring_kind == "zmod") {
    if (cfg.p < 3) throw BadArgumentError("--p must be an odd prime");
    return Ring::modular_ring(cfg.p, cfg.n);
  }
  if (cfg.q < 2) throw BadArgumentError("--q must be a prime power >= 2");
  const auto [p, f] = factor_prime_power(cfg.q);
  return f == 1 ? Ring::prime_field(p) : Ring::extension_field(p, f);
}

BuiltFamily build_family(const RunConfig& cfg) {
  BuiltFamily out;
  out.ring = make_ring(cfg);
  CayleyOptions opt{cfg.dense_cap};
  if (cfg.family == "sing2") {
    out.mgroup = std::make_shared<const MatrixGroup>(*out.ring, 2, cfg.enum_cap);
    out.graph = sing_graph(out.mgroup, opt);
    out.description = "Sing_2(" + out.ring->name() + ")";
  } else if (cfg.family == "rank-le") {
    out.mgroup = std::make_shared<const MatrixGroup>(*out.ring, cfg.nmat, cfg.enum_cap);
    out.graph = rank_le_graph(out.mgroup, cfg.ell, opt);
    out.description = "RG_{" + std::to_string(cfg.nmat) + "," + std::to_string(cfg.ell) + "}(" +
                      out.ring->name() + ")";
  } else if (cfg.family == "hyperbola") {
    if (out.ring->size() * out.ring->size() > cfg.enum_cap)
      throw CapExceededError("hyperbola graph on " +
                             std::to_string(out.ring->size() * out.ring->size()) +
                             " vertices exceeds cap " + std::to_string(cfg.enum_cap));
    out.graph = hyperbola_graph(*out.ring, opt);
    out.description = "H(" + out.ring->name() + ")";
  } else {
    throw BadArgumentError("unknown family: " + cfg.family);
  }
  return out;
}

void emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out.empty()) {
    std::cout << payload << "\n";
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw Error("cannot open output file " + cfg.out);
  f << payload << "\n";
}

void maybe_write_dimacs(const RunConfig& cfg, const CayleyGraph& g) {
  if (cfg.dimacs_out.empty()) return;
  std::ofstream f(cfg.dimacs_out);
  if (!f) throw Error("cannot open DIMACS file " + cfg.dimacs_out);
  write_dimacs(f, g);
}

}  // namespace singraph::cli
