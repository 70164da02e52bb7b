#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "singraph/cayley.hpp"
#include "singraph/ring.hpp"
#include "singraph/serialize.hpp"

namespace singraph::cli {

// exit codes: 0 ok, 1 failed assertion, 2 cap violation, 3 bad arguments
inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitCap = 2;
inline constexpr int kExitBadArgs = 3;

struct RunConfig {
  std::string family = "sing2";  // sing2 | rank-le | hyperbola
  std::string ring_kind = "field";  // field | zmod
  std::int64_t q = 0;
  std::int64_t p = 0;
  int n = 1;     // ring exponent
  int nmat = 2;  // matrix dimension (rank-le)
  int ell = 1;

  std::string method = "exact";  // spectrum: exact | dense | both
  std::vector<std::string> bounds;
  std::string variant = "squares";  // coset variant
  std::int64_t quasirandom_d = 0;   // 0 = use the shipped lookup

  std::int64_t enum_cap = 20000;
  std::int64_t dense_cap = 5000;
  int exact_cap = 300;
  double budget_seconds = 60.0;

  std::string format = "json";  // json | csv | dimacs
  std::string out;              // empty = stdout
  std::string dimacs_out;
  std::uint64_t seed = 0;
  int threads = 1;

  // verify
  std::string suite;
  int trials = 100;
  std::int64_t d = 0;
  std::int64_t samples = 20000;
};

void apply_env_caps(RunConfig& cfg);

Ring make_ring(const RunConfig& cfg);

struct BuiltFamily {
  std::optional<Ring> ring;
  std::shared_ptr<const MatrixGroup> mgroup;  // matrix families only
  std::optional<CayleyGraph> graph;
  std::string description;
};

// Builds the requested graph family; enforces the enumeration cap.
BuiltFamily build_family(const RunConfig& cfg);

// Writes to cfg.out or stdout, with a trailing newline.
void emit(const RunConfig& cfg, const std::string& payload);

void maybe_write_dimacs(const RunConfig& cfg, const CayleyGraph& g);

int cmd_spectrum(const RunConfig& cfg);
int cmd_chi(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);

}  // namespace singraph::cli
