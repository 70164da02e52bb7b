#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singraph/cayley.hpp"
#include "singraph/exact.hpp"
#include "singraph/graph.hpp"

namespace singraph {

struct SpectrumEntry {
  double value;
  std::int64_t multiplicity;
};

// Multiset of adjacency eigenvalues, sorted descending. Exact spectra carry
// their integer values alongside the doubles.
class Spectrum {
 public:
  static Spectrum from_values(std::vector<double> values, double cluster_tol = 1e-6);
  static Spectrum from_exact(const std::map<std::int64_t, std::int64_t>& mult_of_value);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  bool exact() const { return exact_; }
  std::int64_t exact_value(std::size_t i) const { return exact_values_[i]; }
  std::int64_t total_multiplicity() const;
  double largest() const;
  double second_largest() const;  // second element of the sorted expansion
  double smallest() const;
  double sum() const;  // sum of value * multiplicity
  bool multiset_equal(const Spectrum& o, double tol) const;
  std::string to_csv() const;

 private:
  std::vector<SpectrumEntry> entries_;
  std::vector<std::int64_t> exact_values_;
  bool exact_ = false;
};

struct JacobiOptions {
  double rel_tol = 1e-9;   // off-diagonal Frobenius norm target, relative to |A|_F
  int max_sweeps = 100;
  double cluster_tol = 1e-6;
  std::int64_t dense_cap = 5000;
};

// Eigenvalues of a dense symmetric matrix (row-major) by cyclic Jacobi
// rotations; ascending. NoConvergence after max_sweeps.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, JacobiOptions opt = {});

Spectrum eig_dense(const Graph& g, JacobiOptions opt = {});
Spectrum eig_dense(const CayleyGraph& g, JacobiOptions opt = {});

enum class CharName { Trivial, Psi, Chi, Theta, Xi1, Xi2, Eta1, Eta2 };

// One row of the SL_2(F_q) character table restricted to the classes of -I,
// T1 and T2; the irrational entries live in Z[sqrt(eps q)]/2.
struct CharacterRow {
  CharName name;
  int index;  // i for chi_i, j for theta_j, 0 otherwise
  std::int64_t dim;
  QuadValue at_minus_i;
  QuadValue at_t1;
  QuadValue at_t2;
  std::string label() const;
};

// All irreducible characters of SL_2(F_q), q odd: trivial, psi, chi_i for
// i <= (q-3)/2, theta_j for j <= (q-1)/2, xi_1/2, eta_1/2. The squared
// dimensions sum to q(q^2-1).
std::vector<CharacterRow> sl2_character_table(std::int64_t q);

// lambda_rho = (chi(-I) + (q^2-1)/2 (chi(T1) + chi(T2))) / dim; the radical
// parts cancel exactly and the result is a plain integer.
Rational sing2_eigenvalue(const CharacterRow& row, std::int64_t q);

// Closed forms: 1 for psi, (-1)^i q for chi_i, (-1)^{j+1} q for theta_j,
// eps q for xi and eta, q^2 for the trivial character.
std::int64_t sing2_eigenvalue_closed_form(const CharacterRow& row, std::int64_t q);

// Spectrum of Sing_2(F_q) from the character sum, multiplicity dim^2 per row.
Spectrum sing2_spectrum_exact(std::int64_t q);

struct BoundValue {
  double value;
  std::optional<Rational> exact;
};

// chi >= 1 - lambda_max / lambda_min; EmptyGraph when lambda_min >= 0.
BoundValue hoffman_bound(const Spectrum& s);

// chi >= degree / max(|lambda_1|, |lambda_min|) for connected regular
// graphs; Disconnected when the degree eigenvalue is not simple.
double sarnak_bound(const Spectrum& s, std::int64_t degree);

// chi >= sqrt(D |S| / |G|) for D-quasirandom groups.
double quasirandom_bound(double d, double set_size, double group_order);

}  // namespace singraph
