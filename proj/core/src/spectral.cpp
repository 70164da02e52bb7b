#include "singraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "singraph/ring.hpp"

namespace singraph {

Spectrum Spectrum::from_values(std::vector<double> values, double cluster_tol) {
  Spectrum s;
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  std::vector<SpectrumEntry> clusters;
  double sum = values[0];
  std::int64_t count = 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] - values[i - 1] > cluster_tol) {
      clusters.push_back({sum / static_cast<double>(count), count});
      sum = 0;
      count = 0;
    }
    sum += values[i];
    ++count;
  }
  clusters.push_back({sum / static_cast<double>(count), count});
  std::reverse(clusters.begin(), clusters.end());
  s.entries_ = std::move(clusters);
  return s;
}

Spectrum Spectrum::from_exact(const std::map<std::int64_t, std::int64_t>& mult_of_value) {
  Spectrum s;
  s.exact_ = true;
  for (auto it = mult_of_value.rbegin(); it != mult_of_value.rend(); ++it) {
    if (it->second <= 0) continue;
    s.entries_.push_back({static_cast<double>(it->first), it->second});
    s.exact_values_.push_back(it->first);
  }
  return s;
}

std::int64_t Spectrum::total_multiplicity() const {
  std::int64_t t = 0;
  for (const auto& e : entries_) t += e.multiplicity;
  return t;
}

double Spectrum::largest() const {
  if (entries_.empty()) throw EmptyGraphError("empty spectrum");
  return entries_.front().value;
}

double Spectrum::second_largest() const {
  if (entries_.empty()) throw EmptyGraphError("empty spectrum");
  if (entries_.front().multiplicity > 1) return entries_.front().value;
  if (entries_.size() < 2) throw EmptyGraphError("spectrum has a single eigenvalue");
  return entries_[1].value;
}

double Spectrum::smallest() const {
  if (entries_.empty()) throw EmptyGraphError("empty spectrum");
  return entries_.back().value;
}

double Spectrum::sum() const {
  double t = 0;
  for (const auto& e : entries_) t += e.value * static_cast<double>(e.multiplicity);
  return t;
}

bool Spectrum::multiset_equal(const Spectrum& o, double tol) const {
  if (total_multiplicity() != o.total_multiplicity()) return false;
  auto expand = [](const Spectrum& s) {
    std::vector<double> v;
    v.reserve(s.total_multiplicity());
    for (const auto& e : s.entries_)
      for (std::int64_t k = 0; k < e.multiplicity; ++k) v.push_back(e.value);
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto a = expand(*this), b = expand(o);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

std::string Spectrum::to_csv() const {
  std::string out = "value,multiplicity\n";
  char buf[64];
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (exact_) {
      out += std::to_string(exact_values_[i]);
    } else {
      std::snprintf(buf, sizeof buf, "%.12g", entries_[i].value);
      out += buf;
    }
    out += "," + std::to_string(entries_[i].multiplicity) + "\n";
  }
  return out;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, JacobiOptions opt) {
  if (n == 0) return {};
  if (static_cast<std::size_t>(n) * n != a.size())
    throw BadArgumentError("matrix size mismatch");

  double norm2 = 0;
  for (const double x : a) norm2 += x * x;
  const double target = opt.rel_tol * std::sqrt(norm2);
  const double target2 = target * target;
  // rotations below this threshold are skipped; the mass they leave behind
  // stays under target^2/8
  const double skip_eps = n > 1 ? target / (2.0 * n) : 0.0;

  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    double off2 = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off2 += 2.0 * a[p * n + q] * a[p * n + q];
    if (off2 <= target2 || n == 1) {
      std::vector<double> eig(n);
      for (int i = 0; i < n; ++i) eig[i] = a[i * n + i];
      std::sort(eig.begin(), eig.end());
      return eig;
    }

    // only the upper triangle is kept current
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[static_cast<std::size_t>(p) * n + q];
        if (std::abs(apq) <= skip_eps) continue;
        const double app = a[static_cast<std::size_t>(p) * n + p];
        const double aqq = a[static_cast<std::size_t>(q) * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e10) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        double* base = a.data();
        for (int k = 0; k < p; ++k) {
          double* kp = base + static_cast<std::size_t>(k) * n + p;
          double* kq = base + static_cast<std::size_t>(k) * n + q;
          const double x = *kp, y = *kq;
          *kp = c * x - s * y;
          *kq = s * x + c * y;
        }
        double* rowp = base + static_cast<std::size_t>(p) * n;
        for (int k = p + 1; k < q; ++k) {
          double* kq = base + static_cast<std::size_t>(k) * n + q;
          const double x = rowp[k], y = *kq;
          rowp[k] = c * x - s * y;
          *kq = s * x + c * y;
        }
        double* rowq = base + static_cast<std::size_t>(q) * n;
        for (int k = q + 1; k < n; ++k) {
          const double x = rowp[k], y = rowq[k];
          rowp[k] = c * x - s * y;
          rowq[k] = s * x + c * y;
        }
        a[static_cast<std::size_t>(p) * n + p] = app - t * apq;
        a[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;
        a[static_cast<std::size_t>(p) * n + q] = 0.0;
      }
    }
  }
  throw NoConvergenceError("Jacobi sweep limit reached");
}

Spectrum eig_dense(const Graph& g, JacobiOptions opt) {
  const int n = g.num_vertices();
  if (n > opt.dense_cap)
    throw CapExceededError("dense eigensolver refused " + std::to_string(n) + " vertices");
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u)
    for (const int v : g.neighbors(u)) a[static_cast<std::size_t>(u) * n + v] = 1.0;
  return Spectrum::from_values(jacobi_eigenvalues(std::move(a), n, opt), opt.cluster_tol);
}

Spectrum eig_dense(const CayleyGraph& g, JacobiOptions opt) {
  const std::int64_t n = g.num_vertices();
  if (n > opt.dense_cap)
    throw CapExceededError("dense eigensolver refused " + std::to_string(n) + " vertices");
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  g.for_each_edge([&](int i, int j) {
    a[static_cast<std::size_t>(i) * n + j] = 1.0;
    a[static_cast<std::size_t>(j) * n + i] = 1.0;
  });
  return Spectrum::from_values(jacobi_eigenvalues(std::move(a), static_cast<int>(n), opt),
                               opt.cluster_tol);
}

std::string CharacterRow::label() const {
  switch (name) {
    case CharName::Trivial:
      return "trivial";
    case CharName::Psi:
      return "psi";
    case CharName::Chi:
      return "chi_" + std::to_string(index);
    case CharName::Theta:
      return "theta_" + std::to_string(index);
    case CharName::Xi1:
      return "xi_1";
    case CharName::Xi2:
      return "xi_2";
    case CharName::Eta1:
      return "eta_1";
    case CharName::Eta2:
      return "eta_2";
  }
  return "?";
}

std::vector<CharacterRow> sl2_character_table(std::int64_t q) {
  const auto [p, f] = factor_prime_power(q);
  (void)f;
  if (p == 2) throw BadArgumentError("character table needs odd q");
  const int eps = epsilon(q);
  const std::int64_t d = eps * q;

  const auto quad = [d](Rational a, Rational b) { return QuadValue(a, b, d); };
  const Rational half_eps(eps, 2);

  std::vector<CharacterRow> rows;
  rows.push_back({CharName::Trivial, 0, 1, QuadValue::integer(1), QuadValue::integer(1),
                  QuadValue::integer(1)});
  rows.push_back({CharName::Psi, 0, q, QuadValue::integer(q), QuadValue::integer(0),
                  QuadValue::integer(0)});
  for (int i = 1; i <= (q - 3) / 2; ++i) {
    const std::int64_t sign = i % 2 == 0 ? 1 : -1;
    rows.push_back({CharName::Chi, i, q + 1, QuadValue::integer(sign * (q + 1)),
                    QuadValue::integer(sign), QuadValue::integer(sign)});
  }
  for (int j = 1; j <= (q - 1) / 2; ++j) {
    const std::int64_t sign = j % 2 == 0 ? 1 : -1;
    rows.push_back({CharName::Theta, j, q - 1, QuadValue::integer(sign * (q - 1)),
                    QuadValue::integer(-sign), QuadValue::integer(-sign)});
  }
  const QuadValue plus = quad(half_eps, half_eps);    // (eps/2)(1 + sqrt(eps q))
  const QuadValue minus = quad(half_eps, -half_eps);  // (eps/2)(1 - sqrt(eps q))
  const QuadValue xi_center = quad(Rational(eps * (q + 1), 2), Rational(0));
  const QuadValue eta_center = quad(Rational(-eps * (q - 1), 2), Rational(0));
  rows.push_back({CharName::Xi1, 0, (q + 1) / 2, xi_center, plus, minus});
  rows.push_back({CharName::Xi2, 0, (q + 1) / 2, xi_center, minus, plus});
  rows.push_back({CharName::Eta1, 0, (q - 1) / 2, eta_center, minus, plus});
  rows.push_back({CharName::Eta2, 0, (q - 1) / 2, eta_center, plus, minus});

  std::int64_t dim2 = 0;
  for (const auto& r : rows) dim2 += r.dim * r.dim;
  if (dim2 != q * (q * q - 1)) throw Error("character table dimension check failed");
  return rows;
}

Rational sing2_eigenvalue(const CharacterRow& row, std::int64_t q) {
  const Rational class_size((q * q - 1) / 2);
  const QuadValue sum = row.at_minus_i + (row.at_t1 + row.at_t2).scaled(class_size);
  const QuadValue lambda = sum.scaled(Rational(1, row.dim));
  if (!lambda.is_rational())
    throw Error("character sum did not cancel the radical for " + row.label());
  return lambda.rational_part();
}

std::int64_t sing2_eigenvalue_closed_form(const CharacterRow& row, std::int64_t q) {
  switch (row.name) {
    case CharName::Trivial:
      return q * q;
    case CharName::Psi:
      return 1;
    case CharName::Chi:
      return row.index % 2 == 0 ? q : -q;
    case CharName::Theta:
      return row.index % 2 == 0 ? -q : q;
    case CharName::Xi1:
    case CharName::Xi2:
    case CharName::Eta1:
    case CharName::Eta2:
      return epsilon(q) * q;
  }
  throw Error("unknown character row");
}

Spectrum sing2_spectrum_exact(std::int64_t q) {
  std::map<std::int64_t, std::int64_t> mult;
  for (const CharacterRow& row : sl2_character_table(q)) {
    const Rational lambda = sing2_eigenvalue(row, q);
    if (!lambda.is_integer()) throw Error("non-integer eigenvalue from character sum");
    mult[lambda.num()] += row.dim * row.dim;
  }
  return Spectrum::from_exact(mult);
}

BoundValue hoffman_bound(const Spectrum& s) {
  const double lmin = s.smallest();
  if (lmin >= 0) throw EmptyGraphError("Hoffman bound needs a negative eigenvalue");
  const double l0 = s.largest();
  BoundValue out{1.0 - l0 / lmin, std::nullopt};
  if (s.exact()) {
    const std::int64_t e0 = s.exact_value(0);
    const std::int64_t emin = s.exact_value(s.entries().size() - 1);
    out.exact = Rational(emin - e0, emin);
    out.value = out.exact->to_double();
  }
  return out;
}

double sarnak_bound(const Spectrum& s, std::int64_t degree) {
  if (s.entries().empty()) throw EmptyGraphError("empty spectrum");
  if (std::abs(s.largest() - static_cast<double>(degree)) > 1e-6)
    throw BadArgumentError("top eigenvalue does not match the degree");
  if (s.entries().front().multiplicity != 1)
    throw DisconnectedError("degree eigenvalue is not simple");
  const double m = std::max(std::abs(s.second_largest()), std::abs(s.smallest()));
  if (m <= 0) throw BadArgumentError("trivial spectrum");
  return static_cast<double>(degree) / m;
}

double quasirandom_bound(double d, double set_size, double group_order) {
  if (d <= 0 || set_size <= 0 || group_order <= 0)
    throw BadArgumentError("quasirandom bound needs positive arguments");
  return std::sqrt(d * set_size / group_order);
}

}  // namespace singraph
