#include "pgfr/spectrum.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace pgfr {

namespace {

// RepTable construction is the expensive part of spectrum queries; share
// one instance per group order.
std::shared_ptr<const RepTable> shared_rep_table(std::int64_t n) {
  static std::map<std::int64_t, std::shared_ptr<const RepTable>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto table = std::make_shared<const RepTable>(n);
  cache.emplace(n, table);
  return table;
}

}  // namespace

const SpectrumEntry& SpectrumTable::by_label(const IrrepLabel& label) const {
  for (const SpectrumEntry& e : entries)
    if (e.label == label) return e;
  throw std::invalid_argument("SpectrumTable: no entry for label " + label.name());
}

SpectrumTable eigenvalues(const ConnectionSet& s) {
  return eigenvalues(s, *shared_rep_table(s.n));
}

SpectrumTable eigenvalues(const ConnectionSet& s, const RepTable& reps) {
  require_valid(s);
  SpectrumTable table;
  table.n = s.n;
  table.field_order = reps.field_order();
  const auto set_elements = s.elements();
  for (const IrrepLabel& label : reps.labels()) {
    Cyclo sum = Cyclo::zero(reps.field_order());
    for (const GroupElement& g : set_elements) sum += reps.character(label, g);
    sum *= Rational(1, label.degree());
    SpectrumEntry entry;
    entry.label = label;
    entry.value = sum.to_double();
    entry.exact = std::move(sum);
    entry.multiplicity = static_cast<std::int64_t>(label.degree()) * label.degree();
    table.entries.push_back(std::move(entry));
  }
  return table;
}

Eigen::MatrixXcd eigenprojector(const IrrepLabel& label, const ConnectionSet& s) {
  require_valid(s);
  const auto reps = shared_rep_table(s.n);
  const std::int64_t order = 4 * s.n;
  const int d = label.degree();
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(order, order);
  // E = (d/|G|) * sum_{i,j} v_ij v_ij^H with v_ij(g) = rho_ij(g) over the
  // elements in vertex order.
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Eigen::VectorXcd v(order);
      for (std::int64_t u = 0; u < order; ++u)
        v(u) = reps->matrix(label, element_of({u}, s.n)).at(i, j).to_complex();
      proj.noalias() += v * v.adjoint();
    }
  proj *= static_cast<double>(d) / static_cast<double>(order);
  return proj;
}

TransitionMatrix transition_matrix(const ConnectionSet& s, double t) {
  WalkEvaluator eval(s);
  return {t, eval.full(t)};
}

Eigen::MatrixXcd dense_transition_matrix(const Eigen::MatrixXd& adjacency, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense_transition_matrix: eigendecomposition failed");
  const Eigen::VectorXd& lam = solver.eigenvalues();
  const Eigen::MatrixXd& vec = solver.eigenvectors();
  Eigen::VectorXcd phases(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    phases(i) = std::exp(std::complex<double>(0.0, t * lam(i)));
  return vec.cast<std::complex<double>>() * phases.asDiagonal() *
         vec.transpose().cast<std::complex<double>>();
}

WalkEvaluator::WalkEvaluator(const ConnectionSet& s) : n_(s.n), spectrum_(eigenvalues(s)) {
  for (const SpectrumEntry& e : spectrum_.entries) {
    eigenvalues_.push_back(e.value);
    projectors_.push_back(eigenprojector(e.label, s));
  }
}

std::complex<double> WalkEvaluator::entry(std::int64_t row, std::int64_t col, double t) const {
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t k = 0; k < eigenvalues_.size(); ++k)
    acc += std::exp(std::complex<double>(0.0, t * eigenvalues_[k])) * projectors_[k](row, col);
  return acc;
}

Eigen::VectorXcd WalkEvaluator::column(std::int64_t col, double t) const {
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(vertex_count());
  for (std::size_t k = 0; k < eigenvalues_.size(); ++k)
    acc += std::exp(std::complex<double>(0.0, t * eigenvalues_[k])) * projectors_[k].col(col);
  return acc;
}

Eigen::MatrixXcd WalkEvaluator::full(double t) const {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(vertex_count(), vertex_count());
  for (std::size_t k = 0; k < eigenvalues_.size(); ++k)
    acc += std::exp(std::complex<double>(0.0, t * eigenvalues_[k])) * projectors_[k];
  return acc;
}

Int ramanujan_sum(std::int64_t h, std::int64_t m) {
  if (m < 1) throw std::domain_error("ramanujan_sum: m must be >= 1");
  Cyclo acc = Cyclo::zero(m);
  const std::int64_t hm = ((h % m) + m) % m;
  for (std::int64_t z = 1; z <= m; ++z) {
    if (std::gcd(z, m) != 1) continue;
    acc += Cyclo::root_of_unity(m, z * hm);
  }
  if (!acc.is_rational())
    throw std::logic_error("ramanujan_sum: non-rational result (implementation bug)");
  const Rational q = acc.rational_part();
  if (rational_denominator(q) != 1)
    throw std::logic_error("ramanujan_sum: non-integer result (implementation bug)");
  return rational_numerator(q);
}

double alternating_cosine_sum(std::int64_t p, std::int64_t q, std::int64_t k, std::int64_t a) {
  if (p <= 1 || p % 2 == 0) throw std::domain_error("alternating_cosine_sum: p must be odd > 1");
  if (q < 1 || q % 2 == 0) throw std::domain_error("alternating_cosine_sum: q must be odd >= 1");
  if (k < 1) throw std::domain_error("alternating_cosine_sum: k must be >= 1");
  if (a < 0 || a >= k) throw std::domain_error("alternating_cosine_sum: a must lie in [0, k)");
  const double n = static_cast<double>(k) * static_cast<double>(p);
  double acc = 0.0;
  double sign = 1.0;
  for (std::int64_t j = 0; j < p; ++j, sign = -sign)
    acc += sign * std::cos(static_cast<double>(a + j * k) * static_cast<double>(q) * M_PI / n);
  return acc;
}

}  // namespace pgfr
