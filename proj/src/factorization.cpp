#include "ontic/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "ontic/simplex.hpp"

namespace ontic {

namespace {
constexpr double kStochasticTolerance = 1e-12;
constexpr double kDecompositionTolerance = 1e-9;

void check_column_stochastic(const RealMatrix& m, const char* what) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j) < -kStochasticTolerance) throw InputError(std::string(what) + " has a negative entry");
      s += m(i, j);
    }
    if (std::abs(s - 1.0) > kStochasticTolerance)
      throw InputError(std::string(what) + " is not column-stochastic");
  }
}
}  // namespace

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix shapes do not agree");
  RealMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

DataTable::DataTable(std::vector<RealMatrix> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    if (b.rows() != outcomes() || b.cols() != preparations()) throw InputError("data table blocks differ in shape");
    check_column_stochastic(b, "data table block");
  }
}

OntologicalModel::OntologicalModel(std::vector<RealMatrix> measurement, std::vector<std::uint64_t> labels)
    : measurement_(std::move(measurement)), labels_(std::move(labels)) {
  for (const auto& m : measurement_) {
    if (m.cols() != labels_.size() || m.rows() != outcomes())
      throw InputError("measurement matrices differ in shape");
    check_column_stochastic(m, "measurement matrix");
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0.0 && m(i, j) != 1.0) deterministic_ = false;
  }
}

InfeasibleState::InfeasibleState(Facet facet, double violation)
    : std::runtime_error("state lies outside the polytope; violated facet " + to_string(facet)),
      facet_(std::move(facet)),
      violation_(violation) {}

OntologicalModel deterministic_measurement_matrices(int d, const VPolytope& v) {
  if (v.ambient_dim() != d * d - 1) throw InputError("vertex dimension does not match d^2 - 1");
  std::vector<RealMatrix> ms(static_cast<std::size_t>(d + 1), RealMatrix(static_cast<std::size_t>(d), v.size()));
  std::vector<std::uint64_t> labels;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const auto& p = v.vertex(j);
    const auto label = ontic_label(p, d);
    if (!label) throw InputError("vertex " + std::to_string(j + 1) + " is not an ontic state");
    labels.push_back(*label);
    for (int k = 0; k <= d; ++k) {
      int outcome = d - 1;
      for (int i = 0; i + 1 < d; ++i)
        if (p[static_cast<std::size_t>(k * (d - 1) + i)] == 1) outcome = i;
      ms[static_cast<std::size_t>(k)](static_cast<std::size_t>(outcome), j) = 1.0;
    }
  }
  return OntologicalModel(std::move(ms), std::move(labels));
}

OntologicalModel prune_model(const OntologicalModel& model, const std::vector<std::size_t>& removed_indices) {
  std::set<std::size_t> removed(removed_indices.begin(), removed_indices.end());
  if (!removed.empty() && *removed.rbegin() >= model.omega()) throw InputError("ontic index out of range");
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < model.omega(); ++j)
    if (!removed.count(j)) keep.push_back(j);

  std::vector<RealMatrix> ms;
  for (const auto& m : model.measurement_matrices()) {
    RealMatrix pruned(m.rows(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
      for (std::size_t i = 0; i < m.rows(); ++i) pruned(i, c) = m(i, keep[c]);
    ms.push_back(std::move(pruned));
  }
  std::vector<std::uint64_t> labels;
  for (auto j : keep) labels.push_back(model.labels()[j]);
  return OntologicalModel(std::move(ms), std::move(labels));
}

std::vector<double> decompose_state(const ProbabilityVector& p, const VPolytope& v) {
  if (p.size() != static_cast<std::size_t>(v.ambient_dim())) throw InputError("probability vector dimension mismatch");
  const std::size_t dim = p.size();
  const std::size_t omega = v.size();

  std::vector<std::vector<double>> a(dim + 1, std::vector<double>(omega, 0.0));
  std::vector<double> b(dim + 1, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < omega; ++j) a[i][j] = static_cast<double>(v.vertex(j)[i]);
    b[i] = p[i];
  }
  for (std::size_t j = 0; j < omega; ++j) a[dim][j] = 1.0;
  b[dim] = 1.0;

  auto lp = lp::find_feasible_point(a, b, kDecompositionTolerance);
  double residual = std::numeric_limits<double>::infinity();
  if (lp.feasible) {
    for (auto& w : lp.x) w = std::max(w, 0.0);
    residual = 0.0;
    for (std::size_t i = 0; i <= dim; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < omega; ++j) s += a[i][j] * lp.x[j];
      residual = std::max(residual, std::abs(s - b[i]));
    }
  }
  if (residual <= kDecompositionTolerance) return lp.x;

  const auto h = hull_facets(v);
  const Facet* worst = nullptr;
  double worst_slack = std::numeric_limits<double>::infinity();
  for (const auto& f : h.facets()) {
    const double s = f.lhs(p.entries()) - static_cast<double>(f.f);
    if (s < worst_slack) {
      worst_slack = s;
      worst = &f;
    }
  }
  if (worst == nullptr) throw InputError("polytope has no facets");
  throw InfeasibleState(*worst, worst_slack);
}

double factorization_residual(const OntologicalModel& model, const RealMatrix& preparations, const DataTable& table) {
  if (model.measurements() != table.measurements() || model.outcomes() != table.outcomes() ||
      preparations.rows() != model.omega() || preparations.cols() != table.preparations())
    throw InputError("model, preparation matrix and data table shapes disagree");
  double r = 0.0;
  for (std::size_t x = 0; x < model.measurements(); ++x) {
    const RealMatrix mp = model.measurement_matrices()[x] * preparations;
    const RealMatrix& d = table.blocks()[x];
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) r = std::max(r, std::abs(d(i, j) - mp(i, j)));
  }
  return r;
}

std::pair<OntologicalModel, RealMatrix> trivial_indeterministic_of(const DataTable& table) {
  std::vector<std::uint64_t> labels(table.preparations());
  for (std::size_t j = 0; j < labels.size(); ++j) labels[j] = j + 1;
  return {OntologicalModel(table.blocks(), std::move(labels)), RealMatrix::identity(table.preparations())};
}

std::vector<std::vector<double>> probvec_to_table_column(const ProbabilityVector& p) {
  const int d = p.dim();
  std::vector<std::vector<double>> cols;
  for (int k = 0; k <= d; ++k) {
    const double last = p.omitted(k);
    if (last < -1e-12 || last > 1.0 + 1e-12) throw InputError("implied omitted probability outside [0, 1]");
    std::vector<double> col;
    for (int i = 0; i < d; ++i) col.push_back(p.probability(k, i));
    cols.push_back(std::move(col));
  }
  return cols;
}

DataTable table_from_probabilities(const std::vector<ProbabilityVector>& columns) {
  if (columns.empty()) throw InputError("no preparations");
  const int d = columns.front().dim();
  std::vector<RealMatrix> blocks(static_cast<std::size_t>(d + 1), RealMatrix(static_cast<std::size_t>(d), columns.size()));
  for (std::size_t s = 0; s < columns.size(); ++s) {
    if (columns[s].dim() != d) throw InputError("probability vectors differ in dimension");
    const auto cols = probvec_to_table_column(columns[s]);
    for (int k = 0; k <= d; ++k)
      for (int i = 0; i < d; ++i) blocks[static_cast<std::size_t>(k)](static_cast<std::size_t>(i), s) = cols[k][i];
  }
  return DataTable(std::move(blocks));
}

}  // namespace ontic
