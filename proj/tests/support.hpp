#pragma once

// Shared fixtures and independent oracles for the unit and acceptance tests.
// The oracles deliberately avoid the library's own geometry and eigen code:
// facets come from brute-force enumeration of small integer normals with
// floating rank checks in Eigen, spectra come from Eigen's self-adjoint solver.

#include <Eigen/Dense>

#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ontic/linalg.hpp"
#include "ontic/polytope.hpp"

namespace ontic::oracle {

inline std::string fixture(const std::string& name) { return std::string(ONTIC_FIXTURES_DIR) + "/" + name; }

/// Non-comment lines of a fixture file, split into whitespace tokens.
inline std::vector<std::vector<std::string>> fixture_rows(const std::string& name) {
  std::ifstream in(fixture(name));
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (!tokens.empty()) rows.push_back(tokens);
  }
  return rows;
}

/// table1.fct rows as plain integers: c_1 .. c_8, f.
inline std::vector<std::vector<long>> table1_rows() {
  std::vector<std::vector<long>> out;
  for (const auto& row : fixture_rows("table1.fct")) {
    std::vector<long> r;
    for (const auto& t : row) r.push_back(std::stol(t));
    out.push_back(r);
  }
  return out;
}

inline std::vector<double> table1_lambdas() {
  std::vector<double> out;
  for (const auto& row : fixture_rows("table1.lambda")) out.push_back(std::stod(row.at(0)));
  return out;
}

inline Facet facet_of(const std::vector<long>& row) {
  Facet f;
  for (std::size_t i = 0; i + 1 < row.size(); ++i) f.c.emplace_back(row[i]);
  f.f = row.back();
  return f;
}

inline std::vector<Facet> table1_facets() {
  std::vector<Facet> out;
  for (const auto& r : table1_rows()) out.push_back(facet_of(r));
  return out;
}

inline Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd e(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) e(i, j) = m(i, j);
  return e;
}

inline double oracle_min_eigenvalue(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
  return solver.eigenvalues().minCoeff();
}

/// Integer point set used by the brute-force facet oracle.
using IntPoints = std::vector<std::vector<int>>;

inline IntPoints int_points(const VPolytope& v) {
  IntPoints out;
  for (const auto& vertex : v.vertices()) {
    std::vector<int> p;
    for (const auto& x : vertex) p.push_back(static_cast<int>(boost::multiprecision::numerator(x)));
    out.push_back(p);
  }
  return out;
}

inline int affine_rank(const IntPoints& pts) {
  if (pts.size() < 2) return 0;
  const auto n = static_cast<Eigen::Index>(pts[0].size());
  Eigen::MatrixXd m(static_cast<Eigen::Index>(pts.size() - 1), n);
  for (std::size_t r = 1; r < pts.size(); ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(static_cast<Eigen::Index>(r - 1), c) = pts[r][c] - pts[0][c];
  return static_cast<int>(Eigen::FullPivLU<Eigen::MatrixXd>(m).rank());
}

/// Every facet of conv(pts) whose primitive normal has entries in [-k, k]:
/// enumerate all such normals c, take f = min_v c.v, and keep (c, f) when the
/// tight set spans a hyperplane. Rows are c_1 .. c_D, f.
inline std::set<std::vector<long>> brute_force_facets(const IntPoints& pts, int k) {
  const std::size_t dim = pts.at(0).size();
  std::set<std::vector<long>> facets;
  std::vector<int> c(dim, -k);
  for (;;) {
    int g = 0;
    for (int x : c) g = std::gcd(g, std::abs(x));
    if (g == 1) {
      long f = 0;
      bool first = true;
      for (const auto& p : pts) {
        long s = 0;
        for (std::size_t i = 0; i < dim; ++i) s += static_cast<long>(c[i]) * p[i];
        if (first || s < f) f = s;
        first = false;
      }
      IntPoints tight;
      for (const auto& p : pts) {
        long s = 0;
        for (std::size_t i = 0; i < dim; ++i) s += static_cast<long>(c[i]) * p[i];
        if (s == f) tight.push_back(p);
      }
      if (tight.size() >= dim && affine_rank(tight) == static_cast<int>(dim) - 1) {
        std::vector<long> row(c.begin(), c.end());
        row.push_back(f);
        facets.insert(row);
      }
    }
    std::size_t i = 0;
    while (i < dim && c[i] == k) c[i++] = -k;
    if (i == dim) break;
    ++c[i];
  }
  return facets;
}

inline std::vector<long> row_of(const Facet& f) {
  std::vector<long> row;
  for (const auto& x : f.c) row.push_back(static_cast<long>(x));
  row.push_back(static_cast<long>(f.f));
  return row;
}

inline std::set<std::vector<long>> rows_of(const HPolytope& h) {
  std::set<std::vector<long>> out;
  for (const auto& f : h.facets()) out.insert(row_of(f));
  return out;
}

}  // namespace ontic::oracle
