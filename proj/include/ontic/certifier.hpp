#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ontic/linalg.hpp"
#include "ontic/mub.hpp"
#include "ontic/polytope.hpp"
#include "ontic/qstate.hpp"

namespace ontic {

inline constexpr double kSaturationEpsilon = 1e-9;

enum class CertificateStatus { Strict, Saturated, Violated };

const char* to_string(CertificateStatus s);

struct Certificate {
  Facet facet;
  double lambda_min = 0.0;
  double margin = 0.0;  // lambda_min - f
  CertificateStatus status = CertificateStatus::Strict;
  std::optional<QuantumState> witness;  // present iff violated

  bool passes() const { return status != CertificateStatus::Violated; }
};

/// sum_i c_i P_i over the independent-outcome projectors.
CMatrix facet_operator(const Facet& facet, const ProjectorList& proj);

/// Certify one facet: the smallest eigenvalue of its operator is the minimum
/// of sum_i c_i p_i over all quantum states, so the facet holds for every
/// state iff lambda_min >= f (up to epsilon).
Certificate certify_facet(const Facet& facet, const ProjectorList& proj, double epsilon = kSaturationEpsilon);

struct CertificationReport {
  std::vector<Certificate> certificates;  // canonical facet order
  bool pass = true;
  double min_margin = 0.0;  // 0 for an empty facet list
};

/// Serial reference: certify every facet in order.
CertificationReport certify_facets(const HPolytope& h, const ProjectorList& proj,
                                   double epsilon = kSaturationEpsilon);

/// hull_facets followed by certify_facets.
CertificationReport certify_polytope(const VPolytope& v, const ProjectorList& proj,
                                     double epsilon = kSaturationEpsilon);

/// The pure eigenstate achieving lambda_min and its probability vector.
/// Throws InputError on a certificate that is not violated.
std::pair<QuantumState, ProbabilityVector> violation_witness(const Certificate& cert, const ProjectorList& proj);

}  // namespace ontic
