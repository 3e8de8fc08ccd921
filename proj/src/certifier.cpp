#include "ontic/certifier.hpp"

#include <algorithm>
#include <limits>

namespace ontic {

const char* to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::Strict:
      return "strict";
    case CertificateStatus::Saturated:
      return "saturated";
    case CertificateStatus::Violated:
      return "violated";
  }
  return "unknown";
}

CMatrix facet_operator(const Facet& facet, const ProjectorList& proj) {
  if (facet.dim() != proj.size()) throw InputError("facet dimension does not match the MUB layout");
  CMatrix c(static_cast<std::size_t>(proj.dim()));
  for (std::size_t i = 0; i < facet.dim(); ++i) {
    if (facet.c[i] == 0) continue;
    c += static_cast<double>(facet.c[i]) * proj[i];
  }
  return c;
}

Certificate certify_facet(const Facet& facet, const ProjectorList& proj, double epsilon) {
  auto eig = min_eigenpair(facet_operator(facet, proj));
  Certificate cert;
  cert.facet = facet;
  cert.lambda_min = eig.value;
  cert.margin = eig.value - static_cast<double>(facet.f);
  if (cert.margin > epsilon) {
    cert.status = CertificateStatus::Strict;
  } else if (cert.margin >= -epsilon) {
    cert.status = CertificateStatus::Saturated;
  } else {
    cert.status = CertificateStatus::Violated;
    cert.witness = QuantumState::pure(eig.vector);
  }
  return cert;
}

CertificationReport certify_facets(const HPolytope& h, const ProjectorList& proj, double epsilon) {
  CertificationReport report;
  report.certificates.reserve(h.size());
  double min_margin = std::numeric_limits<double>::infinity();
  for (const auto& facet : h.facets()) {
    auto cert = certify_facet(facet, proj, epsilon);
    min_margin = std::min(min_margin, cert.margin);
    if (!cert.passes()) report.pass = false;
    report.certificates.push_back(std::move(cert));
  }
  report.min_margin = report.certificates.empty() ? 0.0 : min_margin;
  return report;
}

CertificationReport certify_polytope(const VPolytope& v, const ProjectorList& proj, double epsilon) {
  return certify_facets(hull_facets(v), proj, epsilon);
}

std::pair<QuantumState, ProbabilityVector> violation_witness(const Certificate& cert, const ProjectorList& proj) {
  if (cert.status != CertificateStatus::Violated || !cert.witness)
    throw InputError("certificate is not a violation");
  return {*cert.witness, born_probabilities(*cert.witness, proj)};
}

}  // namespace ontic
