#include "ontic/parallel.hpp"

#include <omp.h>

#include <chrono>
#include <limits>

namespace ontic {

int resolve_jobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

CertificationReport certify_facets_parallel(const HPolytope& h, const ProjectorList& proj, double epsilon,
                                            int jobs) {
  const auto n = static_cast<std::ptrdiff_t>(h.size());
  CertificationReport report;
  report.certificates.resize(h.size());
#pragma omp parallel for num_threads(resolve_jobs(jobs)) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) report.certificates[i] = certify_facet(h[i], proj, epsilon);

  double min_margin = std::numeric_limits<double>::infinity();
  for (const auto& c : report.certificates) {
    min_margin = std::min(min_margin, c.margin);
    if (!c.passes()) report.pass = false;
  }
  report.min_margin = report.certificates.empty() ? 0.0 : min_margin;
  return report;
}

MinimalityResult is_minimal_parallel(const VPolytope& v, const ProjectorList& proj, double epsilon, int jobs) {
  const auto n = static_cast<std::ptrdiff_t>(v.size());
  MinimalityResult r;
  r.worst_margins.resize(v.size());
#pragma omp parallel for num_threads(resolve_jobs(jobs)) schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) r.worst_margins[i] = detail::removal_margin(v, i, proj, epsilon);

  for (std::size_t i = 0; i < v.size(); ++i)
    if (r.worst_margins[i] >= -epsilon) {
      r.removable_index = i;
      break;
    }
  r.minimal = !r.removable_index.has_value();
  return r;
}

CampaignReport multi_seed_parallel(const VPolytope& v0, const ProjectorList& proj,
                                   const std::vector<std::uint64_t>& seeds, const SearchConfig& cfg, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.rows.resize(seeds.size());
  const auto n = static_cast<std::ptrdiff_t>(seeds.size());
#pragma omp parallel for num_threads(resolve_jobs(jobs)) schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) report.rows[i] = detail::run_seed(v0, proj, seeds[i], cfg);

  detail::finish_report(report);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ontic
