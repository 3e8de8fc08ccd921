#pragma once

// OpenMP variants of the embarrassingly parallel kernels. Each one produces
// exactly the output of its serial reference (certify_facets, is_minimal,
// multi_seed with jobs = 1); tests compare them element by element.

#include <cstdint>
#include <vector>

#include "ontic/certifier.hpp"
#include "ontic/search.hpp"

namespace ontic {

CertificationReport certify_facets_parallel(const HPolytope& h, const ProjectorList& proj,
                                            double epsilon = kSaturationEpsilon, int jobs = 0);

MinimalityResult is_minimal_parallel(const VPolytope& v, const ProjectorList& proj,
                                     double epsilon = kSaturationEpsilon, int jobs = 0);

CampaignReport multi_seed_parallel(const VPolytope& v0, const ProjectorList& proj,
                                   const std::vector<std::uint64_t>& seeds, const SearchConfig& cfg, int jobs = 0);

/// Number of threads a jobs value resolves to (0 = OpenMP default).
int resolve_jobs(int jobs);

}  // namespace ontic
