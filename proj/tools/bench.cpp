// Wall-clock comparison of the serial reference kernels and their OpenMP
// counterparts on the qutrit problem. Usage: ontic_bench [jobs] [seeds]

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "ontic/certifier.hpp"
#include "ontic/mub.hpp"
#include "ontic/parallel.hpp"
#include "ontic/polytope.hpp"
#include "ontic/search.hpp"

using namespace ontic;

namespace {

template <class F>
double seconds(F&& f, int repeats = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / repeats;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-22s serial %9.4f s   parallel %9.4f s   speedup %5.2fx   %s\n", name, serial, parallel,
              serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int jobs = resolve_jobs(argc > 1 ? std::atoi(argv[1]) : 0);
  const int n_seeds = argc > 2 ? std::atoi(argv[2]) : 8;
  std::printf("threads: %d\n", jobs);

  const ProjectorList proj(build_mub(3));
  const auto v0 = initial_ontic_polytope(3);

  // A compressed, certified model to run the per-facet and per-vertex kernels on.
  SearchConfig cfg;
  cfg.seed = 1;
  const auto model = compress(v0, proj, cfg).model;
  const auto h = hull_facets(model);

  {
    CertificationReport a, b;
    const double ts = seconds([&] { a = certify_facets(h, proj); }, 20);
    const double tp = seconds([&] { b = certify_facets_parallel(h, proj, kSaturationEpsilon, jobs); }, 20);
    bool same = a.certificates.size() == b.certificates.size() && a.min_margin == b.min_margin;
    for (std::size_t i = 0; same && i < a.certificates.size(); ++i)
      same = a.certificates[i].lambda_min == b.certificates[i].lambda_min;
    row("certify_facets", ts, tp, same);
  }
  {
    MinimalityResult a, b;
    const double ts = seconds([&] { a = is_minimal(model, proj); });
    const double tp = seconds([&] { b = is_minimal_parallel(model, proj, kSaturationEpsilon, jobs); });
    row("is_minimal", ts, tp, a.minimal == b.minimal && a.worst_margins == b.worst_margins);
  }
  {
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(n_seeds));
    std::iota(seeds.begin(), seeds.end(), 1);
    CampaignReport a, b;
    const double ts = seconds([&] { a = multi_seed(v0, proj, seeds, {}, 1); });
    const double tp = seconds([&] { b = multi_seed_parallel(v0, proj, seeds, {}, jobs); });
    bool same = a.rows.size() == b.rows.size();
    for (std::size_t i = 0; same && i < a.rows.size(); ++i) same = a.rows[i].labels == b.rows[i].labels;
    row("multi_seed", ts, tp, same);
  }
  return 0;
}
