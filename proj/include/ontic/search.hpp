#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ontic/certifier.hpp"
#include "ontic/polytope.hpp"

namespace ontic {

enum class SearchStrategy {
  UniformRandom,     // draw a non-essential vertex uniformly at random
  FixedOrder,        // one pass in label order
  FixedOrderResweep  // label-order passes, re-testing every vertex, until a pass commits nothing
};

const char* to_string(SearchStrategy s);
SearchStrategy parse_strategy(const std::string& name);

struct SearchConfig {
  std::uint64_t seed = 0;
  double epsilon = kSaturationEpsilon;
  SearchStrategy strategy = SearchStrategy::UniformRandom;
  /// Stop a pass after this many committed removals. A capped run is not minimal.
  std::optional<std::size_t> max_removals_per_pass;
  /// Re-certify only facets absent from the previous accepted hull.
  bool incremental_certification = false;
};

struct SearchEvent {
  std::size_t step = 0;  // 1-based
  std::uint64_t vertex = 0;
  bool accepted = false;
  std::optional<Facet> violated_facet;  // first violated facet in canonical order
  std::optional<double> lambda_min;
};

struct SearchTrace {
  std::vector<SearchEvent> events;
  std::vector<std::uint64_t> final_labels;
  bool certified = false;
  bool minimal = false;
  std::size_t hull_computations = 0;
};

struct SearchResult {
  VPolytope model;
  SearchTrace trace;
};

/// The starting polytope already admits a quantum state outside it.
class UncertifiedInput : public std::runtime_error {
 public:
  explicit UncertifiedInput(Certificate violated);
  const Certificate& certificate() const { return certificate_; }

 private:
  Certificate certificate_;
};

/// Greedy vertex pruning with backtracking. A candidate vertex is removed
/// tentatively, the hull of the rest is certified, and the vertex is either
/// dropped for good or restored and marked essential. Ends when every
/// remaining vertex is essential. Deterministic given (v0, cfg).
SearchResult compress(const VPolytope& v0, const ProjectorList& proj, const SearchConfig& cfg);

/// Apply the accepted removals of a trace to v0.
VPolytope replay(const VPolytope& v0, const SearchTrace& trace);

struct MinimalityResult {
  bool minimal = false;
  std::optional<std::size_t> removable_index;  // smallest removable vertex index
  /// Per vertex: smallest certificate margin of the polytope with that vertex removed.
  std::vector<double> worst_margins;
};

/// Serial reference: remove each vertex in turn and certify the remainder.
MinimalityResult is_minimal(const VPolytope& v, const ProjectorList& proj, double epsilon = kSaturationEpsilon);

struct CampaignRow {
  std::uint64_t seed = 0;
  std::size_t size = 0;
  bool certified = false;
  bool minimal = false;
  std::size_t hull_computations = 0;
  std::vector<std::uint64_t> labels;
  std::string error;  // non-empty when the run failed
};

struct CampaignReport {
  std::vector<CampaignRow> rows;  // in seed-list order
  std::optional<std::size_t> best_row;
  std::map<std::size_t, std::size_t> size_histogram;
  std::size_t total_hull_computations = 0;
  double wall_seconds = 0.0;
};

/// Run compress once per seed (cfg.seed is overridden) and re-verify every
/// model with certify_polytope and is_minimal. jobs > 1 runs seeds on an
/// OpenMP team; rows stay in seed-list order either way.
CampaignReport multi_seed(const VPolytope& v0, const ProjectorList& proj, const std::vector<std::uint64_t>& seeds,
                          const SearchConfig& cfg = {}, int jobs = 1);

namespace detail {
/// Smallest certificate margin after removing vertex `index`; -infinity when
/// the remainder is not full-dimensional.
double removal_margin(const VPolytope& v, std::size_t index, const ProjectorList& proj, double epsilon);
CampaignRow run_seed(const VPolytope& v0, const ProjectorList& proj, std::uint64_t seed, SearchConfig cfg);
void finish_report(CampaignReport& report);
}  // namespace detail

}  // namespace ontic
