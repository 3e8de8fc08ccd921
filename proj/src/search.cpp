#include "ontic/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>

#include "ontic/parallel.hpp"
#include "ontic/rng.hpp"

namespace ontic {

const char* to_string(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::UniformRandom:
      return "uniform-random";
    case SearchStrategy::FixedOrder:
      return "fixed-order";
    case SearchStrategy::FixedOrderResweep:
      return "fixed-order-resweep";
  }
  return "unknown";
}

SearchStrategy parse_strategy(const std::string& name) {
  if (name == "uniform-random") return SearchStrategy::UniformRandom;
  if (name == "fixed-order") return SearchStrategy::FixedOrder;
  if (name == "fixed-order-resweep") return SearchStrategy::FixedOrderResweep;
  throw InputError("unknown strategy '" + name + "'");
}

UncertifiedInput::UncertifiedInput(Certificate violated)
    : std::runtime_error("input polytope is not certified; violated facet " + to_string(violated.facet)),
      certificate_(std::move(violated)) {}

namespace {

using CertificateCache = std::map<Facet, Certificate>;

struct Verdict {
  bool pass = false;
  std::optional<Certificate> violated;
  CertificateCache certified;  // all facets, filled only on pass
};

/// Certify facets in canonical order, stopping at the first violation.
Verdict judge(const HPolytope& h, const ProjectorList& proj, double eps, const CertificateCache* previous) {
  Verdict v;
  for (const auto& facet : h.facets()) {
    if (previous) {
      auto it = previous->find(facet);
      if (it != previous->end()) {
        v.certified.emplace(facet, it->second);
        continue;
      }
    }
    auto cert = certify_facet(facet, proj, eps);
    if (!cert.passes()) {
      v.violated = std::move(cert);
      v.certified.clear();
      return v;
    }
    v.certified.emplace(facet, std::move(cert));
  }
  v.pass = true;
  return v;
}

class Compressor {
 public:
  Compressor(const VPolytope& v0, const ProjectorList& proj, const SearchConfig& cfg)
      : current_(v0), proj_(proj), cfg_(cfg), rng_(cfg.seed) {
    if (!(cfg.epsilon > 0)) throw InputError("epsilon must be positive");
    ++trace_.hull_computations;
    auto verdict = judge(hull_facets(v0), proj, cfg.epsilon, nullptr);
    if (!verdict.pass) throw UncertifiedInput(std::move(*verdict.violated));
    cache_ = std::move(verdict.certified);
  }

  SearchResult run() {
    switch (cfg_.strategy) {
      case SearchStrategy::UniformRandom:
        run_random();
        break;
      case SearchStrategy::FixedOrder:
        run_fixed_pass(false);
        break;
      case SearchStrategy::FixedOrderResweep:
        while (run_fixed_pass(true) > 0) {
        }
        break;
    }
    trace_.certified = true;
    trace_.final_labels = current_.labels();
    trace_.minimal = std::all_of(current_.labels().begin(), current_.labels().end(),
                                 [&](std::uint64_t j) { return essential_.count(j) > 0; });
    return {current_, std::move(trace_)};
  }

 private:
  bool cap_reached(std::size_t commits) const {
    return cfg_.max_removals_per_pass && commits >= *cfg_.max_removals_per_pass;
  }

  void run_random() {
    std::size_t commits = 0;
    std::vector<std::size_t> candidates;
    for (;;) {
      if (cap_reached(commits)) return;
      candidates.clear();
      for (std::size_t i = 0; i < current_.size(); ++i)
        if (!essential_.count(current_.label(i))) candidates.push_back(i);
      if (candidates.empty()) return;
      const std::size_t pick = candidates[rng_.below(candidates.size())];
      if (attempt(pick)) ++commits;
    }
  }

  /// One pass in label order. With retest, essential marks are tried again.
  std::size_t run_fixed_pass(bool retest) {
    std::size_t commits = 0;
    const auto labels = current_.labels();
    for (auto label : labels) {
      if (cap_reached(commits)) break;
      if (!retest && essential_.count(label)) continue;
      const auto idx = current_.index_of_label(label);
      if (!idx) continue;
      if (attempt(*idx)) ++commits;
    }
    return commits;
  }

  bool attempt(std::size_t index) {
    const std::uint64_t label = current_.label(index);
    SearchEvent ev;
    ev.step = trace_.events.size() + 1;
    ev.vertex = label;

    VPolytope trial = remove_vertex(current_, index);
    ++trace_.hull_computations;
    std::optional<HPolytope> h;
    try {
      h = hull_facets(trial);
    } catch (const DegenerateInput&) {
      h.reset();
    }
    if (h) {
      auto verdict = judge(*h, proj_, cfg_.epsilon, cfg_.incremental_certification ? &cache_ : nullptr);
      if (verdict.pass) {
        ev.accepted = true;
        trace_.events.push_back(std::move(ev));
        current_ = std::move(trial);
        cache_ = std::move(verdict.certified);
        return true;
      }
      ev.violated_facet = verdict.violated->facet;
      ev.lambda_min = verdict.violated->lambda_min;
    }
    essential_.insert(label);
    trace_.events.push_back(std::move(ev));
    return false;
  }

  VPolytope current_;
  const ProjectorList& proj_;
  SearchConfig cfg_;
  Xoshiro256 rng_;
  CertificateCache cache_;
  std::set<std::uint64_t> essential_;
  SearchTrace trace_;
};

}  // namespace

SearchResult compress(const VPolytope& v0, const ProjectorList& proj, const SearchConfig& cfg) {
  return Compressor(v0, proj, cfg).run();
}

VPolytope replay(const VPolytope& v0, const SearchTrace& trace) {
  VPolytope v = v0;
  for (const auto& ev : trace.events) {
    if (!ev.accepted) continue;
    const auto idx = v.index_of_label(ev.vertex);
    if (!idx) throw InputError("trace removes a vertex that is not present");
    v = remove_vertex(v, *idx);
  }
  return v;
}

MinimalityResult is_minimal(const VPolytope& v, const ProjectorList& proj, double epsilon) {
  MinimalityResult r;
  r.worst_margins.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    r.worst_margins[i] = detail::removal_margin(v, i, proj, epsilon);
    if (r.worst_margins[i] >= -epsilon && !r.removable_index) r.removable_index = i;
  }
  r.minimal = !r.removable_index.has_value();
  return r;
}

namespace detail {

double removal_margin(const VPolytope& v, std::size_t index, const ProjectorList& proj, double epsilon) {
  try {
    return certify_polytope(remove_vertex(v, index), proj, epsilon).min_margin;
  } catch (const DegenerateInput&) {
    return -std::numeric_limits<double>::infinity();
  }
}

CampaignRow run_seed(const VPolytope& v0, const ProjectorList& proj, std::uint64_t seed, SearchConfig cfg) {
  CampaignRow row;
  row.seed = seed;
  cfg.seed = seed;
  try {
    auto result = compress(v0, proj, cfg);
    row.size = result.model.size();
    row.labels = result.model.labels();
    row.hull_computations = result.trace.hull_computations;
    // Independent re-verification before the row is trusted.
    row.certified = certify_polytope(result.model, proj, cfg.epsilon).pass;
    row.minimal = is_minimal(result.model, proj, cfg.epsilon).minimal;
    row.hull_computations += 1 + result.model.size();
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

void finish_report(CampaignReport& report) {
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    report.total_hull_computations += row.hull_computations;
    if (!row.error.empty() || !row.certified || !row.minimal) continue;
    ++report.size_histogram[row.size];
    if (!report.best_row || row.size < report.rows[*report.best_row].size) report.best_row = i;
  }
}

}  // namespace detail

CampaignReport multi_seed(const VPolytope& v0, const ProjectorList& proj, const std::vector<std::uint64_t>& seeds,
                          const SearchConfig& cfg, int jobs) {
  if (jobs > 1) return multi_seed_parallel(v0, proj, seeds, cfg, jobs);
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  for (auto seed : seeds) report.rows.push_back(detail::run_seed(v0, proj, seed, cfg));
  detail::finish_report(report);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ontic
