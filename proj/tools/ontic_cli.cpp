// ontic: command-line front end for building, compressing and certifying
// deterministic ontological models of MUB measurement statistics.
//
// Exit codes: 0 success / certified, 1 certification or minimality failure,
// 2 malformed input or usage error. Nothing is written on exit 2.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ontic/certifier.hpp"
#include "ontic/factorization.hpp"
#include "ontic/io.hpp"
#include "ontic/mub.hpp"
#include "ontic/parallel.hpp"
#include "ontic/polytope.hpp"
#include "ontic/qstate.hpp"
#include "ontic/search.hpp"

namespace {

using namespace ontic;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

std::string dump(const io::json& j) { return j.dump(2) + "\n"; }

int check_dim(int d) {
  if (d < 2 || !is_prime(d)) throw InputError("prime required: --dim " + std::to_string(d));
  return d;
}

/// Parses "1-50" or "3,7,9" (or a mix: "1-5,9").
std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    if (part.empty()) continue;
    try {
      const auto dash = part.find('-');
      if (dash == std::string::npos) {
        seeds.push_back(std::stoull(part));
      } else {
        const auto lo = std::stoull(part.substr(0, dash));
        const auto hi = std::stoull(part.substr(dash + 1));
        if (hi < lo) throw InputError("empty seed range '" + part + "'");
        for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
      }
    } catch (const std::logic_error&) {
      throw InputError("bad seed list '" + text + "'");
    }
  }
  return seeds;
}

int cmd_mub_gen(int dim, const std::string& out) {
  const auto mub = build_mub(check_dim(dim));
  const auto check = verify_mub(mub);
  if (!check.pass) throw InputError("constructed MUB failed validation");
  write_file(out, dump(io::to_json(mub)));
  std::cout << "wrote " << mub.bases.size() << " bases of dimension " << mub.dim << " (" << mub.convention_id
            << ") to " << out << "\n"
            << "orthonormality deviation " << io::format_double(check.orthonormality_deviation)
            << ", unbiasedness deviation " << io::format_double(check.unbiasedness_deviation) << "\n";
  return kOk;
}

int cmd_polytope_initial(int dim, const std::string& out) {
  const auto v = initial_ontic_polytope(check_dim(dim));
  std::ostringstream os;
  io::write_vtx(os, v);
  if (out.empty()) {
    std::cout << os.str();
  } else {
    write_file(out, os.str());
    std::cout << "wrote " << v.size() << " ontic vertices to " << out << "\n";
  }
  return kOk;
}

int cmd_polytope_hull(const std::string& in, const std::string& out) {
  const auto v = io::read_vtx_file(in);
  const auto h = hull_facets(v);
  std::ostringstream os;
  io::write_fct(os, h);
  write_file(out, os.str());
  std::cout << v.size() << " vertices -> " << h.size() << " facets, wrote " << out << "\n";
  return kOk;
}

int cmd_polytope_vertices(const std::string& in, const std::string& out, bool add_trivial) {
  auto facets = io::read_fct_file(in);
  if (facets.empty()) throw InputError("facet file is empty");
  const int dim = static_cast<int>(facets.front().dim());
  if (add_trivial) {
    const auto trivial = trivial_facets(mub_dim_from_ambient(dim));
    facets.insert(facets.end(), trivial.facets().begin(), trivial.facets().end());
  }
  const HPolytope h(dim, std::move(facets));
  const auto v = enumerate_vertices(h);
  std::ostringstream os;
  io::write_vtx(os, v);
  write_file(out, os.str());
  std::cout << h.size() << " facets -> " << v.size() << " vertices, wrote " << out << "\n";
  return kOk;
}

int cmd_certify(const std::string& facets_path, const std::string& mub_path, const std::string& report_path,
                int jobs) {
  auto facets = io::read_fct_file(facets_path);
  const auto mub = io::mub_from_json(io::read_json_file(mub_path));
  const ProjectorList proj(mub);
  for (const auto& f : facets)
    if (f.dim() != proj.size())
      throw InputError("facet has " + std::to_string(f.dim()) + " coefficients, the MUB layout has " +
                       std::to_string(proj.size()));
  const HPolytope h(static_cast<int>(proj.size()), std::move(facets));
  const auto report = jobs > 1 ? certify_facets_parallel(h, proj, kSaturationEpsilon, jobs) : certify_facets(h, proj);

  for (const auto& cert : report.certificates)
    std::cout << to_string(cert.facet) << "  lambda_min " << std::fixed << std::setprecision(6) << cert.lambda_min
              << "  " << to_string(cert.status) << "\n";
  std::cout.unsetf(std::ios::floatfield);
  std::cout << report.certificates.size() << " facets, " << (report.pass ? "PASS" : "FAIL") << ", min margin "
            << io::format_double(report.min_margin) << "\n";
  if (!report_path.empty()) write_file(report_path, dump(io::to_json(report)));
  return report.pass ? kOk : kFailed;
}

int cmd_compress(int dim, std::uint64_t seed, const std::string& strategy, bool incremental,
                 const std::string& out, const std::string& trace_path) {
  const auto mub = build_mub(check_dim(dim));
  const ProjectorList proj(mub);
  SearchConfig cfg;
  cfg.seed = seed;
  cfg.strategy = parse_strategy(strategy);
  cfg.incremental_certification = incremental;

  const auto v0 = initial_ontic_polytope(dim);
  const auto result = compress(v0, proj, cfg);
  const auto doc = io::make_model_document(dim, result.model, seed, mub.convention_id);

  write_file(out, dump(io::to_json(doc)));
  if (!trace_path.empty()) write_file(trace_path, io::trace_jsonl(result.trace));
  std::cout << "omega " << result.model.size() << " (from " << v0.size() << "), "
            << (result.trace.certified ? "certified" : "NOT certified") << ", "
            << (result.trace.minimal ? "minimal" : "not minimal") << ", " << result.trace.hull_computations
            << " hull computations\n";
  return result.trace.certified ? kOk : kFailed;
}

int cmd_campaign(int dim, const std::string& seed_text, const std::string& strategy, bool incremental, int jobs,
                 const std::string& report_path) {
  const auto seeds = parse_seed_list(seed_text);
  const ProjectorList proj(build_mub(check_dim(dim)));
  SearchConfig cfg;
  cfg.strategy = parse_strategy(strategy);
  cfg.incremental_certification = incremental;
  const auto report = multi_seed(initial_ontic_polytope(dim), proj, seeds, cfg, jobs);

  bool all_ok = true;
  for (const auto& row : report.rows) {
    const bool ok = row.error.empty() && row.certified && row.minimal;
    all_ok = all_ok && ok;
    std::cout << "seed " << row.seed << ": "
              << (row.error.empty() ? "omega " + std::to_string(row.size) : "error: " + row.error)
              << (ok ? "" : "  [verification failed]") << "\n";
  }
  std::cout << "size histogram:";
  for (const auto& [size, count] : report.size_histogram) std::cout << " " << size << "x" << count;
  std::cout << "\n";
  if (report.best_row)
    std::cout << "best omega " << report.rows[*report.best_row].size << " (seed " << report.rows[*report.best_row].seed
              << ")\n";
  std::cout << report.total_hull_computations << " hull computations in " << io::format_double(report.wall_seconds)
            << " s\n";
  if (!report_path.empty()) write_file(report_path, dump(io::to_json(report)));
  return all_ok ? kOk : kFailed;
}

int cmd_build_model(const std::string& vtx, const std::string& out) {
  const auto v = io::read_vtx_file(vtx);
  const int d = mub_dim_from_ambient(v.ambient_dim());
  if (!is_ontic(v, d)) throw InputError("vertex file is not an ontic vertex set");
  const auto doc = io::make_model_document(d, v, std::nullopt, build_mub(check_dim(d)).convention_id);
  write_file(out, dump(io::to_json(doc)));
  std::cout << "wrote model with omega " << v.size() << " to " << out << "\n";
  return kOk;
}

int cmd_verify_model(const std::string& model_path, int jobs) {
  const auto doc = io::model_from_json(io::read_json_file(model_path));
  const ProjectorList proj(build_mub(doc.dim));
  CertificationReport cert;
  try {
    const auto h = hull_facets(doc.vertices);
    cert = jobs > 1 ? certify_facets_parallel(h, proj, kSaturationEpsilon, jobs) : certify_facets(h, proj);
  } catch (const DegenerateInput& e) {
    std::cout << "model is not full-dimensional: " << e.what() << "\n";
    return kFailed;
  }
  std::cout << "omega " << doc.vertices.size() << ", " << cert.certificates.size() << " facets, "
            << (cert.pass ? "certified" : "NOT certified") << ", min margin " << io::format_double(cert.min_margin)
            << "\n";
  if (!cert.pass) {
    for (const auto& c : cert.certificates)
      if (!c.passes())
        std::cout << "violated facet " << to_string(c.facet) << " lambda_min " << io::format_double(c.lambda_min)
                  << "\n";
    return kFailed;
  }
  const auto minimal = jobs > 1 ? is_minimal_parallel(doc.vertices, proj, kSaturationEpsilon, jobs)
                                : is_minimal(doc.vertices, proj);
  if (!minimal.minimal) {
    std::cout << "not minimal: vertex " << doc.vertices.label(*minimal.removable_index) << " can be removed\n";
    return kFailed;
  }
  std::cout << "minimal: every single-vertex removal admits a violating quantum state\n";
  return kOk;
}

int cmd_decompose(const std::string& model_path, const std::string& state_path) {
  const auto doc = io::model_from_json(io::read_json_file(model_path));
  const auto state = io::state_from_json(io::read_json_file(state_path));
  if (state.dim() != doc.dim) throw InputError("state and model dimensions differ");
  const ProjectorList proj(build_mub(doc.dim));
  const auto p = born_probabilities(state, proj);

  std::vector<double> w;
  try {
    w = decompose_state(p, doc.vertices);
  } catch (const InfeasibleState& e) {
    std::cout << "infeasible: violated facet " << to_string(e.facet()) << " by "
              << io::format_double(-e.violation()) << "\n";
    return kFailed;
  }
  RealMatrix prep(w.size(), 1);
  for (std::size_t j = 0; j < w.size(); ++j) prep(j, 0) = w[j];
  const double residual = factorization_residual(doc.model, prep, table_from_probabilities({p}));

  for (std::size_t j = 0; j < w.size(); ++j)
    if (w[j] != 0.0) std::cout << "ontic " << doc.vertices.label(j) << " weight " << io::format_double(w[j]) << "\n";
  std::cout << "residual " << io::format_double(residual) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ontic: economical deterministic ontological models for MUB measurements"};
  app.require_subcommand(1);

  int dim = 0;
  int jobs = 1;
  std::string in, out, facets, mub_path, report, model, state, trace, seeds;
  std::string strategy = "uniform-random";
  std::uint64_t seed = 0;
  bool add_trivial = false, incremental = false;

  auto* mub_gen = app.add_subcommand("mub-gen", "Write the complete MUB set for a prime dimension");
  mub_gen->add_option("--dim", dim, "Prime dimension d")->required();
  mub_gen->add_option("--out", out, "Output MUB JSON")->required();

  auto* poly = app.add_subcommand("polytope", "Polytope construction and conversion");
  poly->require_subcommand(1);
  auto* p_initial = poly->add_subcommand("initial", "All d^(d+1) ontic vertices as a .vtx file");
  p_initial->add_option("--dim", dim, "Prime dimension d")->required();
  p_initial->add_option("--out", out, "Output .vtx (stdout when omitted)");
  auto* p_hull = poly->add_subcommand("hull", "Exact facets of a vertex set");
  p_hull->add_option("--in", in, "Input .vtx")->required();
  p_hull->add_option("--out", out, "Output .fct")->required();
  auto* p_vertices = poly->add_subcommand("vertices", "Exact vertices of a facet system");
  p_vertices->add_option("--in", in, "Input .fct")->required();
  p_vertices->add_option("--out", out, "Output .vtx")->required();
  p_vertices->add_flag("--add-trivial", add_trivial, "Append the generated nonnegativity and block-sum facets");

  auto* certify = app.add_subcommand("certify", "Certify that no quantum state violates any facet");
  certify->add_option("--facets", facets, "Input .fct")->required();
  certify->add_option("--mub", mub_path, "MUB JSON")->required();
  certify->add_option("--report", report, "Certification report JSON");
  certify->add_option("--jobs", jobs, "OpenMP threads")->check(CLI::PositiveNumber);

  auto* comp = app.add_subcommand("compress", "Prune the initial ontic model by seeded search");
  comp->add_option("--dim", dim, "Prime dimension d")->required();
  comp->add_option("--seed", seed, "Search seed")->required();
  comp->add_option("--strategy", strategy, "uniform-random | fixed-order | fixed-order-resweep");
  comp->add_flag("--incremental", incremental, "Re-certify only facets created by each removal");
  comp->add_option("--out", out, "Output model JSON")->required();
  comp->add_option("--trace", trace, "Output trace JSONL");

  auto* camp = app.add_subcommand("campaign", "Run compress over many seeds and verify every result");
  camp->add_option("--dim", dim, "Prime dimension d")->required();
  camp->add_option("--seeds", seeds, "Seed list, e.g. 1-50 or 3,7,9")->required();
  camp->add_option("--strategy", strategy, "uniform-random | fixed-order | fixed-order-resweep");
  camp->add_flag("--incremental", incremental, "Re-certify only facets created by each removal");
  camp->add_option("--jobs", jobs, "OpenMP threads")->check(CLI::PositiveNumber);
  camp->add_option("--report", report, "Campaign report JSON");

  auto* build = app.add_subcommand("build-model", "Model JSON from an ontic .vtx file");
  build->add_option("--vertices", in, "Input .vtx")->required();
  build->add_option("--out", out, "Output model JSON")->required();

  auto* verify = app.add_subcommand("verify-model", "Re-run certification and minimality on a model");
  verify->add_option("--model", model, "Model JSON")->required();
  verify->add_option("--jobs", jobs, "OpenMP threads")->check(CLI::PositiveNumber);

  auto* decompose = app.add_subcommand("decompose", "Convex weights of a quantum state over a model's ontic states");
  decompose->add_option("--model", model, "Model JSON")->required();
  decompose->add_option("--state", state, "State JSON ({dim, rho} or {dim, psi})")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*mub_gen) return cmd_mub_gen(dim, out);
    if (*p_initial) return cmd_polytope_initial(dim, out);
    if (*p_hull) return cmd_polytope_hull(in, out);
    if (*p_vertices) return cmd_polytope_vertices(in, out, add_trivial);
    if (*certify) return cmd_certify(facets, mub_path, report, jobs);
    if (*comp) return cmd_compress(dim, seed, strategy, incremental, out, trace);
    if (*camp) return cmd_campaign(dim, seeds, strategy, incremental, jobs, report);
    if (*build) return cmd_build_model(in, out);
    if (*verify) return cmd_verify_model(model, jobs);
    if (*decompose) return cmd_decompose(model, state);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UncertifiedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
