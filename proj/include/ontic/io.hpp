#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ontic/certifier.hpp"
#include "ontic/factorization.hpp"
#include "ontic/mub.hpp"
#include "ontic/polytope.hpp"
#include "ontic/qstate.hpp"
#include "ontic/search.hpp"

namespace ontic::io {

using json = nlohmann::json;

// Text formats. Lines starting with '#' and blank lines are ignored; tokens
// are whitespace separated. Coordinates are integers ("p/q" is accepted for
// rational vertices). Output uses LF line endings and no comments.

/// .vtx: one vertex per line. All lines must have the same width.
VPolytope read_vtx(std::istream& in);
void write_vtx(std::ostream& out, const VPolytope& v);

/// .fct: one facet per line, c_1 .. c_D then f, meaning sum c_i p_i >= f.
/// Returns the facets in file order; an empty file yields no facets.
std::vector<Facet> read_fct(std::istream& in);
void write_fct(std::ostream& out, const HPolytope& h);

VPolytope read_vtx_file(const std::string& path);
std::vector<Facet> read_fct_file(const std::string& path);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

json to_json(const MubSet& mub);
MubSet mub_from_json(const json& j);

json to_json(const QuantumState& state);
/// Accepts {"dim", "rho"} or, for pure states, {"dim", "psi"}.
QuantumState state_from_json(const json& j);

json to_json(const Facet& facet);
json to_json(const CertificationReport& report);

/// A deterministic ontic model as written by `compress` and read by
/// `verify-model` / `decompose`.
struct ModelDocument {
  int dim = 0;
  VPolytope vertices;
  OntologicalModel model;
  std::optional<std::uint64_t> seed;
  std::string convention_id;
};

ModelDocument make_model_document(int dim, const VPolytope& vertices, std::optional<std::uint64_t> seed,
                                  const std::string& convention_id);
json to_json(const ModelDocument& doc);
/// Validates shapes and that the stored measurement matrices are exactly the
/// deterministic matrices of the stored vertices.
ModelDocument model_from_json(const json& j);

/// One JSON object per event, newline terminated.
std::string trace_jsonl(const SearchTrace& trace);

json to_json(const CampaignReport& report);

json read_json_file(const std::string& path);

}  // namespace ontic::io
