#include "ontic/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <regex>
#include <sstream>

namespace ontic::io {

namespace {

const std::regex kIntegerToken(R"(^[+-]?[0-9]+$)");
const std::regex kRationalToken(R"(^([+-]?[0-9]+)/([0-9]+)$)");

Integer parse_integer(const std::string& tok) {
  if (!std::regex_match(tok, kIntegerToken)) throw InputError("not an integer: '" + tok + "'");
  return Integer(tok[0] == '+' ? tok.substr(1) : tok);
}

Rational parse_rational(const std::string& tok) {
  std::smatch m;
  if (std::regex_match(tok, m, kRationalToken)) {
    const Integer den = parse_integer(m[2]);
    if (den == 0) throw InputError("zero denominator: '" + tok + "'");
    return Rational(parse_integer(m[1]), den);
  }
  return Rational(parse_integer(tok));
}

/// Token rows of a text file, skipping comments and blank lines.
std::vector<std::vector<std::string>> token_rows(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (!rows.empty() && rows.front().size() != toks.size()) throw InputError("rows have different widths");
    rows.push_back(std::move(toks));
  }
  return rows;
}

std::string rational_text(const Rational& x) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(x);
  if (boost::multiprecision::denominator(x) != 1) os << "/" << boost::multiprecision::denominator(x);
  return os.str();
}

json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError("complex numbers are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_json(const RealMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

VPolytope read_vtx(std::istream& in) {
  const auto rows = token_rows(in);
  if (rows.empty()) throw InputError("vertex file is empty");
  if (rows.front().empty()) throw InputError("vertex line has no coordinates");
  std::vector<RationalVector> vertices;
  for (const auto& r : rows) {
    RationalVector v;
    for (const auto& t : r) v.push_back(parse_rational(t));
    vertices.push_back(std::move(v));
  }
  const int dim = static_cast<int>(rows.front().size());
  // Ontic vertex files keep their ontic labels.
  int d = 0;
  try {
    d = mub_dim_from_ambient(dim);
  } catch (const InputError&) {
  }
  if (d > 0) {
    std::vector<std::uint64_t> labels;
    for (const auto& v : vertices) {
      auto j = ontic_label(v, d);
      if (!j) {
        labels.clear();
        break;
      }
      labels.push_back(*j);
    }
    if (labels.size() == vertices.size()) return VPolytope(dim, std::move(vertices), std::move(labels));
  }
  return VPolytope(dim, std::move(vertices));
}

void write_vtx(std::ostream& out, const VPolytope& v) {
  for (const auto& p : v.vertices()) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << rational_text(p[i]);
    out << '\n';
  }
}

std::vector<Facet> read_fct(std::istream& in) {
  const auto rows = token_rows(in);
  std::vector<Facet> facets;
  for (const auto& r : rows) {
    if (r.size() < 2) throw InputError("facet line needs at least one coefficient and an offset");
    Facet f;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) f.c.push_back(parse_integer(r[i]));
    f.f = parse_integer(r.back());
    facets.push_back(std::move(f));
  }
  return facets;
}

void write_fct(std::ostream& out, const HPolytope& h) {
  for (const auto& f : h.facets()) {
    for (const auto& c : f.c) out << c << ' ';
    out << f.f << '\n';
  }
}

VPolytope read_vtx_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_vtx(in);
}

std::vector<Facet> read_fct_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_fct(in);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

json to_json(const MubSet& mub) {
  json bases = json::array();
  for (const auto& basis : mub.bases) {
    json vs = json::array();
    for (const auto& v : basis) {
      json amps = json::array();
      for (const auto& a : v) amps.push_back(complex_json(a));
      vs.push_back(std::move(amps));
    }
    bases.push_back(std::move(vs));
  }
  return {{"dim", mub.dim}, {"convention_id", mub.convention_id}, {"bases", std::move(bases)}};
}

MubSet mub_from_json(const json& j) {
  MubSet m;
  try {
    m.dim = field(j, "dim").get<int>();
    m.convention_id = field(j, "convention_id").get<std::string>();
    for (const auto& basis : field(j, "bases")) {
      std::vector<ComplexVector> vs;
      for (const auto& v : basis) {
        ComplexVector amps;
        for (const auto& a : v) amps.push_back(complex_from_json(a));
        if (static_cast<int>(amps.size()) != m.dim) throw InputError("MUB vector has the wrong length");
        vs.push_back(std::move(amps));
      }
      m.bases.push_back(std::move(vs));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed MUB document: ") + e.what());
  }
  const auto check = verify_mub(m);
  if (!check.pass) throw InputError("MUB document does not describe a complete set of mutually unbiased bases");
  return m;
}

json to_json(const QuantumState& state) {
  json rho = json::array();
  for (std::size_t i = 0; i < state.rho().size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < state.rho().size(); ++k) row.push_back(complex_json(state.rho()(i, k)));
    rho.push_back(std::move(row));
  }
  return {{"dim", state.dim()}, {"rho", std::move(rho)}};
}

QuantumState state_from_json(const json& j) {
  try {
    const int d = field(j, "dim").get<int>();
    if (d < 2) throw InputError("state dimension must be >= 2");
    if (j.contains("psi")) {
      ComplexVector psi;
      for (const auto& a : j.at("psi")) psi.push_back(complex_from_json(a));
      if (static_cast<int>(psi.size()) != d) throw InputError("psi has the wrong length");
      return QuantumState::pure(psi);
    }
    const auto& rows = field(j, "rho");
    if (!rows.is_array() || static_cast<int>(rows.size()) != d) throw InputError("rho has the wrong shape");
    CMatrix rho(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) {
      if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != d) throw InputError("rho has the wrong shape");
      for (int c = 0; c < d; ++c) rho(r, c) = complex_from_json(rows[r][c]);
    }
    return QuantumState(std::move(rho));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed state document: ") + e.what());
  }
}

json to_json(const Facet& facet) {
  json c = json::array();
  for (const auto& x : facet.c) c.push_back(integer_json(x));
  return {{"c", std::move(c)}, {"f", integer_json(facet.f)}};
}

json to_json(const CertificationReport& report) {
  json facets = json::array();
  for (const auto& cert : report.certificates) {
    json e = to_json(cert.facet);
    e["lambda_min"] = cert.lambda_min;
    e["margin"] = cert.margin;
    e["status"] = to_string(cert.status);
    facets.push_back(std::move(e));
  }
  return {{"facets", std::move(facets)}, {"pass", report.pass}, {"min_margin", report.min_margin}};
}

ModelDocument make_model_document(int dim, const VPolytope& vertices, std::optional<std::uint64_t> seed,
                                  const std::string& convention_id) {
  return ModelDocument{dim, vertices, deterministic_measurement_matrices(dim, vertices), seed, convention_id};
}

json to_json(const ModelDocument& doc) {
  json vertices = json::array();
  for (const auto& p : doc.vertices.vertices()) {
    json row = json::array();
    for (const auto& x : p) row.push_back(static_cast<int>(boost::multiprecision::numerator(x)));
    vertices.push_back(std::move(row));
  }
  json ms = json::array();
  for (const auto& m : doc.model.measurement_matrices()) ms.push_back(matrix_json(m));
  json provenance = {{"seed", doc.seed ? json(*doc.seed) : json(nullptr)}, {"convention_id", doc.convention_id}};
  return {{"dim", doc.dim},
          {"omega", doc.model.omega()},
          {"labels", doc.model.labels()},
          {"vertices", std::move(vertices)},
          {"measurement_matrices", std::move(ms)},
          {"deterministic", doc.model.deterministic()},
          {"provenance", std::move(provenance)}};
}

ModelDocument model_from_json(const json& j) {
  try {
    const int d = field(j, "dim").get<int>();
    if (d < 2 || !is_prime(d)) throw InputError("model dimension must be a prime >= 2");
    const int dim = d * d - 1;
    std::vector<RationalVector> vertices;
    for (const auto& row : field(j, "vertices")) {
      RationalVector p;
      for (const auto& x : row) {
        const int v = x.get<int>();
        if (v != 0 && v != 1) throw InputError("model vertices must be 0/1");
        p.emplace_back(v);
      }
      if (static_cast<int>(p.size()) != dim) throw InputError("model vertex has the wrong dimension");
      vertices.push_back(std::move(p));
    }
    const auto labels = field(j, "labels").get<std::vector<std::uint64_t>>();
    VPolytope v(dim, std::move(vertices), labels);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (ontic_label(v.vertex(i), d) != v.label(i)) throw InputError("model label does not match its vertex");
    if (field(j, "omega").get<std::size_t>() != v.size()) throw InputError("omega does not match the vertex count");

    const auto& prov = field(j, "provenance");
    std::optional<std::uint64_t> seed;
    if (prov.contains("seed") && !prov.at("seed").is_null()) seed = prov.at("seed").get<std::uint64_t>();
    auto doc = make_model_document(d, v, seed, field(prov, "convention_id").get<std::string>());

    const auto& ms = field(j, "measurement_matrices");
    if (ms.size() != doc.model.measurement_matrices().size())
      throw InputError("measurement matrix count does not match the dimension");
    for (std::size_t x = 0; x < ms.size(); ++x) {
      const auto& expected = doc.model.measurement_matrices()[x];
      if (ms[x].size() != expected.rows()) throw InputError("measurement matrix has the wrong shape");
      for (std::size_t r = 0; r < expected.rows(); ++r) {
        if (ms[x][r].size() != expected.cols()) throw InputError("measurement matrix has the wrong shape");
        for (std::size_t c = 0; c < expected.cols(); ++c)
          if (ms[x][r][c].get<double>() != expected(r, c))
            throw InputError("measurement matrices do not match the vertices");
      }
    }
    if (field(j, "deterministic").get<bool>() != doc.model.deterministic())
      throw InputError("deterministic flag is inconsistent");
    return doc;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed model document: ") + e.what());
  }
}

std::string trace_jsonl(const SearchTrace& trace) {
  std::string out;
  for (const auto& ev : trace.events) {
    json e = {{"step", ev.step},
              {"vertex", ev.vertex},
              {"action", ev.accepted ? "commit" : "backtrack"},
              {"violated_facet", ev.violated_facet ? to_json(*ev.violated_facet) : json(nullptr)},
              {"lambda_min", ev.lambda_min ? json(*ev.lambda_min) : json(nullptr)}};
    out += e.dump();
    out += '\n';
  }
  return out;
}

json to_json(const CampaignReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    json row = {{"seed", r.seed},
                {"size", r.size},
                {"certified", r.certified},
                {"minimal", r.minimal},
                {"hull_computations", r.hull_computations},
                {"labels", r.labels}};
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(std::move(row));
  }
  json histogram = json::object();
  for (const auto& [size, count] : report.size_histogram) histogram[std::to_string(size)] = count;
  json best = nullptr;
  if (report.best_row) {
    const auto& r = report.rows[*report.best_row];
    best = {{"seed", r.seed}, {"size", r.size}, {"labels", r.labels}};
  }
  return {{"rows", std::move(rows)},
          {"best", std::move(best)},
          {"size_histogram", std::move(histogram)},
          {"total_hull_computations", report.total_hull_computations},
          {"wall_seconds", report.wall_seconds}};
}

}  // namespace ontic::io
