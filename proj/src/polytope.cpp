#include "ontic/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ontic/detail/double_description.hpp"
#include "ontic/mub.hpp"

namespace ontic {

namespace mp = boost::multiprecision;

Rational Facet::lhs(const RationalVector& p) const {
  if (p.size() != c.size()) throw InputError("point dimension does not match facet");
  Rational s = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) s += Rational(c[i]) * p[i];
  return s;
}

double Facet::lhs(const std::vector<double>& p) const {
  if (p.size() != c.size()) throw InputError("point dimension does not match facet");
  double s = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) s += static_cast<double>(c[i]) * p[i];
  return s;
}

std::strong_ordering operator<=>(const Facet& a, const Facet& b) {
  const std::size_t n = std::min(a.c.size(), b.c.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.c.size() != b.c.size()) return a.c.size() <=> b.c.size();
  if (a.f != b.f) return a.f < b.f ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const Facet& facet) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < facet.c.size(); ++i) os << (i ? ", " : "") << facet.c[i];
  os << " | " << facet.f << ")";
  return os.str();
}

VPolytope::VPolytope(int ambient_dim, std::vector<RationalVector> vertices, std::vector<std::uint64_t> labels)
    : ambient_dim_(ambient_dim), vertices_(std::move(vertices)), labels_(std::move(labels)) {
  if (ambient_dim_ < 1) throw InputError("ambient dimension must be positive");
  for (const auto& v : vertices_)
    if (static_cast<int>(v.size()) != ambient_dim_) throw InputError("vertex has wrong dimension");
  if (labels_.empty()) {
    labels_.resize(vertices_.size());
    std::iota(labels_.begin(), labels_.end(), std::uint64_t{1});
  }
  if (labels_.size() != vertices_.size()) throw InputError("label count differs from vertex count");
  auto sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("duplicate vertex");
}

std::optional<std::size_t> VPolytope::index_of_label(std::uint64_t label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

HPolytope::HPolytope(int ambient_dim, std::vector<Facet> facets)
    : ambient_dim_(ambient_dim), facets_(std::move(facets)) {
  for (const auto& f : facets_)
    if (static_cast<int>(f.dim()) != ambient_dim_) throw InputError("facet has wrong dimension");
  std::sort(facets_.begin(), facets_.end());
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
}

DegenerateInput::DegenerateInput(int affine_dimension, int ambient_dimension)
    : InputError("vertices are not full-dimensional: affine rank " + std::to_string(affine_dimension) +
                 " in ambient dimension " + std::to_string(ambient_dimension)),
      affine_dimension_(affine_dimension) {}

namespace {

std::string ray_text(const IntegerVector& ray) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ray.size(); ++i) os << (i ? " " : "") << ray[i];
  return os.str();
}

}  // namespace

UnboundedPolyhedron::UnboundedPolyhedron(IntegerVector ray)
    : InputError("facet system is unbounded along ray (" + ray_text(ray) + ")"), ray_(std::move(ray)) {}

int mub_dim_from_ambient(int ambient_dim) {
  for (int d = 2; d * d - 1 <= ambient_dim; ++d)
    if (d * d - 1 == ambient_dim) return d;
  throw InputError("ambient dimension " + std::to_string(ambient_dim) + " is not d^2 - 1");
}

RationalVector ontic_vertex(int d, std::uint64_t label) {
  std::uint64_t total = 1;
  for (int k = 0; k <= d; ++k) total *= static_cast<std::uint64_t>(d);
  if (label < 1 || label > total) throw InputError("ontic label out of range");
  RationalVector p(static_cast<std::size_t>(d * d - 1), Rational(0));
  std::uint64_t rest = label - 1;
  for (int k = 0; k <= d; ++k) {
    const auto outcome = static_cast<int>(rest % static_cast<std::uint64_t>(d));
    rest /= static_cast<std::uint64_t>(d);
    if (outcome < d - 1) p[static_cast<std::size_t>(k * (d - 1) + outcome)] = 1;
  }
  return p;
}

std::optional<std::uint64_t> ontic_label(const RationalVector& p, int d) {
  if (p.size() != static_cast<std::size_t>(d * d - 1)) return std::nullopt;
  std::uint64_t label = 0;
  std::uint64_t place = 1;
  for (int k = 0; k <= d; ++k) {
    int outcome = d - 1;
    int ones = 0;
    for (int i = 0; i + 1 < d; ++i) {
      const auto& x = p[static_cast<std::size_t>(k * (d - 1) + i)];
      if (x == 1) {
        ++ones;
        outcome = i;
      } else if (x != 0) {
        return std::nullopt;
      }
    }
    if (ones > 1) return std::nullopt;
    label += place * static_cast<std::uint64_t>(outcome);
    place *= static_cast<std::uint64_t>(d);
  }
  return label + 1;
}

bool is_ontic(const VPolytope& v, int d) {
  if (v.ambient_dim() != d * d - 1) return false;
  return std::all_of(v.vertices().begin(), v.vertices().end(),
                     [d](const RationalVector& p) { return ontic_label(p, d).has_value(); });
}

VPolytope initial_ontic_polytope(int d) {
  if (d < 2 || !is_prime(d)) throw InputError("prime required: dimension " + std::to_string(d));
  std::uint64_t total = 1;
  for (int k = 0; k <= d; ++k) total *= static_cast<std::uint64_t>(d);
  std::vector<RationalVector> vertices;
  std::vector<std::uint64_t> labels;
  vertices.reserve(total);
  for (std::uint64_t j = 1; j <= total; ++j) {
    vertices.push_back(ontic_vertex(d, j));
    labels.push_back(j);
  }
  return VPolytope(d * d - 1, std::move(vertices), std::move(labels));
}

HPolytope trivial_facets(int d) {
  const int dim = d * d - 1;
  std::vector<Facet> facets;
  for (int i = 0; i < dim; ++i) {
    Facet f{IntegerVector(static_cast<std::size_t>(dim), Integer(0)), Integer(0)};
    f.c[static_cast<std::size_t>(i)] = 1;
    facets.push_back(std::move(f));
  }
  for (int k = 0; k <= d; ++k) {
    Facet f{IntegerVector(static_cast<std::size_t>(dim), Integer(0)), Integer(-1)};
    for (int i = 0; i + 1 < d; ++i) f.c[static_cast<std::size_t>(k * (d - 1) + i)] = -1;
    facets.push_back(std::move(f));
  }
  return HPolytope(dim, std::move(facets));
}

namespace {

/// Row (1, v) scaled to integers.
detail::BigVector homogenized_row(const RationalVector& v) {
  Integer den = 1;
  for (const auto& x : v) {
    const Integer dx = mp::denominator(x);
    den = den / mp::gcd(den, dx) * dx;
  }
  detail::BigVector row;
  row.reserve(v.size() + 1);
  row.push_back(den);
  for (const auto& x : v) row.push_back(mp::numerator(x) * (den / mp::denominator(x)));
  return row;
}

std::vector<detail::BigVector> vertex_rows(const VPolytope& v) {
  auto sorted = v.vertices();
  std::sort(sorted.begin(), sorted.end());
  std::vector<detail::BigVector> rows;
  rows.reserve(sorted.size());
  for (const auto& p : sorted) rows.push_back(homogenized_row(p));
  return rows;
}

}  // namespace

int affine_dimension(const VPolytope& v) {
  if (v.size() == 0) return -1;
  // Rank of the homogenized rows, via the cone routine's elimination.
  const auto rows = vertex_rows(v);
  const auto n = static_cast<std::size_t>(v.ambient_dim() + 1);
  return static_cast<int>(detail::extreme_rays(rows, n).rank) - 1;
}

HPolytope hull_facets(const VPolytope& v) {
  const int dim = v.ambient_dim();
  const auto n = static_cast<std::size_t>(dim + 1);
  const auto cone = detail::extreme_rays(vertex_rows(v), n);
  if (cone.rank < n) throw DegenerateInput(static_cast<int>(cone.rank) - 1, dim);

  // Ray (a0, c) of {(a0, c) : a0 + c . v >= 0 for all v}  <=>  c . p >= -a0.
  std::vector<Facet> facets;
  facets.reserve(cone.rays.size());
  for (const auto& ray : cone.rays) {
    Facet f;
    f.c.assign(ray.begin() + 1, ray.end());
    f.f = -ray[0];
    facets.push_back(std::move(f));
  }
  return HPolytope(dim, std::move(facets));
}

VPolytope enumerate_vertices(const HPolytope& h) {
  const int dim = h.ambient_dim();
  const auto n = static_cast<std::size_t>(dim + 1);
  // Cone {(t, x) : -f t + c . x >= 0, t >= 0}; rays with t > 0 are vertices.
  std::vector<detail::BigVector> rows;
  detail::BigVector t_row(n, Integer(0));
  t_row[0] = 1;
  rows.push_back(std::move(t_row));
  for (const auto& facet : h.facets()) {
    detail::BigVector row;
    row.reserve(n);
    row.push_back(-facet.f);
    row.insert(row.end(), facet.c.begin(), facet.c.end());
    rows.push_back(std::move(row));
  }
  const auto cone = detail::extreme_rays(rows, n);
  if (cone.rank < n) throw UnboundedPolyhedron(IntegerVector(cone.lineality.begin() + 1, cone.lineality.end()));

  std::vector<RationalVector> vertices;
  std::optional<IntegerVector> recession;
  for (const auto& ray : cone.rays) {
    if (ray[0] == 0) {
      recession = IntegerVector(ray.begin() + 1, ray.end());
      continue;
    }
    RationalVector p;
    p.reserve(static_cast<std::size_t>(dim));
    for (std::size_t i = 1; i < n; ++i) p.emplace_back(ray[i], ray[0]);
    vertices.push_back(std::move(p));
  }
  if (vertices.empty()) throw InputError("facet system is infeasible");
  if (recession) throw UnboundedPolyhedron(*recession);

  std::sort(vertices.begin(), vertices.end());
  int d = 0;
  try {
    d = mub_dim_from_ambient(dim);
  } catch (const InputError&) {
    d = 0;
  }
  if (d > 0) {
    std::vector<std::pair<std::uint64_t, RationalVector>> labelled;
    for (const auto& p : vertices) {
      auto j = ontic_label(p, d);
      if (!j) {
        labelled.clear();
        break;
      }
      labelled.emplace_back(*j, p);
    }
    if (!labelled.empty()) {
      std::sort(labelled.begin(), labelled.end());
      std::vector<RationalVector> vs;
      std::vector<std::uint64_t> labels;
      for (auto& [j, p] : labelled) {
        labels.push_back(j);
        vs.push_back(std::move(p));
      }
      return VPolytope(dim, std::move(vs), std::move(labels));
    }
  }
  return VPolytope(dim, std::move(vertices));
}

bool contains(const HPolytope& h, const RationalVector& point) {
  if (static_cast<int>(point.size()) != h.ambient_dim()) throw InputError("point dimension mismatch");
  return std::all_of(h.facets().begin(), h.facets().end(),
                     [&](const Facet& f) { return f.slack(point) >= 0; });
}

bool contains(const HPolytope& h, const std::vector<double>& point, double tol) {
  if (static_cast<int>(point.size()) != h.ambient_dim()) throw InputError("point dimension mismatch");
  return std::all_of(h.facets().begin(), h.facets().end(), [&](const Facet& f) {
    return f.lhs(point) >= static_cast<double>(f.f) - tol;
  });
}

bool contains(const VPolytope& v, const RationalVector& point) { return contains(hull_facets(v), point); }

bool contains(const VPolytope& v, const std::vector<double>& point, double tol) {
  return contains(hull_facets(v), point, tol);
}

VPolytope remove_vertex(const VPolytope& v, std::size_t index) {
  if (index >= v.size()) throw InputError("vertex index out of range");
  auto vertices = v.vertices();
  auto labels = v.labels();
  vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(index));
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(index));
  return VPolytope(v.ambient_dim(), std::move(vertices), std::move(labels));
}

Facet canonicalize(const RationalVector& normal, const Rational& offset, Sense sense) {
  if (std::all_of(normal.begin(), normal.end(), [](const Rational& x) { return x == 0; }))
    throw InputError("facet normal is zero");
  Integer den = mp::denominator(offset);
  for (const auto& x : normal) {
    const Integer dx = mp::denominator(x);
    den = den / mp::gcd(den, dx) * dx;
  }
  Facet f;
  for (const auto& x : normal) f.c.push_back(mp::numerator(x) * (den / mp::denominator(x)));
  f.f = mp::numerator(offset) * (den / mp::denominator(offset));
  Integer g = mp::abs(f.f);
  for (const auto& x : f.c) g = mp::gcd(g, mp::abs(x));
  for (auto& x : f.c) x /= g;
  f.f /= g;
  if (sense == Sense::LessEqual) {
    for (auto& x : f.c) x = -x;
    f.f = -f.f;
  }
  return f;
}

Facet canonicalize(const RationalVector& normal, const Rational& offset, const VPolytope& owner) {
  Facet f = canonicalize(normal, offset, Sense::GreaterEqual);
  bool below = false, above = false;
  for (const auto& p : owner.vertices()) {
    const auto s = f.slack(p);
    if (s < 0) below = true;
    if (s > 0) above = true;
  }
  if (below && above) throw InputError("hyperplane separates the polytope's vertices");
  if (below) return canonicalize(normal, offset, Sense::LessEqual);
  return f;
}

}  // namespace ontic
