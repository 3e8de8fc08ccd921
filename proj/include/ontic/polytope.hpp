#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ontic/error.hpp"

namespace ontic {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Canonical facet inequality  sum_i c_i p_i >= f  with gcd(|c|, |f|) = 1.
struct Facet {
  IntegerVector c;
  Integer f;

  std::size_t dim() const { return c.size(); }
  Rational lhs(const RationalVector& p) const;
  double lhs(const std::vector<double>& p) const;
  /// lhs(p) - f
  Rational slack(const RationalVector& p) const { return lhs(p) - Rational(f); }

  friend bool operator==(const Facet&, const Facet&) = default;
  friend std::strong_ordering operator<=>(const Facet& a, const Facet& b);
};

std::string to_string(const Facet& facet);

/// Vertex representation. Every vertex carries a label: the ontic index j
/// (1-based) for ontic vertex sets, otherwise its 1-based position.
class VPolytope {
 public:
  VPolytope(int ambient_dim, std::vector<RationalVector> vertices, std::vector<std::uint64_t> labels = {});

  int ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const RationalVector& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<std::uint64_t>& labels() const { return labels_; }
  std::uint64_t label(std::size_t i) const { return labels_.at(i); }
  /// Index of the vertex with this label, if present.
  std::optional<std::size_t> index_of_label(std::uint64_t label) const;

 private:
  int ambient_dim_;
  std::vector<RationalVector> vertices_;
  std::vector<std::uint64_t> labels_;
};

/// Facet representation; facets are kept sorted and unique.
class HPolytope {
 public:
  HPolytope(int ambient_dim, std::vector<Facet> facets);

  int ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return facets_.size(); }
  const std::vector<Facet>& facets() const { return facets_; }
  const Facet& operator[](std::size_t i) const { return facets_.at(i); }

  friend bool operator==(const HPolytope&, const HPolytope&) = default;

 private:
  int ambient_dim_;
  std::vector<Facet> facets_;
};

/// Input vertices do not affinely span the ambient space.
class DegenerateInput : public InputError {
 public:
  DegenerateInput(int affine_dimension, int ambient_dimension);
  int affine_dimension() const { return affine_dimension_; }

 private:
  int affine_dimension_;
};

/// The facet system describes an unbounded set; `ray` is a recession direction.
class UnboundedPolyhedron : public InputError {
 public:
  explicit UnboundedPolyhedron(IntegerVector ray);
  const IntegerVector& ray() const { return ray_; }

 private:
  IntegerVector ray_;
};

/// d with d^2 - 1 == ambient_dim; throws InputError when there is none.
int mub_dim_from_ambient(int ambient_dim);

/// The ontic vertex with 1-based label j. Digit b_k of j - 1 in base d is the
/// outcome of basis k (k = 0 least significant); outcome o < d - 1 sets
/// p_o^(k) = 1, outcome d - 1 leaves the block zero.
RationalVector ontic_vertex(int d, std::uint64_t label);
/// Inverse of ontic_vertex; nullopt when the point is not one-hot-or-zero per block.
std::optional<std::uint64_t> ontic_label(const RationalVector& p, int d);
bool is_ontic(const VPolytope& v, int d);

/// All d^(d+1) ontic vertices, ordered by label.
VPolytope initial_ontic_polytope(int d);

/// p_i >= 0 for every coordinate and -sum(block) >= -1 for every basis block.
HPolytope trivial_facets(int d);

/// Affine dimension of the vertex set (-1 for the empty set).
int affine_dimension(const VPolytope& v);

/// Complete irredundant canonical facet list of a full-dimensional polytope,
/// exact. Throws DegenerateInput naming the affine dimension otherwise.
HPolytope hull_facets(const VPolytope& v);

/// Complete vertex list of a bounded full-dimensional facet system, exact.
/// Ontic vertex sets come back labelled and ordered by ontic label, anything
/// else in lexicographic order. Throws UnboundedPolyhedron, or InputError when
/// the system is empty.
VPolytope enumerate_vertices(const HPolytope& h);

bool contains(const HPolytope& h, const RationalVector& point);
bool contains(const HPolytope& h, const std::vector<double>& point, double tol);
/// Exact membership of a rational point in the convex hull.
bool contains(const VPolytope& v, const RationalVector& point);
/// Membership of a floating-point point, facets evaluated within tol.
bool contains(const VPolytope& v, const std::vector<double>& point, double tol);

VPolytope remove_vertex(const VPolytope& v, std::size_t index);

enum class Sense { GreaterEqual, LessEqual };

/// Primitive integer form of  normal . p (sense) offset, oriented as >=.
Facet canonicalize(const RationalVector& normal, const Rational& offset, Sense sense = Sense::GreaterEqual);
/// Orientation chosen so every vertex of `owner` satisfies the inequality.
Facet canonicalize(const RationalVector& normal, const Rational& offset, const VPolytope& owner);

}  // namespace ontic
