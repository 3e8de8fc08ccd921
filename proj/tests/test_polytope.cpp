#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ontic/certifier.hpp"
#include "ontic/polytope.hpp"
#include "support.hpp"

using namespace ontic;
using namespace ontic::oracle;

namespace {

RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

VPolytope unit_cube() { return initial_ontic_polytope(2); }

HPolytope table1_system() {
  auto facets = table1_facets();
  const auto trivial = trivial_facets(3);
  facets.insert(facets.end(), trivial.facets().begin(), trivial.facets().end());
  return HPolytope(8, facets);
}

const VPolytope& qutrit33() {
  static const VPolytope v = enumerate_vertices(table1_system());
  return v;
}

std::set<RationalVector> vertex_set(const VPolytope& v) { return {v.vertices().begin(), v.vertices().end()}; }

bool one_hot_or_zero(const RationalVector& p, int d) {
  for (int k = 0; k <= d; ++k) {
    int ones = 0;
    for (int o = 0; o < d - 1; ++o) {
      const auto& x = p[static_cast<std::size_t>(k * (d - 1) + o)];
      if (x != 0 && x != 1) return false;
      ones += x == 1;
    }
    if (ones > 1) return false;
  }
  return true;
}

VPolytope shuffled(const VPolytope& v, unsigned seed) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), std::mt19937(seed));
  std::vector<RationalVector> verts;
  std::vector<std::uint64_t> labels;
  for (auto i : order) {
    verts.push_back(v.vertex(i));
    labels.push_back(v.label(i));
  }
  return VPolytope(v.ambient_dim(), verts, labels);
}

}  // namespace

TEST(InitialPolytope, QubitCube) {
  const auto v = unit_cube();
  EXPECT_EQ(v.size(), 8u);
  EXPECT_EQ(v.ambient_dim(), 3);
  std::set<RationalVector> cube;
  for (int m = 0; m < 8; ++m) cube.insert(rv({m & 1, (m >> 1) & 1, (m >> 2) & 1}));
  EXPECT_EQ(vertex_set(v), cube);
}

TEST(InitialPolytope, QubitLabelConvention) {
  // j = 5: j - 1 = 100 in binary, outcomes 0, 0, 1 for the three bases
  EXPECT_EQ(ontic_vertex(2, 5), rv({1, 1, 0}));
  EXPECT_EQ(ontic_vertex(2, 1), rv({1, 1, 1}));
  EXPECT_EQ(ontic_vertex(2, 8), rv({0, 0, 0}));
  EXPECT_EQ(ontic_label(rv({1, 1, 0}), 2), 5u);
  EXPECT_FALSE(ontic_label(rv({1, 2, 0}), 2).has_value());
}

TEST(InitialPolytope, QutritHas81OnticVertices) {
  const auto v = initial_ontic_polytope(3);
  EXPECT_EQ(v.size(), 81u);
  EXPECT_EQ(v.ambient_dim(), 8);
  for (std::size_t i = 0; i < v.size(); ++i) {
    EXPECT_EQ(v.label(i), i + 1);
    EXPECT_TRUE(one_hot_or_zero(v.vertex(i), 3));
  }
  EXPECT_EQ(vertex_set(v).size(), 81u);
  EXPECT_TRUE(is_ontic(v, 3));
  // label 2: outcome 1 for the first basis, outcome 0 elsewhere
  EXPECT_EQ(ontic_vertex(3, 2), rv({0, 1, 1, 0, 1, 0, 1, 0}));
  // outcome 0 for the first basis, the omitted outcome elsewhere: j - 1 = 0 + 2*3 + 2*9 + 2*27
  EXPECT_EQ(ontic_vertex(3, 79), rv({1, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(VPolytope, RejectsDuplicates) {
  EXPECT_THROW(VPolytope(2, {rv({0, 0}), rv({0, 0})}), InputError);
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(row_of(canonicalize(rv({-2, -2, -2}), Rational(-4))), (std::vector<long>{-1, -1, -1, -2}));
  const RationalVector thirds{Rational(1, 3), Rational(2, 3)};
  EXPECT_EQ(row_of(canonicalize(thirds, Rational(1, 3))), (std::vector<long>{1, 2, 1}));
  EXPECT_EQ(row_of(canonicalize(rv({1, 1}), Rational(2), Sense::LessEqual)), (std::vector<long>{-1, -1, -2}));
  EXPECT_EQ(row_of(canonicalize(rv({0, 3}), Rational(0))), (std::vector<long>{0, 1, 0}));
  EXPECT_THROW(canonicalize(rv({0, 0}), Rational(1)), InputError);
}

TEST(Canonicalize, OrientsTowardOwner) {
  const auto cube = unit_cube();
  // the plane p1 = 1 with the cube on the <= side
  EXPECT_EQ(row_of(canonicalize(rv({2, 0, 0}), Rational(2), cube)), (std::vector<long>{-1, 0, 0, -1}));
}

TEST(HullFacets, UnitCube) {
  const auto h = hull_facets(unit_cube());
  const std::set<std::vector<long>> expected = {{1, 0, 0, 0},  {0, 1, 0, 0},  {0, 0, 1, 0},
                                                {-1, 0, 0, -1}, {0, -1, 0, -1}, {0, 0, -1, -1}};
  EXPECT_EQ(rows_of(h), expected);
}

TEST(HullFacets, QutritInitialIsProductOfSimplices) {
  const auto v = initial_ontic_polytope(3);
  const auto h = hull_facets(v);
  ASSERT_EQ(h.size(), 12u);
  EXPECT_EQ(rows_of(h), brute_force_facets(int_points(v), 1));
  EXPECT_EQ(h, trivial_facets(3));
}

TEST(HullFacets, QutritModelHas51FacetsMatchingOracle) {
  const auto& v = qutrit33();
  const auto h = hull_facets(v);
  EXPECT_EQ(h.size(), 51u);
  EXPECT_EQ(rows_of(h), brute_force_facets(int_points(v), 3));
}

TEST(HullFacets, ReproducesTable1RowOne) {
  const auto h = hull_facets(qutrit33());
  const std::vector<long> row1{-2, -1, -2, -1, 1, -1, -1, -2, -5};
  EXPECT_EQ(rows_of(h).count(row1), 1u);
  for (const auto& r : table1_rows()) EXPECT_EQ(rows_of(h).count(r), 1u);
}

TEST(HullFacets, ShippedFixtureIsTrivialPlusTable1) {
  std::set<std::vector<long>> fixture;
  for (const auto& row : fixture_rows("qutrit51.fct")) {
    std::vector<long> r;
    for (const auto& t : row) r.push_back(std::stol(t));
    fixture.insert(r);
  }
  EXPECT_EQ(fixture, rows_of(table1_system()));
  EXPECT_EQ(fixture.size(), 51u);
}

TEST(HullFacets, ShippedQubitFixtureMatchesCubeMinusCorner) {
  std::set<std::vector<long>> fixture;
  for (const auto& row : fixture_rows("qubit_p2.fct")) {
    std::vector<long> r;
    for (const auto& t : row) r.push_back(std::stol(t));
    fixture.insert(r);
  }
  const auto cube = initial_ontic_polytope(2);
  const auto cut = remove_vertex(cube, *cube.index_of_label(1));
  EXPECT_EQ(fixture, rows_of(hull_facets(cut)));
  EXPECT_EQ(fixture, brute_force_facets(int_points(cut), 2));
}

TEST(HullFacets, EveryFacetIsSupportingAndTight) {
  for (const auto& v : {unit_cube(), initial_ontic_polytope(3), qutrit33()}) {
    const auto pts = int_points(v);
    const auto h = hull_facets(v);
    for (const auto& f : h.facets()) {
      IntPoints tight;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const auto s = f.slack(v.vertex(i));
        EXPECT_GE(s, 0);
        if (s == 0) tight.push_back(pts[i]);
      }
      EXPECT_EQ(affine_rank(tight), v.ambient_dim() - 1);
    }
  }
}

TEST(HullFacets, IndependentOfVertexOrder) {
  const auto base = hull_facets(qutrit33());
  for (unsigned seed = 1; seed <= 5; ++seed) EXPECT_EQ(hull_facets(shuffled(qutrit33(), seed)), base);
}

TEST(HullFacets, DegenerateInputNamesAffineRank) {
  const VPolytope square(3, {rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}), rv({1, 1, 0})});
  try {
    hull_facets(square);
    FAIL();
  } catch (const DegenerateInput& e) {
    EXPECT_EQ(e.affine_dimension(), 2);
    EXPECT_NE(std::string(e.what()).find("affine rank 2"), std::string::npos);
  }
  EXPECT_EQ(affine_dimension(square), 2);
  EXPECT_EQ(affine_dimension(unit_cube()), 3);
}

TEST(EnumerateVertices, CubeFromSixInequalities) {
  const auto v = enumerate_vertices(hull_facets(unit_cube()));
  EXPECT_EQ(vertex_set(v), vertex_set(unit_cube()));
}

TEST(EnumerateVertices, Table1SystemGives33OnticVertices) {
  const auto& v = qutrit33();
  ASSERT_EQ(v.size(), 33u);
  EXPECT_TRUE(is_ontic(v, 3));
  for (const auto& p : v.vertices()) EXPECT_TRUE(one_hot_or_zero(p, 3));
  for (std::size_t i = 1; i < v.size(); ++i) EXPECT_LT(v.label(i - 1), v.label(i));
}

TEST(EnumerateVertices, RoundTrips) {
  for (const auto& v : {unit_cube(), initial_ontic_polytope(3), qutrit33()}) {
    const auto h = hull_facets(v);
    const auto back = enumerate_vertices(h);
    EXPECT_EQ(vertex_set(back), vertex_set(v));
    EXPECT_EQ(back.labels(), v.labels());
    EXPECT_EQ(hull_facets(back), h);
  }
  EXPECT_EQ(hull_facets(enumerate_vertices(table1_system())), table1_system());
}

TEST(EnumerateVertices, NonOnticVerticesSortedLexicographically) {
  // the simplex conv{0, 2e1, 2e2}
  const HPolytope h(2, {canonicalize(rv({1, 0}), 0), canonicalize(rv({0, 1}), 0),
                        canonicalize(rv({1, 1}), 2, Sense::LessEqual)});
  const auto v = enumerate_vertices(h);
  EXPECT_EQ(v.vertices(), (std::vector<RationalVector>{rv({0, 0}), rv({0, 2}), rv({2, 0})}));
}

TEST(EnumerateVertices, UnboundedSystemGivesCertifyingRay) {
  const HPolytope orthant(3, {canonicalize(rv({1, 0, 0}), 0), canonicalize(rv({0, 1, 0}), 0),
                              canonicalize(rv({0, 0, 1}), 0), canonicalize(rv({-1, 0, 0}), -1)});
  try {
    enumerate_vertices(orthant);
    FAIL();
  } catch (const UnboundedPolyhedron& e) {
    const auto& r = e.ray();
    ASSERT_EQ(r.size(), 3u);
    bool nonzero = false;
    for (const auto& f : orthant.facets()) {
      Integer s = 0;
      for (std::size_t i = 0; i < 3; ++i) s += f.c[i] * r[i];
      EXPECT_GE(s, 0);
    }
    for (const auto& x : r) nonzero = nonzero || x != 0;
    EXPECT_TRUE(nonzero);
  }
  EXPECT_THROW(enumerate_vertices(HPolytope(3, {})), InputError);
}

TEST(Contains, CubeCenterAndVertices) {
  const auto cube = unit_cube();
  const RationalVector center{Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  EXPECT_TRUE(contains(cube, center));
  EXPECT_TRUE(contains(cube, std::vector<double>{0.5, 0.5, 0.5}, 1e-12));
  for (const auto& p : cube.vertices()) EXPECT_TRUE(contains(cube, p));
  for (const auto& p : qutrit33().vertices()) EXPECT_TRUE(contains(qutrit33(), p));
  EXPECT_FALSE(contains(cube, rv({2, 0, 0})));
  EXPECT_FALSE(contains(cube, std::vector<double>{1.1, 0.5, 0.5}, 1e-12));
}

TEST(Contains, ViolatingQubitStateOutsideSevenVertexPolytope) {
  const auto p2 = remove_vertex(unit_cube(), 0);  // label 1 is (1,1,1)
  const double q = (1 + 1 / std::sqrt(3.0)) / 2;
  EXPECT_FALSE(contains(p2, std::vector<double>{q, q, q}, 1e-12));
  EXPECT_TRUE(contains(unit_cube(), std::vector<double>{q, q, q}, 1e-12));
  const RationalVector near{Rational(2, 3), Rational(2, 3), Rational(2, 3)};
  EXPECT_TRUE(contains(p2, near));
  const RationalVector beyond{Rational(7, 10), Rational(7, 10), Rational(7, 10)};
  EXPECT_FALSE(contains(p2, beyond));
}

TEST(RemoveVertex, CubeMinusCorner) {
  const auto p2 = remove_vertex(unit_cube(), 0);
  EXPECT_EQ(p2.size(), 7u);
  EXPECT_FALSE(p2.index_of_label(1).has_value());
  EXPECT_EQ(p2.label(0), 2u);
  EXPECT_EQ(rows_of(hull_facets(p2)).count({-1, -1, -1, -2}), 1u);
  EXPECT_THROW(remove_vertex(p2, 7), InputError);
}

TEST(RemoveVertex, RemoveAndReAdd) {
  const auto v = initial_ontic_polytope(3);
  const auto r = remove_vertex(v, 40);
  EXPECT_EQ(r.size(), 80u);
  auto verts = r.vertices();
  auto labels = r.labels();
  verts.push_back(v.vertex(40));
  labels.push_back(v.label(40));
  EXPECT_EQ(vertex_set(VPolytope(8, verts, labels)), vertex_set(v));
}
