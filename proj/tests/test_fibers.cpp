#include <gtest/gtest.h>

#include <set>

#include "latdeg/fibers.hpp"

using namespace latdeg;

namespace {

LatticeBasis worked() { return certify(LatticeBasis({1, -1, -1, 1}, {1, -1, 1, -1})); }

std::set<std::string> generator_strings(const SyzygyScan& s) {
  std::set<std::string> out;
  for (const auto& g : s.generators) out.insert(g.binomial.str());
  return out;
}

}  // namespace

TEST(FiberPoints, WorkedExample) {
  const auto b = worked();
  EXPECT_EQ(fiber_points({1, 0, 0, 1}, b), (std::vector<Point2>{{0, 0}, {1, 0}}));
  EXPECT_EQ(fiber_points({1, 1, 0, 0}, b), (std::vector<Point2>{{0, 0}}));
  EXPECT_EQ(fiber_points({0, 0, 0, 0}, b), (std::vector<Point2>{{0, 0}}));
}

TEST(FiberPoints, MatchesBruteForceBox) {
  const auto b = certify(LatticeBasis({2, -1, -1, 0}, {0, -1, -1, 2}));
  for (const ExponentVector& a : {ExponentVector{2, 1, 3, 0}, ExponentVector{0, 4, 0, 1}, ExponentVector{3, 3, 3, 3}}) {
    std::vector<Point2> brute;
    for (Exponent x = -20; x <= 20; ++x)
      for (Exponent y = -20; y <= 20; ++y)
        if ((a - b.apply(x, y)).is_nonnegative()) brute.push_back({x, y});
    EXPECT_EQ(fiber_points(a, b), brute) << a.str();
  }
}

TEST(FiberPoints, UnboundedFiber) {
  const LatticeBasis b({1, 1, 0, 0}, {0, 0, 1, -1});
  try {
    fiber_points({1, 1, 1, 1}, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnboundedFiber);
  }
}

TEST(FiberPolytope, Shapes) {
  const auto b = worked();
  const auto seg = fiber_polytope({1, 0, 0, 1}, b);
  EXPECT_EQ(seg.shape, PolytopeShape::Segment);
  EXPECT_TRUE(seg.primitive);
  const auto quad = fiber_polytope({2, 0, 1, 1}, b);
  EXPECT_EQ(quad.shape, PolytopeShape::Quadrangle);
  EXPECT_TRUE(quad.primitive);
  EXPECT_EQ(quad.vertices.size(), 4u);
  const auto pt = fiber_polytope({0, 0, 0, 0}, b);
  EXPECT_EQ(pt.shape, PolytopeShape::Point);
  EXPECT_TRUE(pt.primitive);
}

TEST(ConvexHull, DropsCollinearAndInteriorPoints) {
  const auto h = convex_hull({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {1, 2}});
  EXPECT_EQ(h, (std::vector<Point2>{{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  const auto p = polytope_of({{0, 0}, {1, 0}, {2, 0}});
  EXPECT_EQ(p.shape, PolytopeShape::Segment);
  EXPECT_FALSE(p.primitive);
}

TEST(SupportComplex, ReducedHomology) {
  // two monomials with disjoint support: two points, one component too many
  auto h = fiber_betti({{1, 0, 0, 1}, {0, 1, 1, 0}}, 4);
  EXPECT_EQ(h[1], 1u);
  // sharing a variable: contractible
  h = fiber_betti({{1, 1, 0, 0}, {0, 1, 1, 0}}, 4);
  EXPECT_EQ(h[1], 0u);
  // the worked quadrangle carries one second syzygy
  h = fiber_betti(make_fiber({2, 0, 1, 1}, worked()).monomials(worked()), 4);
  EXPECT_EQ(h[1], 0u);
  EXPECT_EQ(h[2], 0u);
  EXPECT_EQ(h[3], 1u);
}

TEST(Scan, WorkedExample) {
  const auto scan = enumerate_syzygy_fibers(worked(), 4);
  EXPECT_EQ(generator_strings(scan), (std::set<std::string>{"ad-bc", "ac-bd", "a^2-b^2", "c^2-d^2"}));
  for (const auto& g : scan.generators) EXPECT_EQ(g.degree, 2);
  ASSERT_EQ(scan.quadrangles.size(), 1u);
  EXPECT_EQ(scan.quadrangles[0].degree, 4);
  EXPECT_EQ(scan.betti_totals(), (std::vector<std::size_t>{1, 4, 4, 1, 0}));
  ASSERT_FALSE(scan.warnings.empty());
  EXPECT_NE(scan.warnings[0].find("truncated at weighted degree 4"), std::string::npos);
}

TEST(Scan, BelowGeneratorDegree) {
  const auto scan = enumerate_syzygy_fibers(worked(), 1);
  EXPECT_TRUE(scan.generators.empty());
  EXPECT_TRUE(scan.quadrangles.empty());
}

TEST(Scan, DefaultBound) { EXPECT_EQ(default_max_degree(worked()), 16); }

TEST(Scan, Invariants) {
  for (const LatticeBasis& raw : {LatticeBasis({1, -1, -1, 1}, {1, -1, 1, -1}), LatticeBasis({2, -1, -1, 0}, {0, -1, -1, 2}),
                                  LatticeBasis({3, -1, -2, 0, 0}, {0, 2, -1, 1, -2})}) {
    const LatticeBasis b = certify(raw);
    const auto scan = enumerate_syzygy_fibers(b, 14);
    const ExponentVector& w = b.weights();
    std::set<Binomial> gens;
    for (const auto& g : scan.generators) {
      EXPECT_TRUE(g.binomial.is_homogeneous(w));
      EXPECT_TRUE(is_member(g.binomial.exponent_difference(), b));
      gens.insert(g.binomial);
    }
    for (const auto& q : scan.quadrangles) {
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) EXPECT_TRUE(is_member(q.monomials[i] - q.monomials[j], b));
        const ExponentVector& m = q.monomials[i];
        const ExponentVector& next = q.monomials[(i + 1) % 4];
        const ExponentVector g = monomial_gcd(m, next);
        EXPECT_TRUE(gens.count(Binomial(m - g, next - g))) << "edge " << i << " of " << q.multidegree.str();
      }
    }
  }
}

TEST(Scan, FibersPartitionMonomials) {
  const LatticeBasis b = certify(LatticeBasis({2, -1, -1, 0}, {0, -1, -1, 2}));
  std::vector<ExponentVector> mons;
  for_each_monomial_of_degree(b.weights(), 4, [&](const ExponentVector& a) { mons.push_back(a); });
  for (const auto& a : mons) {
    std::set<ExponentVector> fa;
    for (const auto& m : make_fiber(a, b).monomials(b)) fa.insert(m);
    for (const auto& c : mons) {
      std::set<ExponentVector> fc;
      for (const auto& m : make_fiber(c, b).monomials(b)) fc.insert(m);
      if (fa.count(c))
        EXPECT_EQ(fa, fc);
      else
        for (const auto& m : fc) EXPECT_FALSE(fa.count(m));
    }
  }
}

TEST(Scan, CanonicalRepresentativeIsLexMin) {
  const auto b = worked();
  EXPECT_EQ(canonical_representative({0, 1, 1, 0}, b), (ExponentVector{0, 1, 1, 0}));
  EXPECT_EQ(canonical_representative({1, 0, 0, 1}, b), (ExponentVector{0, 1, 1, 0}));
}
