#include <gtest/gtest.h>

#include "latdeg/hilbert.hpp"
#include "latdeg/quadrangle.hpp"

using namespace latdeg;

namespace {

DegreeProfile worked_profile() { return DegreeProfile::from_free(0, 0, 1, 1, 1, 1); }

HilbertNumerator poly(std::initializer_list<std::pair<int, int>> terms) {
  HilbertNumerator f;
  for (auto [d, c] : terms) f.add(d, c);
  return f;
}

std::vector<Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Numerator, WorkedExample) {
  const auto f = hilbert_numerator(worked_profile());
  EXPECT_EQ(f, poly({{0, 1}, {2, -4}, {3, 4}, {4, -1}}));
  EXPECT_EQ(f.str(), "1-4y^2+4y^3-y^4");
  EXPECT_EQ(f.value_at_one(), 0);
  EXPECT_EQ(f.derivative_at_one(1), 0);
  EXPECT_EQ(f.derivative_at_one(2), 4);
  EXPECT_EQ(degree_from_numerator(f), 2);
}

TEST(Numerator, CompleteIntersectionLike) {
  const auto prof = DegreeProfile::from_free(1, 1, 0, 0, 0, 0);
  const auto f = hilbert_numerator(prof);
  EXPECT_EQ(f, poly({{0, 1}, {1, -2}, {2, 1}}));
  EXPECT_EQ(degree_from_numerator(f), 1);
  EXPECT_EQ(degree_closed_form(prof), 1);
}

TEST(Numerator, NotCodimTwo) {
  EXPECT_EQ(code_of([] { degree_from_numerator(poly({{0, 1}, {1, -1}})); }), ErrorCode::NotCodimTwo);
  EXPECT_EQ(code_of([] { degree_from_numerator(poly({{0, 1}, {2, -1}})); }), ErrorCode::NotCodimTwo);
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(degree_closed_form(worked_profile()), 2);
  EXPECT_EQ(code_of([] { degree_closed_form(DegreeProfile::from_free(0, 0, 0, 0, 0, 0)); }), ErrorCode::InvalidProfile);
}

TEST(ClosedForm, AgreesWithNumeratorExhaustively) {
  std::size_t valid = 0;
  for (int up = 0; up <= 3; ++up)
    for (int vp = 0; vp <= 3; ++vp)
      for (int p = 0; p <= 3; ++p)
        for (int r = 0; r <= 3; ++r)
          for (int s = 0; s <= 3; ++s)
            for (int t = 0; t <= 3; ++t) {
              const auto prof = DegreeProfile::from_free(up, vp, p, r, s, t);
              if (!prof.valid()) continue;
              ++valid;
              const auto f = hilbert_numerator(prof);
              ASSERT_EQ(f.value_at_one(), 0);
              ASSERT_EQ(f.derivative_at_one(1), 0);
              ASSERT_EQ(degree_closed_form(prof), degree_from_numerator(f)) << prof.str();
            }
  EXPECT_GT(valid, 1000u);
}

TEST(Bruteforce, WorkedExample) {
  const auto b = certify(LatticeBasis({1, -1, -1, 1}, {1, -1, 1, -1}));
  EXPECT_EQ(hilbert_function_bruteforce(b, 0), 1);
  EXPECT_EQ(hilbert_function_bruteforce(b, 1), 4);
  EXPECT_EQ(hilbert_function_bruteforce(b, 2), 6);
  const auto h = hilbert_series_bruteforce(b, 10);
  for (std::size_t t = 3; t < h.size(); ++t) EXPECT_EQ(h[t] - h[t - 1], 2) << t;
  EXPECT_EQ(degree_by_differences(h, 2), 2);
  EXPECT_EQ(oracle_degree(b, 10), 2);
}

TEST(Bruteforce, MatchesNumeratorForSingleQuadrangle) {
  const auto b = certify(LatticeBasis({1, -1, -1, 1}, {1, -1, 1, -1}));
  const auto f = hilbert_numerator(worked_profile());
  EXPECT_EQ(hilbert_function_from_numerator(f, 4, 12), hilbert_series_bruteforce(b, 12));
}

TEST(Bruteforce, ResourceCeiling) {
  const auto b = certify(LatticeBasis({1, -1, -1, 1}, {1, -1, 1, -1}));
  OracleOptions small;
  small.max_monomials = 5;
  EXPECT_EQ(code_of([&] { hilbert_function_bruteforce(b, 3, small); }), ErrorCode::ResourceLimit);
}

TEST(Bruteforce, UnsaturatedLatticeCountsItsOwnFibers) {
  // L = 2 Z(1,-1,0) + Z(0,1,-1): a and b are not equivalent in degree 1
  const auto b = certify(LatticeBasis({2, -2, 0}, {0, 1, -1}));
  EXPECT_EQ(hilbert_function_bruteforce(b, 1), 2);
  EXPECT_EQ(hilbert_function_bruteforce(b, 2), 2);
  EXPECT_EQ(degree_by_differences(hilbert_series_bruteforce(b, 8), 1), 2);
}

TEST(Bruteforce, NonStandardGradingIsRejectedForDegrees) {
  const auto b = certify(LatticeBasis({2, 0, -1, 0}, {0, 2, 0, -1}));
  EXPECT_EQ(code_of([&] { oracle_degree(b, 8); }), ErrorCode::StandardGradingRequired);
  EXPECT_EQ(hilbert_function_bruteforce(b, 1), 2);  // a, b
}

TEST(Differences, Examples) {
  EXPECT_EQ(degree_by_differences(ints({1, 4, 6, 8, 10, 12}), 2), 2);
  EXPECT_EQ(degree_by_differences(ints({1, 2, 3, 4, 5}), 2), 1);
  EXPECT_EQ(code_of([] { degree_by_differences(ints({1, 4, 9, 16}), 2); }), ErrorCode::NotStabilized);
  EXPECT_EQ(code_of([] { degree_by_differences(ints({1, 4, 6}), 2); }), ErrorCode::NotStabilized);
  EXPECT_EQ(degree_by_differences(ints({1, 2, 1, 0, 0, 0}), 0), 4);
  EXPECT_EQ(degree_by_differences(ints({1, 3, 6, 10, 15, 21}), 3), 1);
}

TEST(PureFormula, Examples) {
  EXPECT_EQ(pure_degree_formula(ints({2, 3})), Rational(3));
  EXPECT_EQ(pure_degree_formula(ints({1, 2})), Rational(1));
  EXPECT_EQ(pure_degree_formula(ints({2, 4, 6})), Rational(8));
  EXPECT_EQ(pure_degree_formula(ints({1, 2, 4})), Rational(4, 3));
  EXPECT_THROW(pure_degree_formula(ints({3, 2})), Error);
}

TEST(LowerBoundFixture, XSquaredXY) {
  // (x^2, xy): shifts {2,2}, {3}; codimension 1, so f'(1) != 0
  HilbertNumerator f;
  f.add(0, 1);
  f.add(2, -2);
  f.add(3, 1);
  EXPECT_EQ(f.value_at_one(), 0);
  EXPECT_EQ(f.derivative_at_one(1), -1);
  EXPECT_EQ(code_of([&] { degree_from_numerator(f); }), ErrorCode::NotCodimTwo);
  const auto h = hilbert_function_from_numerator(f, 2, 8);
  EXPECT_EQ(h, ints({1, 2, 1, 1, 1, 1, 1, 1, 1}));
  const Integer degree = degree_by_differences(h, 1);
  EXPECT_EQ(degree, 1);
  // m1 m2 / 2 = 3 > 1: the lower bound fails here
  EXPECT_GT(Integer(2 * 3), 2 * degree);
}
