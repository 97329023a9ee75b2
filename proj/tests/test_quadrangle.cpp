#include <gtest/gtest.h>

#include <random>

#include "latdeg/quadrangle.hpp"

using namespace latdeg;

namespace {

const ExponentVector w4 = standard_weights(4);

QuadrangleSplit worked_split() { return split_quadrangle(Binomial({1, 0, 0, 1}, {0, 1, 1, 0}), Binomial({1, 0, 1, 0}, {0, 1, 0, 1})); }

std::vector<Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

/// Split whose eight vectors live on eight separate variables with the given
/// exponents; U- and V- are solved from homogeneity.
std::optional<QuadrangleSplit> separated_split(Exponent up, Exponent vp, Exponent p, Exponent r, Exponent s, Exponent t) {
  const Exponent um = up + t + p - s - r, vm = vp + s + p - t - r;
  if (um < 0 || vm < 0) return std::nullopt;
  auto e = [](std::size_t i, Exponent k) { return k * ExponentVector::unit(8, i); };
  const ExponentVector Up = e(0, up), Um = e(1, um), Vp = e(2, vp), Vm = e(3, vm), P = e(4, p), R = e(5, r),
                       S = e(6, s), T = e(7, t);
  const Binomial alpha(Up + P + T, Um + R + S), beta(Vp + P + S, Vm + R + T);
  if (alpha.is_zero() || beta.is_zero()) return std::nullopt;
  try {
    return split_quadrangle(alpha, beta);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

TEST(Split, WorkedExample) {
  const auto q = worked_split();
  EXPECT_EQ(q.p, (ExponentVector{1, 0, 0, 0}));
  EXPECT_EQ(q.s, (ExponentVector{0, 0, 1, 0}));
  EXPECT_EQ(q.t, (ExponentVector{0, 0, 0, 1}));
  EXPECT_EQ(q.r, (ExponentVector{0, 1, 0, 0}));
  for (const auto* v : {&q.u_plus, &q.u_minus, &q.v_plus, &q.v_minus}) EXPECT_TRUE(v->is_zero());
  EXPECT_EQ(q.gamma.str(), "a^2-b^2");
  EXPECT_EQ(q.delta.str(), "d^2-c^2");
  EXPECT_EQ(q.delta, binomial_from_lattice_vector({0, 0, 2, -2}));
}

TEST(Split, NoCommonGcds) {
  const auto q = split_quadrangle(Binomial({1, 0, 0, 0}, {0, 1, 0, 0}), Binomial({0, 0, 1, 0}, {0, 0, 0, 1}));
  EXPECT_EQ(q.u_plus, (ExponentVector{1, 0, 0, 0}));
  EXPECT_EQ(q.u_minus, (ExponentVector{0, 1, 0, 0}));
  EXPECT_EQ(q.v_plus, (ExponentVector{0, 0, 1, 0}));
  EXPECT_EQ(q.v_minus, (ExponentVector{0, 0, 0, 1}));
  EXPECT_EQ(q.gamma.str(), "ac-bd");
  EXPECT_EQ(q.delta.str(), "ad-bc");
}

TEST(Split, SharedLeadingTerm) {
  const auto q = split_quadrangle(Binomial({2, 0, 0}, {0, 2, 0}), Binomial({2, 0, 0}, {0, 0, 2}));
  EXPECT_EQ(q.p, (ExponentVector{2, 0, 0}));
  EXPECT_TRUE(q.u_plus.is_zero());
  EXPECT_TRUE(q.t.is_zero());
  EXPECT_EQ(q.gamma, Binomial({4, 0, 0}, {0, 2, 2}));
  EXPECT_EQ(q.delta, Binomial({0, 0, 2}, {0, 2, 0}));
}

TEST(Split, Failures) {
  try {
    split_quadrangle(Binomial({1, 0, 0}, {0, 1, 0}), Binomial({1, 0, 0}, {0, 1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SplitFailure);
  }
  try {
    split_quadrangle(Binomial({1, 0, 1}, {0, 1, 1}), Binomial({1, 0, 2}, {0, 0, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SplitFailure);
  }
}

TEST(Resolution, WorkedShifts) {
  const auto res = build_resolution(worked_split(), w4);
  EXPECT_EQ(res.shifts.steps[0], ints({2, 2, 2, 2}));
  EXPECT_EQ(res.shifts.steps[1], ints({3, 3, 3, 3}));
  EXPECT_EQ(res.shifts.steps[2], ints({4}));
  EXPECT_FALSE(res.flags.duplicate_shift);
  EXPECT_FALSE(res.flags.unit_entry);
  EXPECT_TRUE(verify_exactness_products(res).ok);
  EXPECT_EQ(res.multidegrees[2][0], (ExponentVector{2, 0, 1, 1}));
}

TEST(Resolution, DegenerateIsFlagged) {
  const auto q = split_quadrangle(Binomial({1, 0, 0, 0}, {0, 1, 0, 0}), Binomial({0, 0, 1, 0}, {0, 0, 0, 1}));
  const auto res = build_resolution(q, w4);
  EXPECT_EQ(res.shifts.steps[0], ints({1, 1, 2, 2}));
  EXPECT_EQ(res.shifts.steps[1], ints({2, 2, 2, 2}));
  EXPECT_EQ(res.shifts.steps[2], ints({2}));
  EXPECT_TRUE(res.flags.duplicate_shift);
  EXPECT_TRUE(res.flags.unit_entry);
  EXPECT_FALSE(res.warnings.empty());
  EXPECT_TRUE(verify_exactness_products(res).ok);
}

TEST(Resolution, SignFlipIsDetected) {
  auto res = build_resolution(worked_split(), w4);
  res.d3[1] = -res.d3[1];
  const auto check = verify_exactness_products(res);
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.product, "d2*d3");
  EXPECT_GE(check.row, 1u);
  EXPECT_FALSE(check.entry.empty());

  auto res2 = build_resolution(worked_split(), w4);
  res2.d2[2][0] = -res2.d2[2][0];
  const auto c2 = verify_exactness_products(res2);
  EXPECT_FALSE(c2.ok);
  EXPECT_EQ(c2.product, "d1*d2");
  EXPECT_EQ(c2.col, 1u);
}

TEST(Resolution, EqualGcdFamily) {
  for (Exponent k = 1; k <= 4; ++k) {
    const auto q = split_quadrangle(Binomial({k, 0, 0, k}, {0, k, k, 0}), Binomial({k, 0, k, 0}, {0, k, 0, k}));
    const auto res = build_resolution(q, w4);
    EXPECT_TRUE(verify_exactness_products(res).ok);
    EXPECT_EQ(res.shifts.steps[2][0], 4 * k);
  }
}

TEST(Resolution, WrongGradingIsRejected) {
  try {
    build_resolution(worked_split(), {1, 2, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HomogeneityViolation);
  }
}

TEST(Assemble, WorkedAndDirectSum) {
  const auto one = build_resolution(worked_split(), w4);
  const std::vector<ResolutionData> single{one};
  const auto a = assemble_resolution(single);
  EXPECT_EQ(a.max_shift[0], 2);
  EXPECT_EQ(a.max_shift[1], 3);
  EXPECT_EQ(a.max_shift[2], 4);

  // a copy on four fresh variables
  auto lift = [](const ExponentVector& v, std::size_t off) {
    ExponentVector out(8);
    for (std::size_t i = 0; i < 4; ++i) out[off + i] = v[i];
    return out;
  };
  std::vector<ResolutionData> two;
  for (std::size_t off : {0u, 4u}) {
    const auto q = worked_split();
    two.push_back(build_resolution(split_quadrangle(Binomial(lift(q.alpha.plus(), off), lift(q.alpha.minus(), off)),
                                                    Binomial(lift(q.beta.plus(), off), lift(q.beta.minus(), off))),
                                   standard_weights(8)));
  }
  const auto b = assemble_resolution(two);
  EXPECT_EQ(b.raw.steps[0].size(), 8u);
  EXPECT_EQ(b.raw.steps[1].size(), 8u);
  EXPECT_EQ(b.raw.steps[2].size(), 2u);
  EXPECT_EQ(b.max_shift[0], 2);
  EXPECT_EQ(b.max_shift[1], 3);
  EXPECT_EQ(b.deduplicated.steps[0].size(), 8u);

  // the same quadrangle twice collapses when deduplicated
  const std::vector<ResolutionData> twice{one, one};
  const auto c = assemble_resolution(twice);
  EXPECT_EQ(c.raw.steps[0].size(), 8u);
  EXPECT_EQ(c.deduplicated.steps[0].size(), 4u);
  EXPECT_EQ(c.deduplicated.steps[2].size(), 1u);
}

TEST(Assemble, Empty) {
  try {
    assemble_resolution(std::vector<ResolutionData>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyDecomposition);
  }
}

TEST(SparsePolynomial, Arithmetic) {
  const auto a = SparsePolynomial::from(Binomial({1, 0}, {0, 1}));
  const auto b = SparsePolynomial::from(Binomial({1, 0}, {0, 1}).negated());
  SparsePolynomial s = a;
  s += b;
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ((a * a).str(), "a^2-2ab+b^2");
}

TEST(SplitProperties, RandomSeparatedSplits) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Exponent> d(0, 3);
  int tested = 0;
  while (tested < 300) {
    const auto q = separated_split(d(rng), d(rng), d(rng), d(rng), d(rng), d(rng));
    if (!q) continue;
    ++tested;
    // round trip
    EXPECT_EQ(q->alpha.plus(), q->u_plus + q->p + q->t);
    EXPECT_EQ(q->beta.minus(), q->v_minus + q->r + q->t);
    const auto w = standard_weights(8);
    const auto res = build_resolution(*q, w);
    EXPECT_TRUE(verify_exactness_products(res).ok);
    const DegreeProfile d8 = q->profile(w);
    const Integer A = d8.alpha(), B = d8.beta(), C = d8.gamma(), D = d8.delta();
    EXPECT_EQ(A, d8.u_minus + d8.s + d8.r);
    EXPECT_EQ(B, d8.v_minus + d8.t + d8.r);
    EXPECT_EQ(C, d8.u_minus + d8.v_minus + 2 * d8.r);
    EXPECT_EQ(D, d8.u_minus + d8.v_plus + 2 * d8.s);
    EXPECT_EQ(C + D, 2 * A + d8.v_plus + d8.v_minus);
    EXPECT_EQ(C + D, 2 * B + d8.u_plus + d8.u_minus);
    EXPECT_EQ(C + d8.s + d8.t, D + d8.p + d8.r);
    EXPECT_EQ(res.shifts.steps[0], (std::vector<Integer>{A, B, C, D}));
    EXPECT_EQ(res.shifts.steps[1], (std::vector<Integer>{C + d8.t, C + d8.s, D + d8.p, D + d8.r}));
    EXPECT_EQ(res.shifts.steps[2], (std::vector<Integer>{C + d8.s + d8.t}));
    EXPECT_EQ(res.shifts.steps, d8.shifts().steps);
    // minimality: no step-2 shift in the same multidegree as a step-1 shift
    if (!res.flags.unit_entry) {
      for (const auto& m2 : res.multidegrees[1])
        for (const auto& m1 : res.multidegrees[0]) EXPECT_NE(m1, m2);
    }
  }
}
