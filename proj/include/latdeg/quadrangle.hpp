#pragma once

// The length-3 complex of one syzygy quadrangle
//
//   0 -> R -d3-> R^4 -d2-> R^4 -d1-> R
//
// with d1 = (alpha beta gamma delta), built from the gcd splitting of the two
// edge generators alpha and beta.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "latdeg/core.hpp"
#include "latdeg/profile.hpp"

namespace latdeg {

/// Sparse polynomial in n variables with integer coefficients.
class SparsePolynomial {
 public:
  SparsePolynomial() = default;
  explicit SparsePolynomial(std::size_t n) : n_(n) {}

  static SparsePolynomial term(const ExponentVector& e, Integer c) {
    SparsePolynomial p(e.size());
    if (c != 0) p.terms_.emplace(e, std::move(c));
    return p;
  }
  static SparsePolynomial from(const Binomial& b) {
    SparsePolynomial p = term(b.plus(), 1);
    p += term(b.minus(), -1);
    return p;
  }

  std::size_t variables() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<ExponentVector, Integer>& terms() const noexcept { return terms_; }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    if (n_ == 0) n_ = o.n_;
    for (const auto& [e, c] : o.terms_) {
      auto [it, fresh] = terms_.try_emplace(e, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial r(std::max(a.n_, b.n_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r += term(ea + eb, ca * cb);
    return r;
  }
  SparsePolynomial operator-() const {
    SparsePolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  /// True when every term has weighted degree `degree`.
  bool homogeneous_of_degree(const ExponentVector& w, const Integer& degree) const {
    for (const auto& [e, c] : terms_)
      if (Integer(weighted_degree(e, w)) != degree) return false;
    return true;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool unit = e.is_zero();
      if (c < 0)
        s += "-";
      else if (!s.empty())
        s += "+";
      const Integer mag = c < 0 ? Integer(-c) : c;
      if (mag != 1 || unit) s += mag.str();
      if (!unit) s += format_monomial(e);
    }
    return s;
  }

 private:
  std::size_t n_ = 0;
  std::map<ExponentVector, Integer> terms_;
};

struct QuadrangleSplit {
  ExponentVector u_plus, u_minus, v_plus, v_minus, p, r, s, t;
  Binomial alpha, beta, gamma, delta;

  /// Weighted degrees of the eight vectors.
  DegreeProfile profile(const ExponentVector& w) const {
    auto d = [&](const ExponentVector& v) { return Integer(weighted_degree(v, w)); };
    return DegreeProfile{d(u_plus), d(u_minus), d(v_plus), d(v_minus), d(p), d(r), d(s), d(t)};
  }
};

/// Splits two edge generators into u+-, v+-, p, r, s, t:
///   x^p = gcd(alpha', beta'),  x^s = gcd(alpha'', beta'),
///   x^t = gcd(alpha', beta''), x^r = gcd(alpha'', beta''),
/// with the leftover factors of each term as u+-, v+-. The diagonal
/// generators come from the sum and difference of the exponent vectors.
inline QuadrangleSplit split_quadrangle(const Binomial& alpha, const Binomial& beta) {
  alpha.plus().require_same_size(beta.plus());
  if (alpha.is_zero() || beta.is_zero()) throw Error(ErrorCode::SplitFailure, "edge generators must be nonzero");
  QuadrangleSplit q;
  q.p = monomial_gcd(alpha.plus(), beta.plus());
  q.s = monomial_gcd(alpha.minus(), beta.plus());
  q.t = monomial_gcd(alpha.plus(), beta.minus());
  q.r = monomial_gcd(alpha.minus(), beta.minus());
  q.u_plus = alpha.plus() - q.p - q.t;
  q.u_minus = alpha.minus() - q.r - q.s;
  q.v_plus = beta.plus() - q.p - q.s;
  q.v_minus = beta.minus() - q.r - q.t;
  for (const auto* v : {&q.u_plus, &q.u_minus, &q.v_plus, &q.v_minus})
    if (!v->is_nonnegative())
      throw Error(ErrorCode::SplitFailure, "negative residual exponent splitting " + alpha.str() + ", " + beta.str());

  q.alpha = Binomial(q.u_plus + q.p + q.t, q.u_minus + q.r + q.s);
  q.beta = Binomial(q.v_plus + q.p + q.s, q.v_minus + q.r + q.t);
  if (q.alpha.plus() != alpha.plus() || q.alpha.minus() != alpha.minus() || q.beta.plus() != beta.plus() ||
      q.beta.minus() != beta.minus())
    throw Error(ErrorCode::SplitFailure, "split does not reconstruct " + alpha.str() + ", " + beta.str());
  q.gamma = Binomial(q.u_plus + q.v_plus + 2 * q.p, q.u_minus + q.v_minus + 2 * q.r);
  q.delta = Binomial(q.u_plus + q.v_minus + 2 * q.t, q.u_minus + q.v_plus + 2 * q.s);
  if (q.gamma.is_zero() || q.delta.is_zero())
    throw Error(ErrorCode::SplitFailure, "a diagonal generator vanishes; the edges are parallel");

  // Cannot fire once the residuals are nonnegative: a variable dividing all
  // four edge terms with least exponent e would force e >= 2e. Kept as a guard.
  ExponentVector common = q.alpha.plus();
  for (const Binomial* b : {&q.alpha, &q.beta, &q.gamma, &q.delta}) {
    common = monomial_gcd(common, b->plus());
    common = monomial_gcd(common, b->minus());
  }
  if (!common.is_zero())
    throw Error(ErrorCode::CommonFactor, "the four generators share the factor " + format_monomial(common));
  return q;
}

struct ResolutionFlags {
  bool degenerate_generator = false;  // some generator of degree 0
  bool duplicate_shift = false;       // a step-2 shift equals a step-1 shift
  bool unit_entry = false;            // d2 or d3 has a constant entry: not minimal
};

struct ResolutionData {
  QuadrangleSplit split;
  ShiftTable shifts;
  /// Monomial in the multidegree of every summand, aligned with `shifts`.
  std::array<std::vector<ExponentVector>, 3> multidegrees;
  std::array<SparsePolynomial, 4> d1;
  std::array<std::array<SparsePolynomial, 4>, 4> d2;  // d2[row][col]
  std::array<SparsePolynomial, 4> d3;
  ResolutionFlags flags;
  std::vector<std::string> warnings;
};

/// Builds the three matrices and the graded shifts. Syzygy column degrees are
/// deg gamma + T, deg gamma + S, deg delta + P, deg delta + R.
inline ResolutionData build_resolution(const QuadrangleSplit& q, const ExponentVector& w) {
  ResolutionData res;
  res.split = q;
  const std::size_t n = q.p.size();
  auto mono = [](const ExponentVector& e, int sign = 1) { return SparsePolynomial::term(e, sign); };
  const ExponentVector& up = q.u_plus;
  const ExponentVector& um = q.u_minus;
  const ExponentVector& vp = q.v_plus;
  const ExponentVector& vm = q.v_minus;

  res.d1 = {SparsePolynomial::from(q.alpha), SparsePolynomial::from(q.beta), SparsePolynomial::from(q.gamma),
            SparsePolynomial::from(q.delta)};
  const SparsePolynomial zero(n);
  res.d2[0] = {mono(vp + q.p), mono(vm + q.r), mono(vm + q.t, -1), mono(vp + q.s, -1)};
  res.d2[1] = {mono(um + q.r), mono(up + q.p), mono(um + q.s), mono(up + q.t)};
  res.d2[2] = {mono(q.t, -1), mono(q.s, -1), zero, zero};
  res.d2[3] = {zero, zero, mono(q.p), mono(q.r)};
  res.d3 = {mono(q.s, -1), mono(q.t), mono(q.r), mono(q.p, -1)};

  const ExponentVector& a1 = q.alpha.plus();
  res.multidegrees[0] = {q.alpha.plus(), q.beta.plus(), q.gamma.plus(), q.delta.plus()};
  res.multidegrees[1] = {a1 + vp + q.p, a1 + vm + q.r, a1 + vm + q.t, a1 + vp + q.s};
  res.multidegrees[2] = {a1 + vp + q.p + q.s};
  for (std::size_t step = 0; step < 3; ++step)
    for (const auto& m : res.multidegrees[step]) res.shifts.steps[step].emplace_back(weighted_degree(m, w));

  for (std::size_t j = 0; j < 4; ++j)
    if (!res.d1[j].homogeneous_of_degree(w, res.shifts.steps[0][j]))
      throw Error(ErrorCode::HomogeneityViolation, "generator " + std::to_string(j + 1) + " is not homogeneous");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!res.d2[i][j].homogeneous_of_degree(w, res.shifts.steps[1][j] - res.shifts.steps[0][i]))
        throw Error(ErrorCode::HomogeneityViolation,
                    "d2 entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") has the wrong degree");
  for (std::size_t i = 0; i < 4; ++i)
    if (!res.d3[i].homogeneous_of_degree(w, res.shifts.steps[2][0] - res.shifts.steps[1][i]))
      throw Error(ErrorCode::HomogeneityViolation, "d3 entry " + std::to_string(i + 1) + " has the wrong degree");

  // The four homogeneity chains on the scalar degrees.
  const DegreeProfile d = q.profile(w);
  const Integer A = d.alpha(), B = d.beta(), C = d.gamma(), D = d.delta();
  const bool chains = d.v_plus + d.p + A == d.u_minus + d.r + B && d.u_minus + d.r + B == d.t + C &&
                      d.v_minus + d.r + A == d.u_plus + d.p + B && d.u_plus + d.p + B == d.s + C &&
                      d.v_minus + d.t + A == d.u_minus + d.s + B && d.u_minus + d.s + B == d.p + D &&
                      d.v_plus + d.s + A == d.u_plus + d.t + B && d.u_plus + d.t + B == d.r + D;
  if (!chains) throw Error(ErrorCode::HomogeneityViolation, "degree relation chains fail for " + d.str());

  for (const auto& g : res.shifts.steps[0])
    if (g == 0) res.flags.degenerate_generator = true;
  for (const auto& s2 : res.shifts.steps[1])
    for (const auto& s1 : res.shifts.steps[0])
      if (s2 == s1) res.flags.duplicate_shift = true;
  for (const auto& row : res.d2)
    for (const auto& e : row)
      if (!e.is_zero() && e.terms().begin()->first.is_zero()) res.flags.unit_entry = true;
  for (const auto& e : res.d3)
    if (e.terms().begin()->first.is_zero()) res.flags.unit_entry = true;
  if (res.flags.degenerate_generator) res.warnings.push_back("a generator has degree 0");
  if (res.flags.duplicate_shift) res.warnings.push_back("a syzygy shift equals a generator shift");
  if (res.flags.unit_entry) res.warnings.push_back("a syzygy matrix has a unit entry; the complex is not minimal");
  return res;
}

struct ExactnessCheck {
  bool ok = true;
  /// "d1*d2" or "d2*d3" with a 1-based entry position, when !ok.
  std::string product;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string entry;
};

/// Expands d1*d2 and d2*d3 and checks that every entry cancels.
inline ExactnessCheck verify_exactness_products(const ResolutionData& res) {
  const std::size_t n = res.split.p.size();
  for (std::size_t j = 0; j < 4; ++j) {
    SparsePolynomial sum(n);
    for (std::size_t k = 0; k < 4; ++k) sum += res.d1[k] * res.d2[k][j];
    if (!sum.is_zero()) return {false, "d1*d2", 1, j + 1, sum.str()};
  }
  for (std::size_t i = 0; i < 4; ++i) {
    SparsePolynomial sum(n);
    for (std::size_t k = 0; k < 4; ++k) sum += res.d2[i][k] * res.d3[k];
    if (!sum.is_zero()) return {false, "d2*d3", i + 1, 1, sum.str()};
  }
  return {};
}

struct AssembledResolution {
  ShiftTable raw;
  /// One shift per distinct multidegree (needs a canonicalizer).
  ShiftTable deduplicated;
  std::array<std::vector<ExponentVector>, 3> deduplicated_multidegrees;
  std::array<Integer, 3> max_shift;  // M_i
  std::array<Integer, 3> min_shift;  // m_i
  std::size_t quadrangles = 0;
};

/// Maps a monomial to a canonical key for its multidegree.
using Canonicalizer = std::function<ExponentVector(const ExponentVector&)>;

/// Direct sum of the quadrangle complexes, plus the version with summands of
/// equal multidegree identified. Without a canonicalizer, multidegrees are
/// compared as exponent vectors.
inline AssembledResolution assemble_resolution(std::span<const ResolutionData> parts,
                                               const Canonicalizer& canonical = {}) {
  if (parts.empty())
    throw Error(ErrorCode::EmptyDecomposition,
                "no syzygy quadrangles: either R/I_L is Cohen-Macaulay or the degree bound is too small");
  AssembledResolution out;
  out.quadrangles = parts.size();
  for (std::size_t step = 0; step < 3; ++step) {
    std::map<ExponentVector, Integer> seen;
    for (const auto& part : parts) {
      for (std::size_t j = 0; j < part.shifts.steps[step].size(); ++j) {
        out.raw.steps[step].push_back(part.shifts.steps[step][j]);
        const ExponentVector& m = part.multidegrees[step][j];
        seen.try_emplace(canonical ? canonical(m) : m, part.shifts.steps[step][j]);
      }
    }
    for (const auto& [key, shift] : seen) {
      out.deduplicated.steps[step].push_back(shift);
      out.deduplicated_multidegrees[step].push_back(key);
    }
    out.max_shift[step] = out.raw.max(step);
    out.min_shift[step] = out.raw.min(step);
  }
  return out;
}

}  // namespace latdeg
