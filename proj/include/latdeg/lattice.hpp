#pragma once

// Rank-2 sublattices of Z^n: membership, positive gradings, and the
// hypothesis certificate every downstream computation relies on.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latdeg/core.hpp"

namespace latdeg {

using Wide = __int128;

class LatticeBasis {
 public:
  LatticeBasis() = default;
  LatticeBasis(ExponentVector b1, ExponentVector b2) : b1_(std::move(b1)), b2_(std::move(b2)) {
    b1_.require_same_size(b2_);
    for (std::size_t i = 0; i < size() && !pivot_rows_; ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (minor(i, j) != 0) {
          pivot_rows_ = {i, j};
          break;
        }
  }

  std::size_t size() const noexcept { return b1_.size(); }
  const ExponentVector& b1() const noexcept { return b1_; }
  const ExponentVector& b2() const noexcept { return b2_; }
  const ExponentVector& column(std::size_t k) const { return k == 0 ? b1_ : b2_; }

  int rank() const {
    if (pivot_rows_) return 2;
    return (b1_.is_zero() && b2_.is_zero()) ? 0 : 1;
  }

  /// Determinant of rows i, j of the n x 2 matrix B = [b1 b2].
  Wide minor(std::size_t i, std::size_t j) const {
    return Wide(b1_[i]) * b2_[j] - Wide(b1_[j]) * b2_[i];
  }

  std::optional<std::pair<std::size_t, std::size_t>> pivot_rows() const { return pivot_rows_; }

  /// B u for u in Z^2.
  ExponentVector apply(Exponent u1, Exponent u2) const {
    ExponentVector r(size());
    for (std::size_t i = 0; i < size(); ++i)
      r[i] = checked::add(checked::mul(b1_[i], u1), checked::mul(b2_[i], u2));
    return r;
  }

  bool has_weights() const noexcept { return weights_.has_value(); }
  const ExponentVector& weights() const {
    if (!weights_) throw Error(ErrorCode::InvalidArgument, "lattice basis has no certified grading");
    return *weights_;
  }
  /// Attaches a grading after checking positivity and orthogonality.
  LatticeBasis with_weights(ExponentVector w) const {
    w.require_same_size(b1_);
    for (Exponent wi : w)
      if (wi < 1) throw Error(ErrorCode::InvalidArgument, "weights must be strictly positive: " + w.str());
    if (dot(b1_, w) != 0 || dot(b2_, w) != 0)
      throw Error(ErrorCode::InvalidArgument, "weights " + w.str() + " are not orthogonal to the basis");
    LatticeBasis copy = *this;
    copy.weights_ = std::move(w);
    return copy;
  }

  bool column_sums_zero() const { return b1_.total() == 0 && b2_.total() == 0; }
  bool standard_graded() const {
    if (!weights_) return false;
    for (Exponent wi : *weights_)
      if (wi != 1) return false;
    return true;
  }

  Exponent max_abs_entry() const {
    Exponent m = 0;
    for (std::size_t i = 0; i < size(); ++i) m = std::max({m, b1_[i] < 0 ? -b1_[i] : b1_[i], b2_[i] < 0 ? -b2_[i] : b2_[i]});
    return m;
  }

 private:
  ExponentVector b1_;
  ExponentVector b2_;
  std::optional<ExponentVector> weights_;
  std::optional<std::pair<std::size_t, std::size_t>> pivot_rows_;
};

/// Coefficients (l1, l2) with l1 b1 + l2 b2 = v, if they exist in Z^2.
/// Solved exactly on one pair of independent rows, then checked on all rows.
inline std::optional<std::pair<Exponent, Exponent>> membership(const ExponentVector& v, const LatticeBasis& basis) {
  v.require_same_size(basis.b1());
  const auto rows = basis.pivot_rows();
  if (!rows) throw Error(ErrorCode::RankDeficient, "membership needs a rank-2 basis");
  const auto [i, j] = *rows;
  const Wide det = basis.minor(i, j);
  const Wide num1 = Wide(v[i]) * basis.b2()[j] - Wide(v[j]) * basis.b2()[i];
  const Wide num2 = Wide(basis.b1()[i]) * v[j] - Wide(basis.b1()[j]) * v[i];
  if (num1 % det != 0 || num2 % det != 0) return std::nullopt;
  const Wide l1 = num1 / det, l2 = num2 / det;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (l1 * basis.b1()[k] + l2 * basis.b2()[k] != Wide(v[k])) return std::nullopt;
  constexpr Wide lo = INT64_MIN, hi = INT64_MAX;
  if (l1 < lo || l1 > hi || l2 < lo || l2 > hi) throw Error(ErrorCode::Overflow, "membership coefficients");
  return std::pair<Exponent, Exponent>{static_cast<Exponent>(l1), static_cast<Exponent>(l2)};
}

inline bool is_member(const ExponentVector& v, const LatticeBasis& basis) {
  return membership(v, basis).has_value();
}

/// Integer basis (n - 2 vectors) of the rational kernel of B^T, i.e. all
/// k with k . b1 = k . b2 = 0. Each vector is primitive (content 1).
inline std::vector<ExponentVector> kernel_basis(const LatticeBasis& basis) {
  const std::size_t n = basis.size();
  const auto rows = basis.pivot_rows();
  if (!rows) throw Error(ErrorCode::RankDeficient, "kernel needs a rank-2 basis");
  // Reduced row echelon form of the 2 x n matrix with rows b1, b2.
  std::array<std::vector<Rational>, 2> m;
  for (std::size_t k = 0; k < n; ++k) {
    m[0].emplace_back(basis.b1()[k]);
    m[1].emplace_back(basis.b2()[k]);
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < 2; ++c) {
    std::size_t p = r;
    while (p < 2 && m[p][c] == 0) ++p;
    if (p == 2) continue;
    std::swap(m[p], m[r]);
    const Rational lead = m[r][c];
    for (auto& x : m[r]) x /= lead;
    for (std::size_t o = 0; o < 2; ++o) {
      if (o == r || m[o][c] == 0) continue;
      const Rational f = m[o][c];
      for (std::size_t k = 0; k < n; ++k) m[o][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<ExponentVector> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    std::vector<Rational> k(n, Rational(0));
    k[f] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row) k[pivots[row]] = -m[row][f];
    Integer den = 1;
    for (const auto& x : k) den = boost::multiprecision::lcm(den, Integer(boost::multiprecision::denominator(x)));
    std::vector<Integer> ints;
    Integer content = 0;
    for (const auto& x : k) {
      ints.push_back(boost::multiprecision::numerator(x) * (den / boost::multiprecision::denominator(x)));
      content = boost::multiprecision::gcd(content, ints.back());
    }
    ExponentVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Integer e = ints[i] / content;
      if (boost::multiprecision::abs(e) > Integer(INT64_MAX / 4)) throw Error(ErrorCode::Overflow, "kernel vector");
      v[i] = static_cast<Exponent>(e);
    }
    out.push_back(std::move(v));
  }
  return out;
}

struct GradingSearchOptions {
  /// Kernel combination coefficients range over [-bound, bound].
  Exponent coefficient_bound = 20;
  /// Refuse searches with more candidate combinations than this.
  std::uint64_t max_candidates = 50'000'000;
};

/// A strictly positive integer w with w . b1 = w . b2 = 0.
/// Returns all-ones when both columns sum to zero; otherwise searches small
/// integer combinations of a kernel basis and keeps the one with smallest
/// total weight (ties broken lexicographically).
inline ExponentVector find_positive_grading(const LatticeBasis& basis, GradingSearchOptions opts = {}) {
  const std::size_t n = basis.size();
  if (basis.rank() != 2) throw Error(ErrorCode::RankDeficient, "basis columns are linearly dependent");
  if (basis.column_sums_zero()) return standard_weights(n);
  const auto kernel = kernel_basis(basis);
  if (kernel.empty()) throw Error(ErrorCode::NoPositiveGrading, "kernel of B^T is trivial");

  const std::uint64_t side = static_cast<std::uint64_t>(2 * opts.coefficient_bound + 1);
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < kernel.size(); ++j) {
    if (total > opts.max_candidates / side) throw Error(ErrorCode::ResourceLimit, "grading search space too large");
    total *= side;
  }

  std::optional<ExponentVector> best;
  Exponent best_sum = 0;
  std::vector<Exponent> coeff(kernel.size(), -opts.coefficient_bound);
  for (std::uint64_t step = 0; step < total; ++step) {
    ExponentVector w(n);
    for (std::size_t j = 0; j < kernel.size(); ++j) w += coeff[j] * kernel[j];
    if (w.is_nonnegative() && std::none_of(w.begin(), w.end(), [](Exponent e) { return e == 0; })) {
      Exponent g = 0;
      for (Exponent e : w) g = std::gcd(g, e);
      for (std::size_t i = 0; i < n; ++i) w[i] /= g;
      const Exponent s = w.total();
      if (!best || s < best_sum || (s == best_sum && w < *best)) {
        best = w;
        best_sum = s;
      }
    }
    for (std::size_t j = 0; j < coeff.size(); ++j) {
      if (++coeff[j] <= opts.coefficient_bound) break;
      coeff[j] = -opts.coefficient_bound;
    }
  }
  if (!best)
    throw Error(ErrorCode::NoPositiveGrading,
                "no strictly positive grading within kernel coefficients |c| <= " +
                    std::to_string(opts.coefficient_bound));
  return *best;
}

struct HypothesisCertificate {
  int rank = 0;
  ExponentVector weights;
  bool weights_supplied = false;
  bool standard_graded = false;
  /// The positive grading kills every nonnegative lattice vector: w > 0 and
  /// w . v = 0 force v = 0, so no separate search is needed.
  std::string nonnegative_vectors;
  LatticeBasis certified;
};

/// Rank exactly 2 and a positive grading (the supplied one, if any).
inline HypothesisCertificate check_hypotheses(const LatticeBasis& basis, GradingSearchOptions opts = {}) {
  HypothesisCertificate cert;
  cert.rank = basis.rank();
  if (cert.rank != 2)
    throw Error(ErrorCode::RankDeficient, "basis has rank " + std::to_string(cert.rank) + ", expected 2");
  if (basis.has_weights()) {
    cert.weights = basis.weights();
    cert.weights_supplied = true;
  } else {
    cert.weights = find_positive_grading(basis, opts);
  }
  cert.certified = basis.with_weights(cert.weights);
  cert.standard_graded = cert.certified.standard_graded();
  cert.nonnegative_vectors = "excluded: weights are strictly positive and orthogonal to L";
  return cert;
}

inline LatticeBasis certify(const LatticeBasis& basis, GradingSearchOptions opts = {}) {
  return check_hypotheses(basis, opts).certified;
}

}  // namespace latdeg
