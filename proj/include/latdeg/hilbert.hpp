#pragma once

// Degrees of R/J and R/I_L: from a Hilbert numerator, from the closed
// quadrangle formula, and by counting fibers degree by degree.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "latdeg/core.hpp"
#include "latdeg/fibers.hpp"
#include "latdeg/lattice.hpp"
#include "latdeg/profile.hpp"

namespace latdeg {

/// f(y) = sum_i sum_j (-1)^i y^{d_ij}, the numerator of H(y) = f(y)/(1-y)^n.
class HilbertNumerator {
 public:
  HilbertNumerator() = default;

  static HilbertNumerator from_shifts(const ShiftTable& shifts) {
    HilbertNumerator f;
    f.add(0, 1);
    for (std::size_t step = 0; step < 3; ++step) {
      const int sign = step % 2 == 0 ? -1 : 1;
      for (const auto& d : shifts.steps[step]) f.add(d, sign);
    }
    return f;
  }

  void add(const Integer& exponent, const Integer& coefficient) {
    if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent in Hilbert numerator");
    auto [it, fresh] = terms_.try_emplace(exponent, coefficient);
    if (!fresh) it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }

  const std::map<Integer, Integer>& terms() const noexcept { return terms_; }

  /// k-th derivative at y = 1: sum c * d (d-1) ... (d-k+1).
  Integer derivative_at_one(unsigned k) const {
    Integer total = 0;
    for (const auto& [d, c] : terms_) {
      Integer falling = 1;
      for (unsigned i = 0; i < k; ++i) falling *= d - i;
      total += c * falling;
    }
    return total;
  }
  Integer value_at_one() const { return derivative_at_one(0); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [d, c] : terms_) {
      const Integer mag = c < 0 ? Integer(-c) : c;
      s += c < 0 ? "-" : (s.empty() ? "" : "+");
      if (d == 0) {
        s += mag.str();
        continue;
      }
      if (mag != 1) s += mag.str();
      s += "y";
      if (d != 1) s += "^" + d.str();
    }
    return s;
  }

  friend bool operator==(const HilbertNumerator&, const HilbertNumerator&) = default;

 private:
  std::map<Integer, Integer> terms_;
};

inline HilbertNumerator hilbert_numerator(const ShiftTable& shifts) { return HilbertNumerator::from_shifts(shifts); }

inline HilbertNumerator hilbert_numerator(const DegreeProfile& prof) {
  prof.require_valid();
  return HilbertNumerator::from_shifts(prof.shifts());
}

/// deg = f''(1)/2, valid when (1-y)^2 divides f.
inline Integer degree_from_numerator(const HilbertNumerator& f) {
  if (f.value_at_one() != 0) throw Error(ErrorCode::NotCodimTwo, "f(1) = " + f.value_at_one().str());
  if (f.derivative_at_one(1) != 0) throw Error(ErrorCode::NotCodimTwo, "f'(1) = " + f.derivative_at_one(1).str());
  const Integer second = f.derivative_at_one(2);
  if (second < 0 || second % 2 != 0) throw Error(ErrorCode::NotCodimTwo, "f''(1) = " + second.str());
  return second / 2;
}

/// deg J = U+V+ + U+P + V+P + P^2 - PR + U+S + PS + V+T + PT.
inline Integer degree_closed_form(const DegreeProfile& d) {
  d.require_valid();
  return d.u_plus * d.v_plus + d.u_plus * d.p + d.v_plus * d.p + d.p * d.p - d.p * d.r + d.u_plus * d.s +
         d.p * d.s + d.v_plus * d.t + d.p * d.t;
}

/// Coefficients 0..max_t of f(y)/(1-y)^n.
inline std::vector<Integer> hilbert_function_from_numerator(const HilbertNumerator& f, std::size_t n, Exponent max_t) {
  std::vector<Integer> out(static_cast<std::size_t>(max_t + 1), 0);
  // C(k + n - 1, n - 1) for k = 0..max_t
  std::vector<Integer> binom(out.size(), 0);
  if (n == 0) {
    binom[0] = 1;
  } else {
    binom[0] = 1;
    for (std::size_t k = 1; k < binom.size(); ++k) binom[k] = binom[k - 1] * (k + n - 1) / k;
  }
  for (const auto& [d, c] : f.terms()) {
    if (d > max_t) continue;
    const auto shift = static_cast<std::size_t>(d);
    for (std::size_t k = shift; k < out.size(); ++k) out[k] += c * binom[k - shift];
  }
  return out;
}

struct OracleOptions {
  /// Refuse to enumerate more monomials than this in any single degree.
  std::uint64_t max_monomials = 5'000'000;
};

/// Number of fibers of weighted degree t: degree-t monomials up to a ~ b
/// iff a - b in L. Monomials are bucketed by K a for an integer basis K of
/// the kernel of B^T (equal keys mean a - b lies in the rational span of L);
/// inside a bucket, lattice membership splits the bucket into fibers.
inline Integer hilbert_function_bruteforce(const LatticeBasis& basis, Exponent t, OracleOptions opts = {}) {
  if (t < 0) return 0;
  const ExponentVector& w = basis.weights();
  const auto kernel = kernel_basis(basis);
  std::map<ExponentVector, std::vector<ExponentVector>> buckets;  // key -> fiber representatives
  std::uint64_t seen = 0;
  Integer count = 0;
  for_each_monomial_of_degree(w, t, [&](const ExponentVector& a) {
    if (++seen > opts.max_monomials)
      throw Error(ErrorCode::ResourceLimit, "more than " + std::to_string(opts.max_monomials) +
                                                " monomials in degree " + std::to_string(t));
    ExponentVector key(kernel.size());
    for (std::size_t j = 0; j < kernel.size(); ++j) key[j] = dot(a, kernel[j]);
    auto& reps = buckets[key];
    for (const auto& r : reps)
      if (is_member(a - r, basis)) return;
    reps.push_back(a);
    ++count;
  });
  return count;
}

/// H(0), ..., H(max_t) by fiber counting.
inline std::vector<Integer> hilbert_series_bruteforce(const LatticeBasis& basis, Exponent max_t,
                                                      OracleOptions opts = {}) {
  std::vector<Integer> h;
  for (Exponent t = 0; t <= max_t; ++t) h.push_back(hilbert_function_bruteforce(basis, t, opts));
  return h;
}

/// Stabilized (dim - 1)-th difference of a Hilbert function, which is the
/// degree when the Hilbert polynomial has degree dim - 1. Requires the last
/// three values of that difference to agree. For dim = 0 the function must
/// vanish on its last three values and the degree is the sum of all values.
inline Integer degree_by_differences(std::vector<Integer> h, std::size_t dim_quotient) {
  if (dim_quotient == 0) {
    if (h.size() < 3 || h[h.size() - 1] != 0 || h[h.size() - 2] != 0 || h[h.size() - 3] != 0)
      throw Error(ErrorCode::NotStabilized, "Hilbert function has not reached zero");
    Integer sum = 0;
    for (const auto& x : h) sum += x;
    return sum;
  }
  for (std::size_t k = 1; k < dim_quotient; ++k) {
    if (h.size() < 2) break;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) h[i] = h[i + 1] - h[i];
    h.pop_back();
  }
  if (h.size() < 3)
    throw Error(ErrorCode::NotStabilized, "too few Hilbert values for a difference of order " +
                                              std::to_string(dim_quotient - 1));
  const std::size_t m = h.size();
  if (h[m - 1] != h[m - 2] || h[m - 2] != h[m - 3]) {
    std::string tail = h[m - 3].str() + "," + h[m - 2].str() + "," + h[m - 1].str();
    throw Error(ErrorCode::NotStabilized, "last differences " + tail + " are not constant");
  }
  return h[m - 1];
}

/// prod d_i / p! for a pure resolution with shifts d_1 < ... < d_p.
inline Rational pure_degree_formula(const std::vector<Integer>& shifts) {
  if (shifts.empty()) throw Error(ErrorCode::InvalidArgument, "no shifts");
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    if (shifts[i] < 1 || (i > 0 && shifts[i] <= shifts[i - 1]))
      throw Error(ErrorCode::InvalidArgument, "shifts must be positive and strictly increasing");
    num *= shifts[i];
    den *= i + 1;
  }
  return Rational(num, den);
}

/// Degree of R/I_L from fiber counts over 0..max_t (standard grading only:
/// with other weights the Hilbert function is a quasi-polynomial).
inline Integer oracle_degree(const LatticeBasis& basis, Exponent max_t, OracleOptions opts = {}) {
  if (!basis.standard_graded())
    throw Error(ErrorCode::StandardGradingRequired, "degree extraction needs the standard grading");
  return degree_by_differences(hilbert_series_bruteforce(basis, max_t, opts), basis.size() - 2);
}

}  // namespace latdeg
