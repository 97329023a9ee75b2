#pragma once

// Exponent vectors, monomials and binomials.
//
// Exponents are machine integers with overflow-checked arithmetic; every
// quantity that gets multiplied (degrees, profiles, numerators, gaps) is an
// arbitrary-precision `Integer`.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latdeg/error.hpp"

namespace latdeg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Exponent = std::int64_t;

namespace checked {

inline Exponent add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "exponent addition");
  return r;
}

inline Exponent sub(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "exponent subtraction");
  return r;
}

inline Exponent mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "exponent multiplication");
  return r;
}

}  // namespace checked

/// Integer vector of fixed length n. Used both for monomial exponents
/// (nonnegative) and for signed lattice vectors.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : entries_(n, 0) {}
  ExponentVector(std::initializer_list<Exponent> init) : entries_(init) {}
  explicit ExponentVector(std::vector<Exponent> entries) : entries_(std::move(entries)) {}

  /// Monomial exponent; rejects negative entries.
  static ExponentVector monomial(std::vector<Exponent> entries) {
    ExponentVector v(std::move(entries));
    if (!v.is_nonnegative()) throw Error(ErrorCode::NegativeExponent, "monomial exponent " + v.str());
    return v;
  }

  static ExponentVector unit(std::size_t n, std::size_t i) {
    ExponentVector v(n);
    v.entries_.at(i) = 1;
    return v;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  Exponent operator[](std::size_t i) const { return entries_[i]; }
  Exponent& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Exponent> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Exponent e) { return e == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Exponent e) { return e >= 0; });
  }
  /// Componentwise `*this <= other`.
  bool divides(const ExponentVector& other) const {
    require_same_size(other);
    for (std::size_t i = 0; i < size(); ++i)
      if (entries_[i] > other.entries_[i]) return false;
    return true;
  }
  Exponent total() const {
    Exponent s = 0;
    for (Exponent e : entries_) s = checked::add(s, e);
    return s;
  }

  ExponentVector operator-() const {
    ExponentVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r.entries_[i] = checked::sub(0, entries_[i]);
    return r;
  }
  ExponentVector& operator+=(const ExponentVector& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) entries_[i] = checked::add(entries_[i], o.entries_[i]);
    return *this;
  }
  ExponentVector& operator-=(const ExponentVector& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) entries_[i] = checked::sub(entries_[i], o.entries_[i]);
    return *this;
  }
  ExponentVector& operator*=(Exponent k) {
    for (Exponent& e : entries_) e = checked::mul(e, k);
    return *this;
  }
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  friend ExponentVector operator*(Exponent k, ExponentVector a) { return a *= k; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  /// Lexicographic order on the entries.
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return a.entries_ <=> b.entries_;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) s += ",";
      s += std::to_string(entries_[i]);
    }
    return s + ")";
  }

  void require_same_size(const ExponentVector& o) const {
    if (o.size() != size())
      throw Error(ErrorCode::LengthMismatch,
                  "vectors of length " + std::to_string(size()) + " and " + std::to_string(o.size()));
  }

 private:
  std::vector<Exponent> entries_;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Exponent e : v) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ull;
    return h;
  }
};

/// Positive and negative parts: v = v+ - v-, disjoint supports.
inline std::pair<ExponentVector, ExponentVector> vector_parts(const ExponentVector& v) {
  ExponentVector plus(v.size()), minus(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0) plus[i] = v[i];
    if (v[i] < 0) minus[i] = checked::sub(0, v[i]);
  }
  return {std::move(plus), std::move(minus)};
}

inline ExponentVector monomial_gcd(const ExponentVector& a, const ExponentVector& b) {
  a.require_same_size(b);
  if (!a.is_nonnegative() || !b.is_nonnegative())
    throw Error(ErrorCode::NegativeExponent, "gcd of non-monomials " + a.str() + ", " + b.str());
  ExponentVector g(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) g[i] = std::min(a[i], b[i]);
  return g;
}

/// Componentwise maximum (lcm of monomials).
inline ExponentVector monomial_lcm(const ExponentVector& a, const ExponentVector& b) {
  a.require_same_size(b);
  ExponentVector l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

/// w . a for a strictly positive weight vector w. The caller decides whether
/// `a` must be nonnegative; the dot product itself is defined for any sign.
inline Exponent dot(const ExponentVector& a, const ExponentVector& w) {
  a.require_same_size(w);
  Exponent s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked::add(s, checked::mul(a[i], w[i]));
  return s;
}

inline Exponent weighted_degree(const ExponentVector& a, const ExponentVector& w) {
  a.require_same_size(w);
  if (!a.is_nonnegative()) throw Error(ErrorCode::NegativeExponent, "degree of " + a.str());
  for (Exponent wi : w)
    if (wi < 1) throw Error(ErrorCode::InvalidArgument, "weight vector must be strictly positive");
  return dot(a, w);
}

inline ExponentVector standard_weights(std::size_t n) {
  return ExponentVector(std::vector<Exponent>(n, 1));
}

/// Name of variable i: a, b, c, ... for small rings, x1, x2, ... otherwise.
inline std::string variable_name(std::size_t i, std::size_t n) {
  if (n <= 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i + 1);
}

inline std::string format_monomial(const ExponentVector& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty() && a.size() > 26) s += "*";
    s += variable_name(i, a.size());
    if (a[i] != 1) s += "^" + std::to_string(a[i]);
  }
  return s.empty() ? "1" : s;
}

/// x^plus - x^minus. Orientation is kept as constructed (the resolution
/// matrices need it); comparison is sign-insensitive via `canonical()`.
class Binomial {
 public:
  Binomial() = default;
  Binomial(ExponentVector plus, ExponentVector minus) : plus_(std::move(plus)), minus_(std::move(minus)) {
    plus_.require_same_size(minus_);
    if (!plus_.is_nonnegative() || !minus_.is_nonnegative())
      throw Error(ErrorCode::NegativeExponent, "binomial terms must be monomials");
  }

  static Binomial zero(std::size_t n) { return Binomial(ExponentVector(n), ExponentVector(n)); }

  const ExponentVector& plus() const noexcept { return plus_; }
  const ExponentVector& minus() const noexcept { return minus_; }
  std::size_t size() const noexcept { return plus_.size(); }

  bool is_zero() const { return plus_ == minus_; }
  bool is_canonical() const { return plus_ >= minus_; }
  Binomial negated() const { return Binomial(minus_, plus_); }
  /// Plus term is lexicographically >= minus term.
  Binomial canonical() const { return is_canonical() ? *this : negated(); }
  /// plus - minus as a signed vector.
  ExponentVector exponent_difference() const { return plus_ - minus_; }

  bool is_homogeneous(const ExponentVector& w) const {
    return weighted_degree(plus_, w) == weighted_degree(minus_, w);
  }
  /// Degree of the plus term.
  Exponent degree(const ExponentVector& w) const { return weighted_degree(plus_, w); }

  /// Sign-insensitive equality.
  friend bool operator==(const Binomial& a, const Binomial& b) {
    const Binomial ca = a.canonical(), cb = b.canonical();
    return ca.plus_ == cb.plus_ && ca.minus_ == cb.minus_;
  }
  friend std::strong_ordering operator<=>(const Binomial& a, const Binomial& b) {
    const Binomial ca = a.canonical(), cb = b.canonical();
    if (auto c = ca.plus_ <=> cb.plus_; c != 0) return c;
    return ca.minus_ <=> cb.minus_;
  }

  std::string str() const {
    if (is_zero()) return "0";
    return format_monomial(plus_) + "-" + format_monomial(minus_);
  }

 private:
  ExponentVector plus_;
  ExponentVector minus_;
};

/// x^{v+} - x^{v-}, canonically signed.
inline Binomial binomial_from_lattice_vector(const ExponentVector& v) {
  if (v.is_zero()) throw Error(ErrorCode::ZeroVector, "no binomial for the zero lattice vector");
  auto [plus, minus] = vector_parts(v);
  return Binomial(std::move(plus), std::move(minus)).canonical();
}

/// Union-find over dense indices, path halving plus union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t count_roots() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i)
      if (find(i) == i) ++c;
    return c;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace latdeg
