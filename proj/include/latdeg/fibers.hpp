#pragma once

// Fibers of the Z^n/L grading. The monomials of the class of x^a are
// x^{a - Bu} for the lattice points u in {u in Z^2 : Bu <= a}; the convex hull
// of those points is the fiber polytope.
//
// Which fibers carry minimal syzygies is decided by the support complex of the
// fiber (the simplicial complex on the variables generated by the supports of
// its monomials): the i-th multigraded Betti number of I_L in that degree is
// the dimension of its reduced homology in dimension i.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latdeg/core.hpp"
#include "latdeg/lattice.hpp"

namespace latdeg {

struct Point2 {
  Exponent x = 0;
  Exponent y = 0;
  friend bool operator==(const Point2&, const Point2&) = default;
  friend auto operator<=>(const Point2&, const Point2&) = default;
  Point2 operator-(const Point2& o) const { return {checked::sub(x, o.x), checked::sub(y, o.y)}; }
  Point2 operator+(const Point2& o) const { return {checked::add(x, o.x), checked::add(y, o.y)}; }
};

inline Wide cross(const Point2& o, const Point2& a, const Point2& b) {
  return Wide(a.x - o.x) * (b.y - o.y) - Wide(a.y - o.y) * (b.x - o.x);
}

namespace detail {

inline Exponent floor_div(Wide num, Wide den) {
  if (den < 0) num = -num, den = -den;
  Wide q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return static_cast<Exponent>(q);
}

inline Exponent ceil_div(Wide num, Wide den) {
  if (den < 0) num = -num, den = -den;
  Wide q = num / den;
  if ((num % den != 0) && (num > 0)) ++q;
  return static_cast<Exponent>(q);
}

}  // namespace detail

/// Throws UnboundedFiber when {u : Bu <= 0} contains a nonzero direction.
/// Every extreme ray of that cone lies on a line B_i . u = 0, so checking
/// the 2n candidate directions is exhaustive.
inline void require_bounded_fibers(const LatticeBasis& basis) {
  if (basis.rank() != 2) throw Error(ErrorCode::RankDeficient, "fibers need a rank-2 basis");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Exponent p = basis.b1()[i], q = basis.b2()[i];
    if (p == 0 && q == 0) continue;
    for (int sign : {1, -1}) {
      const Wide d1 = Wide(-q) * sign, d2 = Wide(p) * sign;
      bool recedes = true;
      for (std::size_t k = 0; k < basis.size() && recedes; ++k)
        recedes = Wide(basis.b1()[k]) * d1 + Wide(basis.b2()[k]) * d2 <= 0;
      if (recedes)
        throw Error(ErrorCode::UnboundedFiber, "the lattice contains a nonnegative direction; fibers are infinite");
    }
  }
}

/// All u in Z^2 with a - Bu >= 0, sorted lexicographically.
inline std::vector<Point2> fiber_points(const ExponentVector& a, const LatticeBasis& basis) {
  a.require_same_size(basis.b1());
  if (!a.is_nonnegative()) throw Error(ErrorCode::NegativeExponent, "fiber of non-monomial " + a.str());
  require_bounded_fibers(basis);
  const std::size_t n = a.size();
  const auto& b1 = basis.b1();
  const auto& b2 = basis.b2();

  // Range of u1 over the polygon: extreme u1 is attained at a vertex, and
  // every vertex is the intersection of two constraint lines.
  std::optional<Exponent> lo, hi;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Wide det = basis.minor(i, j);
      if (det == 0) continue;
      const Wide num1 = Wide(a[i]) * b2[j] - Wide(a[j]) * b2[i];
      const Wide num2 = Wide(b1[i]) * a[j] - Wide(b1[j]) * a[i];
      bool feasible = true;
      for (std::size_t k = 0; k < n && feasible; ++k) {
        const Wide lhs = Wide(b1[k]) * num1 + Wide(b2[k]) * num2;
        const Wide rhs = Wide(a[k]) * det;
        feasible = det > 0 ? lhs <= rhs : lhs >= rhs;
      }
      if (!feasible) continue;
      const Exponent f = detail::floor_div(num1, det), c = detail::ceil_div(num1, det);
      lo = lo ? std::min(*lo, f) : f;
      hi = hi ? std::max(*hi, c) : c;
    }
  }
  if (!lo) lo = hi = 0;

  std::vector<Point2> pts;
  for (Exponent u1 = *lo; u1 <= *hi; ++u1) {
    Wide u2lo = INT64_MIN, u2hi = INT64_MAX;
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      const Wide rest = Wide(a[k]) - Wide(b1[k]) * u1;  // b2[k] * u2 <= rest
      if (b2[k] > 0)
        u2hi = std::min<Wide>(u2hi, detail::floor_div(rest, b2[k]));
      else if (b2[k] < 0)
        u2lo = std::max<Wide>(u2lo, detail::ceil_div(rest, b2[k]));
      else
        ok = rest >= 0;
    }
    if (!ok) continue;
    if (u2lo == INT64_MIN || u2hi == INT64_MAX) throw Error(ErrorCode::UnboundedFiber, "unbounded fiber column");
    for (Wide u2 = u2lo; u2 <= u2hi; ++u2) pts.push_back({u1, static_cast<Exponent>(u2)});
  }
  return pts;
}

struct Fiber {
  ExponentVector representative;
  std::vector<Point2> points;
  Exponent degree = 0;

  ExponentVector monomial(const Point2& u, const LatticeBasis& basis) const {
    return representative - basis.apply(u.x, u.y);
  }
  std::vector<ExponentVector> monomials(const LatticeBasis& basis) const {
    std::vector<ExponentVector> out;
    out.reserve(points.size());
    for (const auto& u : points) out.push_back(monomial(u, basis));
    return out;
  }
};

inline Fiber make_fiber(const ExponentVector& a, const LatticeBasis& basis) {
  return Fiber{a, fiber_points(a, basis), weighted_degree(a, basis.weights())};
}

/// Lexicographically smallest monomial in the class of x^a.
inline ExponentVector canonical_representative(const ExponentVector& a, const LatticeBasis& basis) {
  const auto pts = fiber_points(a, basis);
  ExponentVector best = a;
  for (const auto& u : pts) {
    ExponentVector m = a - basis.apply(u.x, u.y);
    if (m < best) best = std::move(m);
  }
  return best;
}

/// Counterclockwise hull vertices without collinear points, starting at the
/// lexicographically smallest point.
inline std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

enum class PolytopeShape { Point, Segment, Triangle, Quadrangle, Other };

constexpr std::string_view to_string(PolytopeShape s) {
  switch (s) {
    case PolytopeShape::Point: return "point";
    case PolytopeShape::Segment: return "segment";
    case PolytopeShape::Triangle: return "triangle";
    case PolytopeShape::Quadrangle: return "quadrangle";
    case PolytopeShape::Other: return "other";
  }
  return "other";
}

struct FiberPolytope {
  std::vector<Point2> vertices;
  PolytopeShape shape = PolytopeShape::Point;
  /// Every lattice point of the fiber is a vertex.
  bool primitive = false;
  std::size_t point_count = 0;
};

inline FiberPolytope polytope_of(const std::vector<Point2>& points) {
  FiberPolytope poly;
  poly.vertices = convex_hull(points);
  poly.point_count = points.size();
  switch (poly.vertices.size()) {
    case 0:
    case 1: poly.shape = PolytopeShape::Point; break;
    case 2: poly.shape = PolytopeShape::Segment; break;
    case 3: poly.shape = PolytopeShape::Triangle; break;
    case 4: poly.shape = PolytopeShape::Quadrangle; break;
    default: poly.shape = PolytopeShape::Other; break;
  }
  poly.primitive = poly.point_count == poly.vertices.size();
  return poly;
}

inline FiberPolytope fiber_polytope(const ExponentVector& a, const LatticeBasis& basis) {
  return polytope_of(fiber_points(a, basis));
}

namespace detail {

inline constexpr std::uint64_t kHomologyPrime = 2147483647ull;

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kHomologyPrime;
  while (e) {
    if (e & 1) r = r * b % kHomologyPrime;
    b = b * b % kHomologyPrime;
    e >>= 1;
  }
  return r;
}

inline std::size_t rank_mod_prime(std::vector<std::vector<std::uint64_t>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const std::uint64_t inv = pow_mod(m[rank][c], kHomologyPrime - 2);
    for (auto& x : m[rank]) x = x * inv % kHomologyPrime;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint64_t f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k)
        m[r][k] = (m[r][k] + (kHomologyPrime - f) * m[rank][k]) % kHomologyPrime;
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Reduced homology ranks of the simplicial complex generated by the given
/// variable supports: result[k] = dim H~_{k-1}, k = 0..n. Ranks are taken
/// over GF(2^31 - 1).
inline std::vector<std::size_t> support_complex_homology(const std::vector<std::uint64_t>& supports, std::size_t n) {
  if (n > 20) throw Error(ErrorCode::ResourceLimit, "support complex on more than 20 variables");
  std::vector<std::uint8_t> is_face(std::size_t{1} << n, 0);
  for (std::uint64_t s : supports) {
    if (is_face[s]) continue;
    for (std::uint64_t sub = s;; sub = (sub - 1) & s) {
      is_face[sub] = 1;
      if (sub == 0) break;
    }
  }
  // faces[d + 1] lists faces of dimension d (the empty face has dimension -1).
  std::vector<std::vector<std::uint64_t>> faces(n + 1);
  for (std::uint64_t f = 0; f < is_face.size(); ++f)
    if (is_face[f]) faces[static_cast<std::size_t>(__builtin_popcountll(f))].push_back(f);

  // boundary_rank[k]: rank of the map from faces with k vertices to faces with k - 1.
  std::vector<std::size_t> boundary_rank(n + 2, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    if (faces[k].empty() || faces[k - 1].empty()) continue;
    std::map<std::uint64_t, std::size_t> row_of;
    for (std::size_t r = 0; r < faces[k - 1].size(); ++r) row_of[faces[k - 1][r]] = r;
    std::vector<std::vector<std::uint64_t>> m(faces[k - 1].size(), std::vector<std::uint64_t>(faces[k].size(), 0));
    for (std::size_t c = 0; c < faces[k].size(); ++c) {
      const std::uint64_t f = faces[k][c];
      int sign = 1;
      for (std::size_t v = 0; v < n; ++v) {
        if (!((f >> v) & 1)) continue;
        m[row_of.at(f & ~(std::uint64_t{1} << v))][c] = sign > 0 ? 1 : detail::kHomologyPrime - 1;
        sign = -sign;
      }
    }
    boundary_rank[k] = detail::rank_mod_prime(std::move(m));
  }
  std::vector<std::size_t> h(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k)
    h[k] = faces[k].size() - boundary_rank[k] - boundary_rank[k + 1];
  return h;
}

inline std::uint64_t support_mask(const ExponentVector& m) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) s |= std::uint64_t{1} << i;
  return s;
}

/// Multigraded Betti numbers of R/I_L in the degree of the given fiber
/// monomials: entry i is beta_i (entry 0 is 1 only for the degree of 1).
inline std::vector<std::size_t> fiber_betti(const std::vector<ExponentVector>& monomials, std::size_t n) {
  std::vector<std::uint64_t> supports;
  supports.reserve(monomials.size());
  for (const auto& m : monomials) supports.push_back(support_mask(m));
  return support_complex_homology(supports, n);
}

struct GeneratorRecord {
  Binomial binomial;
  Exponent degree = 0;
  ExponentVector multidegree;  // canonical representative of its class
};

struct QuadrangleFiber {
  ExponentVector multidegree;
  Exponent degree = 0;
  std::array<Point2, 4> vertices;          // counterclockwise
  std::array<ExponentVector, 4> monomials;  // x^{a - B u} at each vertex
};

struct BettiRecord {
  ExponentVector multidegree;
  Exponent degree = 0;
  std::vector<std::size_t> betti;  // index i = homological step i of R/I_L
  PolytopeShape shape = PolytopeShape::Point;
  std::size_t point_count = 0;
};

struct SyzygyScan {
  Exponent max_degree = 0;
  std::vector<GeneratorRecord> generators;
  std::vector<QuadrangleFiber> quadrangles;
  std::size_t triangle_count = 0;  // fibers carrying first syzygies
  std::vector<BettiRecord> betti;  // every fiber with a nonzero Betti number, step >= 1
  std::vector<std::string> warnings;

  /// Total Betti numbers per homological step (index 0 unused).
  std::vector<std::size_t> betti_totals() const {
    std::vector<std::size_t> totals(4, 0);
    totals[0] = 1;
    for (const auto& r : betti)
      for (std::size_t i = 1; i < r.betti.size(); ++i) {
        if (i >= totals.size()) totals.resize(i + 1, 0);
        totals[i] += r.betti[i];
      }
    return totals;
  }
};

namespace detail {

/// Calls f(a) for every a >= 0 with w . a == target and a[skip] == 0.
template <class F>
void for_each_monomial_of_degree(const ExponentVector& w, Exponent target, std::size_t skip, F&& f) {
  const std::size_t n = w.size();
  ExponentVector a(n);
  auto rec = [&](auto&& self, std::size_t i, Exponent remaining) -> void {
    if (i == n) {
      if (remaining == 0) f(static_cast<const ExponentVector&>(a));
      return;
    }
    if (i == skip) {
      self(self, i + 1, remaining);
      return;
    }
    for (Exponent e = 0; e * w[i] <= remaining; ++e) {
      a[i] = e;
      self(self, i + 1, remaining - e * w[i]);
    }
    a[i] = 0;
  };
  rec(rec, 0, target);
}

}  // namespace detail

/// Calls f(a) for every monomial of weighted degree `target`.
template <class F>
void for_each_monomial_of_degree(const ExponentVector& w, Exponent target, F&& f) {
  detail::for_each_monomial_of_degree(w, target, w.size(), std::forward<F>(f));
}

/// Scans all fibers of weighted degree <= max_degree and extracts minimal
/// generators, syzygy quadrangles and the multigraded Betti table.
///
/// Only fibers whose monomials have trivial gcd can carry minimal syzygies
/// (otherwise the support complex is a cone). Such a fiber always contains a
/// monomial free of the last variable, so candidates are restricted to
/// those and each fiber is visited once, from its smallest such monomial.
inline SyzygyScan enumerate_syzygy_fibers(const LatticeBasis& basis, Exponent max_degree) {
  const std::size_t n = basis.size();
  const ExponentVector& w = basis.weights();
  require_bounded_fibers(basis);
  SyzygyScan scan;
  scan.max_degree = max_degree;
  const std::size_t pinned = n - 1;

  for (Exponent t = 1; t <= max_degree; ++t) {
    detail::for_each_monomial_of_degree(w, t, pinned, [&](const ExponentVector& a) {
      const auto pts = fiber_points(a, basis);
      std::vector<ExponentVector> mons;
      mons.reserve(pts.size());
      ExponentVector gcd = a;
      for (const auto& u : pts) {
        ExponentVector m = a - basis.apply(u.x, u.y);
        if (m[pinned] == 0 && m < a) return;  // visited from a smaller candidate
        for (std::size_t i = 0; i < n; ++i) gcd[i] = std::min(gcd[i], m[i]);
        mons.push_back(std::move(m));
      }
      if (!gcd.is_zero()) return;

      const auto h = fiber_betti(mons, n);
      if (std::all_of(h.begin() + 1, h.end(), [](std::size_t x) { return x == 0; })) return;

      const ExponentVector key = *std::min_element(mons.begin(), mons.end());
      const FiberPolytope poly = polytope_of(pts);
      scan.betti.push_back({key, t, h, poly.shape, poly.point_count});

      if (h[1] > 0) {
        // One generator per extra connected component of the fiber graph
        // (monomials adjacent when they share a variable).
        DisjointSets comps(mons.size());
        for (std::size_t i = 0; i < mons.size(); ++i)
          for (std::size_t j = i + 1; j < mons.size(); ++j)
            if (support_mask(mons[i]) & support_mask(mons[j])) comps.unite(i, j);
        std::map<std::size_t, ExponentVector> smallest;
        for (std::size_t i = 0; i < mons.size(); ++i) {
          auto [it, fresh] = smallest.try_emplace(comps.find(i), mons[i]);
          if (!fresh && mons[i] < it->second) it->second = mons[i];
        }
        std::vector<ExponentVector> reps;
        for (auto& [root, m] : smallest) reps.push_back(m);
        std::sort(reps.begin(), reps.end());
        for (std::size_t j = 1; j < reps.size(); ++j)
          scan.generators.push_back({Binomial(reps[0], reps[j]).canonical(), t, key});
        if (poly.shape != PolytopeShape::Segment || !poly.primitive)
          scan.warnings.push_back("generator degree " + key.str() + " has a " + std::string(to_string(poly.shape)) +
                                  " fiber with " + std::to_string(poly.point_count) + " points");
      }
      if (h[2] > 0) ++scan.triangle_count;
      if (h.size() > 3 && h[3] > 0) {
        if (poly.shape == PolytopeShape::Quadrangle && poly.primitive) {
          QuadrangleFiber q;
          q.multidegree = key;
          q.degree = t;
          for (std::size_t v = 0; v < 4; ++v) {
            q.vertices[v] = poly.vertices[v];
            q.monomials[v] = a - basis.apply(poly.vertices[v].x, poly.vertices[v].y);
          }
          scan.quadrangles.push_back(std::move(q));
          if (h[3] > 1)
            scan.warnings.push_back("quadrangle fiber " + key.str() + " carries " + std::to_string(h[3]) +
                                    " second syzygies");
        } else {
          scan.warnings.push_back("second syzygy in degree " + key.str() + " whose fiber is a " +
                                  std::string(to_string(poly.shape)) + " with " + std::to_string(poly.point_count) +
                                  " points; not split");
        }
      }
      for (std::size_t i = 4; i < h.size(); ++i)
        if (h[i] > 0)
          scan.warnings.push_back("homological step " + std::to_string(i) + " nonzero in degree " + key.str());
    });
  }

  auto by_degree = [](const auto& x, const auto& y) {
    return std::tie(x.degree, x.multidegree) < std::tie(y.degree, y.multidegree);
  };
  std::stable_sort(scan.generators.begin(), scan.generators.end(), [](const auto& x, const auto& y) {
    return std::tie(x.degree, x.multidegree, x.binomial) < std::tie(y.degree, y.multidegree, y.binomial);
  });
  std::stable_sort(scan.quadrangles.begin(), scan.quadrangles.end(), by_degree);
  std::stable_sort(scan.betti.begin(), scan.betti.end(), by_degree);
  scan.warnings.insert(scan.warnings.begin(),
                       "enumeration truncated at weighted degree " + std::to_string(max_degree) +
                           "; syzygies of higher degree are not searched");
  return scan;
}

/// Default truncation degree: 4 * (max |entry|) * n.
inline Exponent default_max_degree(const LatticeBasis& basis) {
  return checked::mul(checked::mul(4, basis.max_abs_entry()), static_cast<Exponent>(basis.size()));
}

}  // namespace latdeg
