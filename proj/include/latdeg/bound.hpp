#pragma once

// deg <= M1 M2 / 2 at the level of degree profiles: reports, the per-case
// gap expressions, and exhaustive or random exploration of the gap.

#include <array>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "latdeg/hilbert.hpp"
#include "latdeg/profile.hpp"
#include "latdeg/symbolic.hpp"

namespace latdeg {

struct BoundReport {
  Integer M1, M2, m1, m2;
  Integer degree;
  Integer gap;  // M1 M2 - 2 deg
  bool holds = false;
  std::vector<std::string> m1_attained_by;  // among alpha, beta, gamma, delta
  std::vector<std::string> m2_attained_by;  // among gamma+T, gamma+S, delta+P, delta+R
};

inline BoundReport bound_from_values(Integer M1, Integer M2, Integer m1, Integer m2, Integer degree) {
  BoundReport r{std::move(M1), std::move(M2), std::move(m1), std::move(m2), std::move(degree), 0, false, {}, {}};
  r.gap = r.M1 * r.M2 - 2 * r.degree;
  r.holds = r.gap >= 0;
  return r;
}

inline BoundReport bound_report(const DegreeProfile& prof) {
  const ShiftTable s = prof.shifts();
  BoundReport r = bound_from_values(s.max(0), s.max(1), s.min(0), s.min(1), degree_closed_form(prof));
  static constexpr const char* gens[4] = {"alpha", "beta", "gamma", "delta"};
  static constexpr const char* syz[4] = {"gamma+T", "gamma+S", "delta+P", "delta+R"};
  for (std::size_t j = 0; j < 4; ++j) {
    if (s.steps[0][j] == r.M1) r.m1_attained_by.emplace_back(gens[j]);
    if (s.steps[1][j] == r.M2) r.m2_attained_by.emplace_back(syz[j]);
  }
  return r;
}

/// Which generator gives M1 and which syzygy column gives M2.
struct GapCase {
  enum class Top { Gamma, Delta } m1 = Top::Delta;
  enum class Column { GammaT, GammaS, DeltaP, DeltaR } m2 = Column::GammaT;

  friend bool operator==(const GapCase&, const GapCase&) = default;

  std::string str() const {
    static constexpr const char* cols[4] = {"gamma+T", "gamma+S", "delta+P", "delta+R"};
    return std::string("M1=") + (m1 == Top::Gamma ? "gamma" : "delta") + ",M2=" +
           cols[static_cast<std::size_t>(m2)];
  }
};

inline std::array<GapCase, 8> all_gap_cases() {
  using Top = GapCase::Top;
  using Col = GapCase::Column;
  std::array<GapCase, 8> out;
  std::size_t k = 0;
  for (Top t : {Top::Delta, Top::Gamma})
    for (Col c : {Col::GammaT, Col::GammaS, Col::DeltaP, Col::DeltaR}) out[k++] = {t, c};
  return out;
}

struct CaseExpression {
  GapCase which;
  sym::SymPoly expression;
  /// Pairs (x, y) meaning x >= y must hold in this case; empty when none are known.
  std::vector<std::pair<sym::Var, sym::Var>> inequalities;
  /// True for the explicit case and its relabelings; false when the
  /// expression is just the gap with U- and V- eliminated.
  bool from_relabeling = false;
};

/// The gap polynomial M1 M2 - 2 deg for a case, before any elimination.
inline sym::SymPoly gap_polynomial(GapCase c) {
  using namespace sym;
  const SymPoly C = deg_gamma(), D = deg_delta();
  const SymPoly M1 = c.m1 == GapCase::Top::Gamma ? C : D;
  SymPoly M2;
  switch (c.m2) {
    case GapCase::Column::GammaT: M2 = C + T; break;
    case GapCase::Column::GammaS: M2 = C + S; break;
    case GapCase::Column::DeltaP: M2 = D + P; break;
    case GapCase::Column::DeltaR: M2 = D + R; break;
  }
  return M1 * M2 - 2 * closed_form_degree();
}

/// Expression for each case. (delta, gamma+T) is the explicit one; its images
/// under the edge swap and the two edge reversals give three more cases,
/// with the inequalities carried along. The remaining four are the gap
/// polynomial with U- and V- eliminated.
inline const CaseExpression& case_expression(GapCase c) {
  static const std::array<CaseExpression, 8> table = [] {
    using namespace sym;
    using Top = GapCase::Top;
    using Col = GapCase::Column;
    const SymPoly base = explicit_case_expression();
    const std::vector<std::pair<Var, Var>> ineq = {{Var::P, Var::S}, {Var::R, Var::S}, {Var::T, Var::R}, {Var::T, Var::P}};
    auto map_ineq = [&](const std::array<Var, kVars>& perm) {
      std::vector<std::pair<Var, Var>> out;
      for (auto [x, y] : ineq) out.emplace_back(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
      return out;
    };
    std::array<CaseExpression, 8> t;
    std::size_t k = 0;
    for (GapCase g : all_gap_cases()) {
      CaseExpression e{g, {}, {}, false};
      if (g == GapCase{Top::Delta, Col::GammaT}) {
        e = {g, base, ineq, true};
      } else if (g == GapCase{Top::Delta, Col::GammaS}) {
        e = {g, base.permute(swap_edges), map_ineq(swap_edges), true};
      } else if (g == GapCase{Top::Gamma, Col::DeltaR}) {
        e = {g, base.permute(flip_alpha), map_ineq(flip_alpha), true};
      } else if (g == GapCase{Top::Gamma, Col::DeltaP}) {
        e = {g, base.permute(flip_beta), map_ineq(flip_beta), true};
      } else {
        e.expression = apply_relations(gap_polynomial(g), minus_eliminations());
      }
      t[k++] = std::move(e);
    }
    return t;
  }();
  for (const auto& e : table)
    if (e.which == c) return e;
  throw Error(ErrorCode::InvalidArgument, "unknown case");
}

/// Each case expression equals its gap polynomial once U- and V- are eliminated.
inline bool verify_case_expression(GapCase c) {
  return sym::verify_identity(case_expression(c).expression, gap_polynomial(c), sym::minus_eliminations());
}

inline bool case_attained(const DegreeProfile& prof, GapCase c) {
  const ShiftTable s = prof.shifts();
  const Integer& top = c.m1 == GapCase::Top::Gamma ? s.steps[0][2] : s.steps[0][3];
  return top == s.max(0) && s.steps[1][static_cast<std::size_t>(c.m2)] == s.max(1);
}

inline bool case_inequalities_hold(const DegreeProfile& prof, GapCase c) {
  const std::array<Integer, sym::kVars> v = {prof.u_plus, prof.u_minus, prof.v_plus, prof.v_minus,
                                             prof.p,      prof.r,       prof.s,      prof.t};
  for (auto [x, y] : case_expression(c).inequalities)
    if (v[static_cast<std::size_t>(x)] < v[static_cast<std::size_t>(y)]) return false;
  return true;
}

/// Value of the case expression; the profile must attain the case and
/// satisfy its inequalities.
inline Integer case_gap_expression(const DegreeProfile& prof, GapCase c) {
  prof.require_valid();
  if (!case_attained(prof, c))
    throw Error(ErrorCode::CaseMismatch, c.str() + " is not attained by " + prof.str());
  if (!case_inequalities_hold(prof, c))
    throw Error(ErrorCode::CaseMismatch, "inequalities of " + c.str() + " fail for " + prof.str());
  return case_expression(c).expression.evaluate(prof);
}

struct ExplorationReport {
  std::size_t profiles = 0;
  std::optional<Integer> min_gap;
  std::vector<DegreeProfile> min_gap_profiles;
  /// Minimum over profiles with some of P, R, S, T nonzero.
  std::optional<Integer> min_quadrangle_gap;
  std::vector<DegreeProfile> min_quadrangle_gap_profiles;
  std::vector<DegreeProfile> violations;             // gap < 0
  std::size_t zero_gap_profiles = 0;
  std::vector<DegreeProfile> rigidity_failures;      // gap 0 with some of P, R, S, T nonzero
  std::vector<DegreeProfile> degree_mismatches;      // closed form != f''(1)/2
  std::vector<DegreeProfile> case_mismatches;        // case expression != gap
  std::size_t attained_relabeled_cases = 0;
  std::vector<DegreeProfile> implication_failures;   // case attained, inequalities fail
  /// Profiles meeting the four C+T inequalities with M2 = gamma+T but M1 =
  /// gamma, where the explicit expression (written for M1 = delta) differs.
  std::size_t explicit_expression_off_case = 0;

  bool clean() const {
    return violations.empty() && rigidity_failures.empty() && degree_mismatches.empty() && case_mismatches.empty() &&
           implication_failures.empty();
  }
};

using ProfileVisitor = std::function<void(const DegreeProfile&, const BoundReport&)>;

namespace detail {

inline void record(ExplorationReport& rep, const DegreeProfile& prof, const BoundReport& b) {
  ++rep.profiles;
  if (!rep.min_gap || b.gap < *rep.min_gap) {
    rep.min_gap = b.gap;
    rep.min_gap_profiles.clear();
  }
  if (b.gap == *rep.min_gap) rep.min_gap_profiles.push_back(prof);
  if (!prof.cohen_macaulay_degenerate()) {
    if (!rep.min_quadrangle_gap || b.gap < *rep.min_quadrangle_gap) {
      rep.min_quadrangle_gap = b.gap;
      rep.min_quadrangle_gap_profiles.clear();
    }
    if (b.gap == *rep.min_quadrangle_gap) rep.min_quadrangle_gap_profiles.push_back(prof);
  }
  if (!b.holds) rep.violations.push_back(prof);
  if (b.gap == 0) {
    ++rep.zero_gap_profiles;
    if (!prof.cohen_macaulay_degenerate()) rep.rigidity_failures.push_back(prof);
  }
  if (degree_from_numerator(hilbert_numerator(prof)) != b.degree) rep.degree_mismatches.push_back(prof);

  for (GapCase c : all_gap_cases()) {
    if (!case_attained(prof, c)) continue;
    const CaseExpression& e = case_expression(c);
    if (e.from_relabeling) {
      ++rep.attained_relabeled_cases;
      if (!case_inequalities_hold(prof, c)) rep.implication_failures.push_back(prof);
    }
    if (e.expression.evaluate(prof) != b.gap) rep.case_mismatches.push_back(prof);
  }
  const GapCase explicit_case{GapCase::Top::Delta, GapCase::Column::GammaT};
  const GapCase off_case{GapCase::Top::Gamma, GapCase::Column::GammaT};
  if (case_attained(prof, off_case) && !case_attained(prof, explicit_case) &&
      case_inequalities_hold(prof, explicit_case) &&
      case_expression(explicit_case).expression.evaluate(prof) != b.gap)
    ++rep.explicit_expression_off_case;
}

}  // namespace detail

/// Every valid profile with U+, V+, P, R, S, T in [0, max_entry].
inline ExplorationReport explore_grid(int max_entry, const ProfileVisitor& visit = {}) {
  if (max_entry < 1) throw Error(ErrorCode::InvalidArgument, "grid size must be at least 1");
  ExplorationReport rep;
  for (int up = 0; up <= max_entry; ++up)
    for (int vp = 0; vp <= max_entry; ++vp)
      for (int p = 0; p <= max_entry; ++p)
        for (int r = 0; r <= max_entry; ++r)
          for (int s = 0; s <= max_entry; ++s)
            for (int t = 0; t <= max_entry; ++t) {
              const DegreeProfile prof = DegreeProfile::from_free(up, vp, p, r, s, t);
              if (!prof.valid()) continue;
              const BoundReport b = bound_report(prof);
              detail::record(rep, prof, b);
              if (visit) visit(prof, b);
            }
  return rep;
}

/// `count` valid profiles with free entries drawn uniformly from [0, max_entry].
inline ExplorationReport explore_random(std::size_t count, std::uint64_t seed, int max_entry = 50,
                                        const ProfileVisitor& visit = {}) {
  if (max_entry < 1) throw Error(ErrorCode::InvalidArgument, "entry bound must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, max_entry);
  ExplorationReport rep;
  while (rep.profiles < count) {
    const int up = pick(rng), vp = pick(rng), p = pick(rng), r = pick(rng), s = pick(rng), t = pick(rng);
    const DegreeProfile prof = DegreeProfile::from_free(up, vp, p, r, s, t);
    if (!prof.valid()) continue;
    const BoundReport b = bound_report(prof);
    detail::record(rep, prof, b);
    if (visit) visit(prof, b);
  }
  return rep;
}

struct FamilyReport {
  DegreeProfile profile;
  BoundReport bound;
  Integer expected_gap;  // 2u^2 + 2up + 2p^2
  bool matches = false;
};

/// U+ = U- = V+ = V- = u and P = R = S = T = p.
inline FamilyReport tight_family(int u, int p) {
  if (u < 0 || p < 0 || u + p == 0) throw Error(ErrorCode::InvalidArgument, "family needs u, p >= 0, not both zero");
  FamilyReport f;
  f.profile = DegreeProfile::from_free(u, u, p, p, p, p);
  f.bound = bound_report(f.profile);
  const Integer U = u, Pv = p;
  f.expected_gap = 2 * U * U + 2 * U * Pv + 2 * Pv * Pv;
  f.matches = f.bound.gap == f.expected_gap;
  return f;
}

/// Coefficients (a, b, c) of gap = a u^2 + b u p + c p^2 when the family gap
/// is exactly a quadratic form on 0 <= u <= max_u, 0 <= p <= max_p.
inline std::optional<std::array<Integer, 3>> family_quadratic_form(int max_u, int max_p) {
  const Integer g0 = tight_family(0, 1).bound.gap, g1 = tight_family(1, 1).bound.gap,
                g2 = tight_family(2, 1).bound.gap;
  // g(u, 1) = a u^2 + b u + c
  const Integer c = g0;
  const Integer a2 = g2 - 2 * g1 + g0;  // 2a
  if (a2 % 2 != 0) return std::nullopt;
  const Integer a = a2 / 2;
  const Integer b = g1 - a - c;
  for (int u = 0; u <= max_u; ++u)
    for (int p = u ? 0 : 1; p <= max_p; ++p)
      if (tight_family(u, p).bound.gap != a * u * u + b * u * p + c * p * p) return std::nullopt;
  return std::array<Integer, 3>{a, b, c};
}

}  // namespace latdeg
