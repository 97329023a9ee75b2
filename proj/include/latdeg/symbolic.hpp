#pragma once

// Integer polynomials in the eight degree variables U+, U-, V+, V-, P, R, S, T.
// Enough arithmetic to check the degree and gap identities as exact
// polynomial identities.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "latdeg/core.hpp"
#include "latdeg/profile.hpp"

namespace latdeg::sym {

enum class Var : std::size_t { Up, Um, Vp, Vm, P, R, S, T };
inline constexpr std::size_t kVars = 8;

inline const char* name(Var v) {
  static constexpr const char* names[kVars] = {"U+", "U-", "V+", "V-", "P", "R", "S", "T"};
  return names[static_cast<std::size_t>(v)];
}

using Monomial = std::array<unsigned, kVars>;

class SymPoly {
 public:
  SymPoly() = default;
  SymPoly(long long c) : SymPoly(Integer(c)) {}  // NOLINT: constants read naturally in formulas
  SymPoly(const Integer& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
  }
  SymPoly(Var v) {  // NOLINT
    Monomial m{};
    m[static_cast<std::size_t>(v)] = 1;
    terms_.emplace(m, 1);
  }

  const std::map<Monomial, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  SymPoly& operator+=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  SymPoly& operator-=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  SymPoly operator-() const { return SymPoly() - *this; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        for (std::size_t i = 0; i < kVars; ++i) m[i] = ma[i] + mb[i];
        r.add(m, ca * cb);
      }
    return r;
  }
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

  SymPoly pow(unsigned k) const {
    SymPoly r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  /// Replaces every occurrence of v by `replacement`.
  SymPoly substitute(Var v, const SymPoly& replacement) const {
    const auto idx = static_cast<std::size_t>(v);
    SymPoly r;
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      rest[idx] = 0;
      SymPoly term;
      term.add(rest, c);
      r += term * replacement.pow(m[idx]);
    }
    return r;
  }

  /// Renames variables: variable i becomes perm[i].
  SymPoly permute(const std::array<Var, kVars>& perm) const {
    SymPoly r;
    for (const auto& [m, c] : terms_) {
      Monomial out{};
      for (std::size_t i = 0; i < kVars; ++i) out[static_cast<std::size_t>(perm[i])] += m[i];
      r.add(out, c);
    }
    return r;
  }

  bool contains(Var v) const {
    for (const auto& [m, c] : terms_)
      if (m[static_cast<std::size_t>(v)] > 0) return true;
    return false;
  }

  Integer evaluate(const std::array<Integer, kVars>& values) const {
    Integer total = 0;
    for (const auto& [m, c] : terms_) {
      Integer t = c;
      for (std::size_t i = 0; i < kVars; ++i)
        for (unsigned k = 0; k < m[i]; ++k) t *= values[i];
      total += t;
    }
    return total;
  }
  Integer evaluate(const DegreeProfile& d) const {
    return evaluate(std::array<Integer, kVars>{d.u_plus, d.u_minus, d.v_plus, d.v_minus, d.p, d.r, d.s, d.t});
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < kVars; ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += name(static_cast<Var>(i));
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      const Integer mag = c < 0 ? Integer(-c) : c;
      s += c < 0 ? "-" : (s.empty() ? "" : "+");
      if (mono.empty())
        s += mag.str();
      else
        s += (mag == 1 ? "" : mag.str() + "*") + mono;
    }
    return s;
  }

 private:
  void add(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Monomial, Integer> terms_;
};

using Relation = std::pair<Var, SymPoly>;

inline SymPoly apply_relations(SymPoly p, const std::vector<Relation>& relations) {
  // Replacements may mention other eliminated variables; repeat until none remain.
  for (std::size_t pass = 0; pass <= relations.size(); ++pass) {
    bool changed = false;
    for (const auto& [v, rep] : relations)
      if (p.contains(v)) {
        p = p.substitute(v, rep);
        changed = true;
      }
    if (!changed) return p;
  }
  for (const auto& [v, rep] : relations)
    if (p.contains(v)) throw Error(ErrorCode::InvalidArgument, std::string("cyclic relation for ") + name(v));
  return p;
}

/// lhs - rhs reduces to zero once every relation is applied.
inline bool verify_identity(const SymPoly& lhs, const SymPoly& rhs, const std::vector<Relation>& relations = {}) {
  return apply_relations(lhs - rhs, relations).is_zero();
}

// Variables and the standard expressions.

inline const SymPoly Up{Var::Up}, Um{Var::Um}, Vp{Var::Vp}, Vm{Var::Vm}, P{Var::P}, R{Var::R}, S{Var::S}, T{Var::T};

/// Homogeneity of alpha and beta, solved for U- and V-.
inline std::vector<Relation> minus_eliminations() {
  return {{Var::Um, Up + T + P - S - R}, {Var::Vm, Vp + S + P - T - R}};
}
/// Homogeneity solved for U- and V+ (the elimination of the C+T case).
inline std::vector<Relation> case_eliminations() {
  return {{Var::Um, Up + T + P - S - R}, {Var::Vp, Vm - S - P + T + R}};
}

inline SymPoly deg_alpha() { return Up + T + P; }
inline SymPoly deg_beta() { return Vp + S + P; }
inline SymPoly deg_gamma() { return Up + Vp + 2 * P; }
inline SymPoly deg_delta() { return Up + Vm + 2 * T; }

inline std::array<std::vector<SymPoly>, 3> shift_polys() {
  const SymPoly A = deg_alpha(), B = deg_beta(), C = deg_gamma(), D = deg_delta();
  return {std::vector<SymPoly>{A, B, C, D}, std::vector<SymPoly>{C + T, C + S, D + P, D + R},
          std::vector<SymPoly>{C + S + T}};
}

/// k-th derivative of f at 1, with y^d contributing d (d-1) ... (d-k+1).
inline SymPoly numerator_derivative(unsigned k) {
  auto falling = [k](const SymPoly& d) {
    SymPoly r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * (d - SymPoly(static_cast<long long>(i)));
    return r;
  };
  SymPoly total = k == 0 ? SymPoly(1) : SymPoly(0);
  const auto steps = shift_polys();
  for (std::size_t step = 0; step < 3; ++step)
    for (const auto& d : steps[step]) total += step % 2 == 0 ? -falling(d) : falling(d);
  return total;
}

inline SymPoly closed_form_degree() {
  return Up * Vp + Up * P + Vp * P + P * P - P * R + Up * S + P * S + Vp * T + P * T;
}

/// The explicit gap for M1 = deg delta, M2 = deg gamma + T, in U+, V-, P, R, S, T.
inline SymPoly explicit_case_expression() {
  return Up * Up + Vm * Vm + Up * (P - S) + Vm * (R - S) + Up * (T - R) + Up * T + Vm * (T - P) + Vm * T +
         2 * T * T;
}

/// Same expression with 2T^2 replaced by T^2; must not verify.
inline SymPoly corrupted_case_expression() { return explicit_case_expression() - T * T; }

// Relabelings of a quadrangle that preserve the degree formula.
/// alpha <-> beta: U <-> V, S <-> T (gamma fixed, delta reversed).
inline constexpr std::array<Var, kVars> swap_edges = {Var::Vp, Var::Vm, Var::Up, Var::Um,
                                                      Var::P,  Var::R,  Var::T,  Var::S};
/// alpha reversed: U+ <-> U-, P <-> S, T <-> R (gamma <-> delta).
inline constexpr std::array<Var, kVars> flip_alpha = {Var::Um, Var::Up, Var::Vp, Var::Vm,
                                                      Var::S,  Var::T,  Var::P,  Var::R};
/// beta reversed: V+ <-> V-, P <-> T, S <-> R (gamma <-> delta).
inline constexpr std::array<Var, kVars> flip_beta = {Var::Up, Var::Um, Var::Vm, Var::Vp,
                                                     Var::T,  Var::S,  Var::R,  Var::P};

}  // namespace latdeg::sym
