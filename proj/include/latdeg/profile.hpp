#pragma once

#include <array>
#include <string>
#include <vector>

#include "latdeg/core.hpp"

namespace latdeg {

/// Graded shifts of a complex, one list per homological step:
/// steps[0] = generators, steps[1] = first syzygies, steps[2] = second.
struct ShiftTable {
  std::array<std::vector<Integer>, 3> steps;

  Integer max(std::size_t step) const {
    const auto& s = steps.at(step);
    if (s.empty()) throw Error(ErrorCode::EmptyDecomposition, "no shifts at step " + std::to_string(step + 1));
    return *std::max_element(s.begin(), s.end());
  }
  Integer min(std::size_t step) const {
    const auto& s = steps.at(step);
    if (s.empty()) throw Error(ErrorCode::EmptyDecomposition, "no shifts at step " + std::to_string(step + 1));
    return *std::min_element(s.begin(), s.end());
  }
};

/// Weighted degrees of the eight split vectors of one syzygy quadrangle.
///
///   deg alpha = U+ + T + P = U- + S + R      deg gamma = U+ + V+ + 2P = U- + V- + 2R
///   deg beta  = V+ + S + P = V- + T + R      deg delta = U+ + V- + 2T = U- + V+ + 2S
struct DegreeProfile {
  Integer u_plus, u_minus, v_plus, v_minus, p, r, s, t;

  /// Fills U- and V- from the homogeneity of alpha and beta.
  static DegreeProfile from_free(Integer u_plus, Integer v_plus, Integer p, Integer r, Integer s, Integer t) {
    DegreeProfile d{u_plus, 0, v_plus, 0, p, r, s, t};
    d.u_minus = u_plus + t + p - s - r;
    d.v_minus = v_plus + s + p - t - r;
    return d;
  }

  Integer alpha() const { return u_plus + t + p; }
  Integer beta() const { return v_plus + s + p; }
  Integer gamma() const { return u_plus + v_plus + 2 * p; }
  Integer delta() const { return u_plus + v_minus + 2 * t; }

  /// Empty when the profile is valid; otherwise the first violated condition.
  std::string violation() const {
    for (const Integer* x : {&u_plus, &u_minus, &v_plus, &v_minus, &p, &r, &s, &t})
      if (*x < 0) return "negative entry";
    if (u_minus != u_plus + t + p - s - r) return "U- != U+ + T + P - S - R";
    if (v_minus != v_plus + s + p - t - r) return "V- != V+ + S + P - T - R";
    if (alpha() < 1 || beta() < 1 || gamma() < 1 || delta() < 1) return "a generator has degree 0";
    return {};
  }
  bool valid() const { return violation().empty(); }
  void require_valid() const {
    if (auto v = violation(); !v.empty()) throw Error(ErrorCode::InvalidProfile, v + " in " + str());
  }

  /// Generator shifts, syzygy shifts in matrix column order
  /// (gamma + T, gamma + S, delta + P, delta + R), and the top shift.
  ShiftTable shifts() const {
    const Integer a = alpha(), b = beta(), c = gamma(), d = delta();
    return ShiftTable{{std::vector<Integer>{a, b, c, d}, std::vector<Integer>{c + t, c + s, d + p, d + r},
                       std::vector<Integer>{c + s + t}}};
  }

  bool cohen_macaulay_degenerate() const { return p == 0 && r == 0 && s == 0 && t == 0; }

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;

  std::string str() const {
    return "(U+=" + u_plus.str() + ",U-=" + u_minus.str() + ",V+=" + v_plus.str() + ",V-=" + v_minus.str() +
           ",P=" + p.str() + ",R=" + r.str() + ",S=" + s.str() + ",T=" + t.str() + ")";
  }
};

}  // namespace latdeg
