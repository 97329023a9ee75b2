#pragma once

// Whole-lattice pipeline: scan the fibers, split every quadrangle, build and
// check its complex, assemble, and compare degrees and bounds.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "latdeg/bound.hpp"
#include "latdeg/fibers.hpp"
#include "latdeg/hilbert.hpp"
#include "latdeg/lattice.hpp"
#include "latdeg/quadrangle.hpp"

namespace latdeg {

struct QuadrangleAnalysis {
  QuadrangleFiber fiber;
  std::size_t corner = 0;  // vertex carrying alpha' beta'
  QuadrangleSplit split;
  ResolutionData resolution;
  ExactnessCheck exactness;
  DegreeProfile profile;
  BoundReport bound;  // for J = (alpha, beta, gamma, delta)
  bool generators_found = false;  // alpha..delta all among the scanned generators
};

struct LatticeAnalysis {
  HypothesisCertificate certificate;
  SyzygyScan scan;
  std::vector<QuadrangleAnalysis> quadrangles;
  std::optional<AssembledResolution> assembled;
  /// Deduplicated assembly reproduces the scanned Betti table degree by degree.
  bool betti_agree = false;
  std::string betti_detail;
  /// One quadrangle whose four generators are all the generators of I_L.
  bool single_quadrangle_ideal = false;
  std::vector<std::string> warnings;
};

namespace detail {

/// Edge binomial between two fiber monomials with the common factor removed,
/// plus term at `from`.
inline Binomial edge_generator(const ExponentVector& from, const ExponentVector& to) {
  const ExponentVector g = monomial_gcd(from, to);
  return Binomial(from - g, to - g);
}

inline std::vector<Integer> scanned_shifts(const SyzygyScan& scan, std::size_t step) {
  std::vector<Integer> out;
  for (const auto& r : scan.betti)
    if (step < r.betti.size())
      for (std::size_t k = 0; k < r.betti[step]; ++k) out.emplace_back(r.degree);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string join(const std::vector<Integer>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "}";
}

}  // namespace detail

/// Splits a quadrangle fiber: for each corner i, alpha and beta are the edges
/// to the two neighbours with the shared factor removed, so that the corner
/// monomial is alpha' beta'. The first corner (and edge order) that splits
/// cleanly wins.
inline std::pair<std::size_t, QuadrangleSplit> split_fiber(const QuadrangleFiber& q) {
  std::string last;
  for (std::size_t i = 0; i < 4; ++i) {
    const ExponentVector& m = q.monomials[i];
    const ExponentVector& next = q.monomials[(i + 1) % 4];
    const ExponentVector& prev = q.monomials[(i + 3) % 4];
    for (int order = 0; order < 2; ++order) {
      const Binomial a = detail::edge_generator(m, order == 0 ? next : prev);
      const Binomial b = detail::edge_generator(m, order == 0 ? prev : next);
      try {
        QuadrangleSplit s = split_quadrangle(a, b);
        if (s.alpha.plus() + s.beta.plus() != m) {
          last = "corner monomial is not alpha' beta'";
          continue;
        }
        return {i, std::move(s)};
      } catch (const Error& e) {
        last = e.what();
      }
    }
  }
  throw Error(ErrorCode::SplitFailure, "no corner of quadrangle " + q.multidegree.str() + " splits: " + last);
}

inline LatticeAnalysis analyze_lattice(const LatticeBasis& basis, Exponent max_degree) {
  LatticeAnalysis out;
  out.certificate = check_hypotheses(basis);
  const LatticeBasis& lat = out.certificate.certified;
  const ExponentVector& w = lat.weights();
  out.scan = enumerate_syzygy_fibers(lat, max_degree);

  std::set<Binomial> gens;
  std::set<ExponentVector> gen_degrees;
  for (const auto& g : out.scan.generators) {
    gens.insert(g.binomial);
    gen_degrees.insert(g.multidegree);
  }

  for (const auto& fiber : out.scan.quadrangles) {
    QuadrangleAnalysis qa;
    qa.fiber = fiber;
    std::tie(qa.corner, qa.split) = split_fiber(fiber);
    for (const Binomial* b : {&qa.split.alpha, &qa.split.beta, &qa.split.gamma, &qa.split.delta})
      if (!is_member(b->exponent_difference(), lat))
        throw Error(ErrorCode::SplitFailure, b->str() + " is not a lattice binomial");
    qa.resolution = build_resolution(qa.split, w);
    qa.exactness = verify_exactness_products(qa.resolution);
    qa.profile = qa.split.profile(w);
    qa.bound = bound_report(qa.profile);
    qa.generators_found = gens.count(qa.split.alpha) && gens.count(qa.split.beta) && gens.count(qa.split.gamma) &&
                          gens.count(qa.split.delta);
    if (!qa.generators_found)
      out.warnings.push_back("quadrangle " + fiber.multidegree.str() + " uses a generator missing from the scan");
    if (!qa.exactness.ok)
      out.warnings.push_back("quadrangle " + fiber.multidegree.str() + ": " + qa.exactness.product + " entry (" +
                             std::to_string(qa.exactness.row) + "," + std::to_string(qa.exactness.col) +
                             ") = " + qa.exactness.entry);
    for (const auto& wmsg : qa.resolution.warnings)
      out.warnings.push_back("quadrangle " + fiber.multidegree.str() + ": " + wmsg);
    out.quadrangles.push_back(std::move(qa));
  }

  if (out.quadrangles.empty()) {
    out.betti_detail = "no quadrangles";
    return out;
  }
  std::vector<ResolutionData> parts;
  for (const auto& q : out.quadrangles) parts.push_back(q.resolution);
  out.assembled = assemble_resolution(parts, [&](const ExponentVector& m) { return canonical_representative(m, lat); });

  out.betti_agree = true;
  for (std::size_t step = 0; step < 3; ++step) {
    std::vector<Integer> mine = out.assembled->deduplicated.steps[step];
    std::sort(mine.begin(), mine.end());
    const auto scanned = detail::scanned_shifts(out.scan, step + 1);
    if (mine != scanned) {
      out.betti_agree = false;
      out.betti_detail += "step " + std::to_string(step + 1) + ": quadrangles " + detail::join(mine) +
                          ", fibers " + detail::join(scanned) + "; ";
    }
  }
  if (out.betti_agree) out.betti_detail = "deduplicated shifts match the fiber Betti numbers";

  if (out.quadrangles.size() == 1) {
    const auto& dm = out.assembled->deduplicated_multidegrees[0];
    std::set<ExponentVector> mine(dm.begin(), dm.end());
    out.single_quadrangle_ideal = mine == gen_degrees && out.scan.generators.size() == 4;
  }
  return out;
}

enum class DegreeMethod { Oracle, Resolution, Formula };

inline const char* to_string(DegreeMethod m) {
  switch (m) {
    case DegreeMethod::Oracle: return "oracle";
    case DegreeMethod::Resolution: return "resolution";
    case DegreeMethod::Formula: return "formula";
  }
  return "?";
}

struct DegreeResults {
  std::optional<Integer> oracle;      // finite differences of fiber counts
  std::optional<Integer> resolution;  // f''(1)/2 of the assembled shifts
  std::optional<Integer> formula;     // closed form, only when J = I_L
  Exponent oracle_range = 0;          // H(0..oracle_range) counted
  std::vector<Integer> hilbert;
  std::vector<std::string> notes;

  bool agree() const {
    std::optional<Integer> first;
    for (const auto* d : {&oracle, &resolution, &formula}) {
      if (!*d) continue;
      if (first && **d != *first) return false;
      first = **d;
    }
    return true;
  }
};

/// Degrees by the requested methods. Needs the standard grading.
inline DegreeResults compute_degrees(const LatticeAnalysis& a, const std::vector<DegreeMethod>& methods,
                                     OracleOptions opts = {}) {
  const LatticeBasis& lat = a.certificate.certified;
  if (!lat.standard_graded())
    throw Error(ErrorCode::StandardGradingRequired,
                "degrees are computed for the standard grading; weights are " + lat.weights().str());
  DegreeResults out;
  auto wanted = [&](DegreeMethod m) { return std::find(methods.begin(), methods.end(), m) != methods.end(); };

  if (wanted(DegreeMethod::Oracle)) {
    out.oracle_range = a.scan.max_degree;
    out.hilbert = hilbert_series_bruteforce(lat, out.oracle_range, opts);
    out.oracle = degree_by_differences(out.hilbert, lat.size() - 2);
  }
  if (wanted(DegreeMethod::Resolution)) {
    if (!a.assembled) throw Error(ErrorCode::EmptyDecomposition, "no quadrangles to assemble");
    if (!a.betti_agree) out.notes.push_back("resolution route uses shifts that differ from the fiber Betti numbers");
    out.resolution = degree_from_numerator(hilbert_numerator(a.assembled->deduplicated));
  }
  if (wanted(DegreeMethod::Formula)) {
    if (a.single_quadrangle_ideal)
      out.formula = degree_closed_form(a.quadrangles.front().profile);
    else
      out.notes.push_back("closed formula skipped: I_L is not the ideal of a single quadrangle");
  }
  return out;
}

struct ChainLink {
  ExponentVector multidegree;
  Integer degree_J;
  BoundReport bound_J;
  bool degree_below_J = false;     // deg I_L <= deg J
  bool J_bound = false;            // deg J <= M1(J) M2(J) / 2
  bool shifts_below_ideal = false;  // M1(J) <= M1, M2(J) <= M2
  bool holds() const { return degree_below_J && J_bound && shifts_below_ideal; }
};

struct FullBoundReport {
  BoundReport bound;  // for I_L
  std::vector<ChainLink> chain;
  bool chain_holds = true;
};

/// deg I_L <= M1 M2 / 2 with M1, M2 from the assembled resolution, and the
/// chain deg I_L <= deg J <= M1(J) M2(J)/2 <= M1 M2 / 2 for each quadrangle.
inline FullBoundReport full_ideal_bound(const LatticeAnalysis& a, const Integer& degree) {
  if (!a.assembled) throw Error(ErrorCode::EmptyDecomposition, "no syzygy quadrangles up to degree " +
                                                                   std::to_string(a.scan.max_degree));
  FullBoundReport out;
  const auto& t = a.assembled->deduplicated;
  out.bound = bound_from_values(t.max(0), t.max(1), t.min(0), t.min(1), degree);
  for (const auto& q : a.quadrangles) {
    ChainLink link;
    link.multidegree = q.fiber.multidegree;
    link.degree_J = q.bound.degree;
    link.bound_J = q.bound;
    link.degree_below_J = degree <= q.bound.degree;
    link.J_bound = q.bound.holds;
    link.shifts_below_ideal = q.bound.M1 <= out.bound.M1 && q.bound.M2 <= out.bound.M2;
    out.chain_holds = out.chain_holds && link.holds();
    out.chain.push_back(std::move(link));
  }
  return out;
}

}  // namespace latdeg
