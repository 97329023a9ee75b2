#pragma once

// Command-line front end: check, degree, bound, explore.
//
// Exit codes: 0 ok, 1 input error, 2 bound violated, 3 hypothesis failure,
// 4 method disagreement (or an internal consistency failure), 5 Hilbert
// function not stabilized, 6 no quadrangles.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latdeg/analysis.hpp"
#include "latdeg/bound.hpp"

namespace latdeg::cli {

using Json = nlohmann::ordered_json;

enum Exit : int {
  kOk = 0,
  kInput = 1,
  kViolated = 2,
  kHypothesis = 3,
  kDisagree = 4,
  kNotStabilized = 5,
  kEmpty = 6,
};

inline int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::RankDeficient:
    case ErrorCode::NoPositiveGrading:
    case ErrorCode::UnboundedFiber:
    case ErrorCode::StandardGradingRequired:
      return kHypothesis;
    case ErrorCode::NotStabilized:
      return kNotStabilized;
    case ErrorCode::EmptyDecomposition:
      return kEmpty;
    case ErrorCode::SplitFailure:
    case ErrorCode::CommonFactor:
    case ErrorCode::HomogeneityViolation:
    case ErrorCode::NotCodimTwo:
    case ErrorCode::CaseMismatch:
      return kDisagree;
    default:
      return kInput;
  }
}

inline constexpr const char* kMaxDegreeEnv = "LATDEG_MAX_DEGREE";

struct LatticeInput {
  std::size_t n = 0;
  LatticeBasis basis;
  std::optional<Exponent> max_degree;
};

namespace detail {

inline Error input_error(const std::string& msg) { return Error(ErrorCode::InvalidArgument, msg); }

inline ExponentVector read_vector(const Json& j, const std::string& field, std::size_t n) {
  if (!j.is_array()) throw input_error("field '" + field + "': expected an array of integers");
  if (j.size() != n)
    throw input_error("field '" + field + "': expected " + std::to_string(n) + " entries, got " +
                      std::to_string(j.size()));
  ExponentVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& e = j[i];
    if (!e.is_number_integer()) throw input_error("field '" + field + "[" + std::to_string(i) + "]': not an integer");
    if (e.is_number_unsigned() && e.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
      throw input_error("field '" + field + "[" + std::to_string(i) + "]': out of range");
    v[i] = e.get<std::int64_t>();
  }
  return v;
}

}  // namespace detail

/// Parses {"n": .., "basis": [[..], [..]], "weights": [..]?, "max_degree": ..?}.
inline LatticeInput parse_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw detail::input_error(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw detail::input_error("top level must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "n" && key != "basis" && key != "weights" && key != "max_degree")
      throw detail::input_error("unknown field '" + key + "'");
  if (!j.contains("n")) throw detail::input_error("missing field 'n'");
  if (!j.contains("basis")) throw detail::input_error("missing field 'basis'");
  if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 2 || j["n"].get<std::int64_t>() > 20)
    throw detail::input_error("field 'n': expected an integer in [2, 20]");
  LatticeInput in;
  in.n = static_cast<std::size_t>(j["n"].get<std::int64_t>());
  const Json& b = j["basis"];
  if (!b.is_array() || b.size() != 2) throw detail::input_error("field 'basis': expected two vectors");
  in.basis = LatticeBasis(detail::read_vector(b[0], "basis[0]", in.n), detail::read_vector(b[1], "basis[1]", in.n));
  if (j.contains("weights")) in.basis = in.basis.with_weights(detail::read_vector(j["weights"], "weights", in.n));
  if (j.contains("max_degree")) {
    if (!j["max_degree"].is_number_integer() || j["max_degree"].get<std::int64_t>() < 1)
      throw detail::input_error("field 'max_degree': expected a positive integer");
    in.max_degree = j["max_degree"].get<std::int64_t>();
  }
  return in;
}

inline LatticeInput load_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw detail::input_error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_input(ss.str());
}

/// Flag, then input file, then environment, then 4 * max|entry| * n.
inline Exponent resolve_max_degree(std::optional<Exponent> flag, const LatticeInput& in) {
  if (flag) {
    if (*flag < 1) throw detail::input_error("--max-degree must be positive");
    return *flag;
  }
  if (in.max_degree) return *in.max_degree;
  if (const char* env = std::getenv(kMaxDegreeEnv); env && *env) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (*end != '\0' || v < 1) throw detail::input_error(std::string(kMaxDegreeEnv) + " must be a positive integer");
    return v;
  }
  return default_max_degree(in.basis);
}

// Output helpers.

inline Json jint(const Integer& x) {
  if (x >= Integer(INT64_MIN) && x <= Integer(INT64_MAX)) return static_cast<std::int64_t>(x);
  return x.str();
}

inline Json jvec(const ExponentVector& v) {
  Json a = Json::array();
  for (Exponent e : v) a.push_back(e);
  return a;
}

inline Json jshifts(const ShiftTable& t) {
  Json a = Json::array();
  for (const auto& step : t.steps) {
    Json s = Json::array();
    for (const auto& d : step) s.push_back(jint(d));
    a.push_back(s);
  }
  return a;
}

inline Json jprofile(const DegreeProfile& d) {
  return Json{{"U+", jint(d.u_plus)}, {"U-", jint(d.u_minus)}, {"V+", jint(d.v_plus)}, {"V-", jint(d.v_minus)},
              {"P", jint(d.p)},       {"R", jint(d.r)},        {"S", jint(d.s)},       {"T", jint(d.t)}};
}

inline Json jbound(const BoundReport& b) {
  Json j{{"M1", jint(b.M1)}, {"M2", jint(b.M2)},     {"m1", jint(b.m1)},   {"m2", jint(b.m2)},
         {"degree", jint(b.degree)}, {"gap", jint(b.gap)}, {"holds", b.holds}};
  if (!b.m1_attained_by.empty()) j["M1_attained_by"] = b.m1_attained_by;
  if (!b.m2_attained_by.empty()) j["M2_attained_by"] = b.m2_attained_by;
  return j;
}

inline std::string show(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + show(j[i]);
    return s + ")";
  }
  return j.dump();
}

/// "key  value" lines with the values aligned. Nested objects are indented;
/// arrays of objects are numbered.
inline void print_text(const Json& j, std::ostream& out, const std::string& indent = "") {
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out << indent << k << "\n";
      print_text(v, out, indent + "  ");
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        out << indent << k << " " << i + 1 << "\n";
        print_text(v[i], out, indent + "  ");
      }
    } else if (v.is_array() && !v.empty() && v[0].is_string()) {
      out << indent << k << "\n";
      for (const auto& s : v) out << indent << "  " << s.get<std::string>() << "\n";
    } else {
      out << indent << k << std::string(width - k.size() + 2, ' ') << show(v) << "\n";
    }
  }
}

enum class Format { Text, Json, Csv };

inline void emit(const Json& j, Format f, std::ostream& out) {
  if (f == Format::Json)
    out << j.dump(2) << "\n";
  else
    print_text(j, out);
}

// Report pieces shared by degree and bound.

inline Json lattice_json(const LatticeAnalysis& a, Exponent max_degree) {
  const LatticeBasis& b = a.certificate.certified;
  Json j;
  j["n"] = b.size();
  j["basis"] = Json::array({jvec(b.b1()), jvec(b.b2())});
  j["weights"] = jvec(b.weights());
  j["max_degree"] = max_degree;
  Json gens = Json::array();
  for (const auto& g : a.scan.generators) gens.push_back(g.binomial.str());
  j["generators"] = gens;
  Json betti = Json::array();
  for (std::size_t x : a.scan.betti_totals()) betti.push_back(x);
  j["betti"] = betti;
  Json qs = Json::array();
  for (const auto& q : a.quadrangles) {
    Json e;
    e["multidegree"] = format_monomial(q.fiber.multidegree);
    e["degree"] = q.fiber.degree;
    e["alpha"] = q.split.alpha.str();
    e["beta"] = q.split.beta.str();
    e["gamma"] = q.split.gamma.str();
    e["delta"] = q.split.delta.str();
    e["profile"] = jprofile(q.profile);
    e["shifts"] = jshifts(q.resolution.shifts);
    e["exact"] = q.exactness.ok;
    e["bound_J"] = jbound(q.bound);
    qs.push_back(e);
  }
  j["quadrangles"] = qs;
  if (a.assembled) {
    j["shifts_raw"] = jshifts(a.assembled->raw);
    j["shifts"] = jshifts(a.assembled->deduplicated);
  }
  j["betti_agree"] = a.betti_agree;
  j["single_quadrangle_ideal"] = a.single_quadrangle_ideal;
  return j;
}

inline Json warnings_json(const LatticeAnalysis& a, const std::vector<std::string>& extra = {}) {
  Json w = Json::array();
  for (const auto& s : a.scan.warnings) w.push_back(s);
  for (const auto& s : a.warnings) w.push_back(s);
  for (const auto& s : extra) w.push_back(s);
  return w;
}

inline bool internally_consistent(const LatticeAnalysis& a) {
  if (a.assembled && !a.betti_agree) return false;
  for (const auto& q : a.quadrangles)
    if (!q.exactness.ok) return false;
  return true;
}

// Commands.

inline int cmd_check(const std::string& path, Format fmt, std::ostream& out) {
  const LatticeInput in = load_input(path);
  Json j;
  j["command"] = "check";
  j["n"] = in.n;
  j["basis"] = Json::array({jvec(in.basis.b1()), jvec(in.basis.b2())});
  try {
    const HypothesisCertificate c = check_hypotheses(in.basis);
    j["rank"] = c.rank;
    j["weights"] = jvec(c.weights);
    j["weights_source"] = c.weights_supplied ? "supplied" : "found";
    j["standard_graded"] = c.standard_graded;
    j["nonnegative_vectors"] = c.nonnegative_vectors;
    j["verdict"] = "pass";
    emit(j, fmt, out);
    return kOk;
  } catch (const Error& e) {
    if (exit_code(e.code()) != kHypothesis) throw;
    j["rank"] = in.basis.rank();
    j["verdict"] = "fail";
    j["reason"] = e.what();
    emit(j, fmt, out);
    return kHypothesis;
  }
}

inline int cmd_degree(const std::string& path, std::optional<Exponent> flag_t, const std::string& method, Format fmt,
                      std::ostream& out) {
  const LatticeInput in = load_input(path);
  const Exponent T = resolve_max_degree(flag_t, in);
  const LatticeAnalysis a = analyze_lattice(in.basis, T);

  std::vector<DegreeMethod> methods;
  std::vector<std::string> notes;
  if (method == "oracle") methods = {DegreeMethod::Oracle};
  if (method == "resolution") methods = {DegreeMethod::Resolution};
  if (method == "formula") methods = {DegreeMethod::Formula};
  if (method == "all") {
    methods = {DegreeMethod::Oracle, DegreeMethod::Formula};
    if (a.assembled)
      methods.insert(methods.begin() + 1, DegreeMethod::Resolution);
    else
      notes.push_back("resolution route skipped: no quadrangles up to degree " + std::to_string(T));
  }
  const DegreeResults d = compute_degrees(a, methods);
  notes.insert(notes.end(), d.notes.begin(), d.notes.end());

  Json j;
  j["command"] = "degree";
  j.update(lattice_json(a, T));
  Json degs;
  if (d.oracle) {
    Json h = Json::array();
    for (const auto& x : d.hilbert) h.push_back(jint(x));
    degs["oracle"] = Json{{"value", jint(*d.oracle)}, {"range", Json::array({0, d.oracle_range})}, {"hilbert", h}};
  }
  if (d.resolution) degs["resolution"] = Json{{"value", jint(*d.resolution)}};
  if (d.formula) degs["formula"] = Json{{"value", jint(*d.formula)}};
  j["degrees"] = degs;
  const bool consistent = internally_consistent(a);
  j["agree"] = d.agree() && consistent;
  j["warnings"] = warnings_json(a, notes);
  emit(j, fmt, out);
  return d.agree() && consistent ? kOk : kDisagree;
}

inline int cmd_bound(const std::string& path, std::optional<Exponent> flag_t, bool negative_control, Format fmt,
                     std::ostream& out) {
  const LatticeInput in = load_input(path);
  const Exponent T = resolve_max_degree(flag_t, in);
  const LatticeAnalysis a = analyze_lattice(in.basis, T);
  if (!a.assembled)
    throw Error(ErrorCode::EmptyDecomposition,
                "no syzygy quadrangles up to degree " + std::to_string(T) +
                    ": R/I_L is Cohen-Macaulay (bound known) or --max-degree is too small; raise it to rule out the latter");
  const DegreeResults d = compute_degrees(a, {DegreeMethod::Oracle});
  Integer degree = *d.oracle;
  std::vector<std::string> notes;
  if (negative_control) {
    const auto& t = a.assembled->deduplicated;
    degree = t.max(0) * t.max(1) / 2 + 1;
    notes.push_back("negative control: degree replaced by M1 M2 / 2 + 1");
  }
  const FullBoundReport r = full_ideal_bound(a, degree);

  Json j;
  j["command"] = "bound";
  j.update(lattice_json(a, T));
  j["degree_method"] = negative_control ? "negative-control" : "oracle";
  j["oracle_range"] = Json::array({0, d.oracle_range});
  j["bound"] = jbound(r.bound);
  Json chain = Json::array();
  for (const auto& l : r.chain)
    chain.push_back(Json{{"multidegree", format_monomial(l.multidegree)},
                         {"deg_I", jint(degree)},
                         {"deg_J", jint(l.degree_J)},
                         {"M1_J", jint(l.bound_J.M1)},
                         {"M2_J", jint(l.bound_J.M2)},
                         {"deg_I<=deg_J", l.degree_below_J},
                         {"deg_J<=M1(J)M2(J)/2", l.J_bound},
                         {"M(J)<=M(I)", l.shifts_below_ideal}});
  j["chain"] = chain;
  j["chain_holds"] = r.chain_holds;
  j["verdict"] = r.bound.holds && r.chain_holds ? "holds" : "violated";
  j["warnings"] = warnings_json(a, notes);
  emit(j, fmt, out);
  if (!r.bound.holds || !r.chain_holds) return kViolated;
  return internally_consistent(a) ? kOk : kDisagree;
}

inline std::vector<std::string> profile_row(const DegreeProfile& p, const BoundReport& b) {
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "|" : "") + v[i];
    return s;
  };
  return {p.u_plus.str(), p.u_minus.str(), p.v_plus.str(), p.v_minus.str(), p.p.str(),  p.r.str(),
          p.s.str(),      p.t.str(),       b.degree.str(),  b.M1.str(),      b.M2.str(), b.gap.str(),
          join(b.m1_attained_by), join(b.m2_attained_by)};
}

inline const std::vector<std::string>& profile_header() {
  static const std::vector<std::string> h = {"U+", "U-", "V+", "V-", "P",   "R",     "S",
                                             "T",  "deg", "M1", "M2", "gap", "M1_by", "M2_by"};
  return h;
}

inline void print_rows(const std::vector<std::vector<std::string>>& rows, Format fmt, std::ostream& out) {
  if (fmt == Format::Csv) {
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
      out << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) line += "  ";
      line += std::string(width[i] - r[i].size(), ' ') + r[i];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
}

inline Json exploration_summary(const ExplorationReport& rep) {
  auto list = [](const std::vector<DegreeProfile>& v) {
    Json a = Json::array();
    for (const auto& p : v) a.push_back(p.str());
    return a;
  };
  Json s;
  s["profiles"] = rep.profiles;
  s["min_gap"] = rep.min_gap ? jint(*rep.min_gap) : Json(nullptr);
  s["min_gap_profiles"] = rep.min_gap_profiles.size();
  s["min_quadrangle_gap"] = rep.min_quadrangle_gap ? jint(*rep.min_quadrangle_gap) : Json(nullptr);
  s["min_quadrangle_gap_at"] = list(rep.min_quadrangle_gap_profiles);
  s["violations"] = rep.violations.size();
  s["zero_gap_profiles"] = rep.zero_gap_profiles;
  s["zero_gap_all_PRST_zero"] = rep.rigidity_failures.empty();
  s["degree_mismatches"] = rep.degree_mismatches.size();
  s["case_expression_mismatches"] = rep.case_mismatches.size();
  s["relabeled_cases_attained"] = rep.attained_relabeled_cases;
  s["case_inequality_failures"] = rep.implication_failures.size();
  s["explicit_expression_off_case"] = rep.explicit_expression_off_case;
  return s;
}

inline int exploration_exit(const ExplorationReport& rep) {
  if (!rep.violations.empty()) return kViolated;
  return rep.clean() ? kOk : kDisagree;
}

inline int cmd_explore(std::optional<int> grid, const std::vector<int>& family, const std::vector<std::uint64_t>& random,
                       int max_entry, Format fmt, std::ostream& out) {
  const int modes = (grid ? 1 : 0) + (family.empty() ? 0 : 1) + (random.empty() ? 0 : 1);
  if (modes != 1) throw detail::input_error("explore needs exactly one of --grid, --family, --random");

  if (!family.empty()) {
    const FamilyReport f = tight_family(family[0], family[1]);
    Json j;
    j["command"] = "explore";
    j["mode"] = "family";
    j["u"] = family[0];
    j["p"] = family[1];
    j["profile"] = jprofile(f.profile);
    j["bound"] = jbound(f.bound);
    j["expected_gap"] = jint(f.expected_gap);
    j["matches"] = f.matches;
    if (fmt == Format::Csv) {
      print_rows({profile_header(), profile_row(f.profile, f.bound)}, fmt, out);
      out << "# expected_gap=" << f.expected_gap << " matches=" << (f.matches ? "true" : "false") << "\n";
    } else {
      emit(j, fmt, out);
    }
    return f.matches ? kOk : kDisagree;
  }

  std::vector<std::vector<std::string>> rows{profile_header()};
  Json records = Json::array();
  const ProfileVisitor visit = [&](const DegreeProfile& p, const BoundReport& b) {
    if (fmt == Format::Json)
      records.push_back(Json{{"profile", jprofile(p)}, {"bound", jbound(b)}});
    else
      rows.push_back(profile_row(p, b));
  };
  ExplorationReport rep;
  Json j;
  j["command"] = "explore";
  if (grid) {
    rep = explore_grid(*grid, visit);
    j["mode"] = "grid";
    j["max_entry"] = *grid;
  } else {
    rep = explore_random(random[0], random[1], max_entry, visit);
    j["mode"] = "random";
    j["count"] = random[0];
    j["seed"] = random[1];
    j["max_entry"] = max_entry;
  }
  const Json summary = exploration_summary(rep);
  if (fmt == Format::Json) {
    j["records"] = records;
    j["summary"] = summary;
    out << j.dump(2) << "\n";
  } else {
    print_rows(rows, fmt, out);
    for (const auto& [k, v] : summary.items()) out << "# " << k << "=" << show(v) << "\n";
  }
  return exploration_exit(rep);
}

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Text;
}

/// Runs one command; args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree and syzygy quadrangles of codimension-2 lattice ideals", "latdeg"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  std::string path;
  std::optional<Exponent> max_degree;
  std::string method = "all";
  bool negative_control = false;
  std::optional<int> grid;
  std::vector<int> family;
  std::vector<std::uint64_t> random;
  int max_entry = 50;

  auto* check = app.add_subcommand("check", "Certify rank 2 and a positive grading");
  check->add_option("file", path, "Lattice input (JSON)")->required();

  auto* degree = app.add_subcommand("degree", "Degree of R/I_L by fiber counting, resolution and closed formula");
  degree->add_option("file", path, "Lattice input (JSON)")->required();
  degree->add_option("--max-degree", max_degree, "Enumeration bound T (overrides the file and " +
                                                     std::string(kMaxDegreeEnv) + ")");
  degree->add_option("--method", method)->check(CLI::IsMember({"oracle", "resolution", "formula", "all"}))
      ->capture_default_str();

  auto* bound = app.add_subcommand("bound", "Check deg(I_L) <= M1 M2 / 2");
  bound->add_option("file", path, "Lattice input (JSON)")->required();
  bound->add_option("--max-degree", max_degree, "Enumeration bound T");
  bound->add_flag("--negative-control", negative_control, "Replace the degree by M1 M2/2 + 1 (must exit 2)");

  auto* explore = app.add_subcommand("explore", "Gap M1 M2 - 2 deg over degree profiles");
  auto* g = explore->add_option("--grid", grid, "All profiles with free entries <= N")->check(CLI::PositiveNumber);
  auto* f = explore->add_option("--family", family, "u p: U+=U-=V+=V-=u, P=R=S=T=p")->expected(2);
  auto* r = explore->add_option("--random", random, "COUNT SEED")->expected(2);
  g->excludes(f)->excludes(r);
  f->excludes(r);
  explore->add_option("--max-entry", max_entry, "Entry bound for --random")->check(CLI::PositiveNumber)
      ->capture_default_str();

  for (auto* sub : {check, degree, bound, explore})
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  std::vector<const char*> argv{"latdeg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInput;
  }

  const Format fmt = parse_format(format);
  try {
    if (fmt == Format::Csv && !explore->parsed())
      throw detail::input_error("--format csv is only available for explore");
    if (check->parsed()) return cmd_check(path, fmt, out);
    if (degree->parsed()) return cmd_degree(path, max_degree, method, fmt, out);
    if (bound->parsed()) return cmd_bound(path, max_degree, negative_control, fmt, out);
    if (!family.empty() && (family[0] < 0 || family[1] < 0 || family[0] + family[1] == 0))
      throw detail::input_error("--family needs u, p >= 0, not both zero");
    return cmd_explore(grid, family, random, max_entry, fmt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const int code = exit_code(e.code());
    if (code == kNotStabilized) err << "hint: raise --max-degree\n";
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
}

}  // namespace latdeg::cli
