#include "polyinv/session.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

#include "polyinv/affine.hpp"
#include "polyinv/errors.hpp"
#include "polyinv/groebner.hpp"
#include "polyinv/inverse.hpp"
#include "polyinv/preimage.hpp"
#include "polyinv/tame.hpp"
#include "polyinv/text.hpp"

namespace polyinv {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fixed_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << ms << " ms";
  return os.str();
}

const char* command_name(Command::Kind kind) {
  switch (kind) {
    case Command::Kind::Invert:
      return "invert";
    case Command::Kind::GbInvert:
      return "gb-invert";
    case Command::Kind::Preimage:
      return "preimage";
    case Command::Kind::GbPreimage:
      return "gb-preimage";
    case Command::Kind::Verify:
      return "verify";
    case Command::Kind::Bench:
      return "bench";
  }
  return "?";
}

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::Iterative:
      return "iterative";
    case Engine::Groebner:
      return "groebner";
    case Engine::Both:
      return "both";
  }
  return "?";
}

bool centered_with_identity_linear_part(const PolyMap& f) {
  for (const auto& c : f.components()) {
    if (!c.constant_term().is_zero()) return false;
  }
  const auto lin = linear_matrix(f);
  for (std::size_t i = 0; i < f.dim(); ++i) {
    for (std::size_t j = 0; j < f.dim(); ++j) {
      if (!(lin[i][j] == Coefficient(i == j ? 1 : 0))) return false;
    }
  }
  return true;
}

bool has_constant_term(const PolyMap& f) {
  for (const auto& c : f.components()) {
    if (!c.constant_term().is_zero()) return true;
  }
  return false;
}

bool integral(const Polynomial& p) {
  for (const auto& t : p.terms()) {
    if (!t.coeff.is_integer()) return false;
  }
  return true;
}

bool integral(std::span<const Polynomial> ps) {
  for (const auto& p : ps) {
    if (!integral(p)) return false;
  }
  return true;
}

bool integral(std::span<const Coefficient> point) {
  for (const auto& c : point) {
    if (!c.is_integer()) return false;
  }
  return true;
}

PolyMap with_domain(const PolyMap& f, const Domain& d) {
  std::vector<Polynomial> comps;
  for (const auto& c : f.components()) comps.push_back(change_domain(c, d));
  return PolyMap(std::move(comps), f.names());
}

Curve with_domain(const Curve& g, const Domain& d) {
  std::vector<Polynomial> comps;
  for (const auto& c : g.components()) comps.push_back(change_domain(c, d));
  return Curve(std::move(comps), g.param());
}

std::vector<Coefficient> with_domain(std::span<const Coefficient> point, const Domain& d) {
  std::vector<Coefficient> out;
  for (const auto& c : point) out.push_back(d.make(c.value()));
  return out;
}

std::vector<std::string> formatted_basis(const GroebnerResult& gb,
                                         std::span<const std::string> names) {
  std::vector<std::string> out;
  for (const auto& b : gb.basis) out.push_back(format(b, names));
  return out;
}

// Names for the 2n variables X, Y of the inverse ideal: Y_i is X_i primed.
std::vector<std::string> doubled_names(const PolyMap& f) {
  std::vector<std::string> names = f.names();
  for (const auto& n : f.names()) names.push_back(n + "'");
  return names;
}

/// One engine's answer, shared by every command.
struct EngineAnswer {
  std::string engine;
  std::string status;
  bool definitive = false;
  bool inapplicable = false;
  std::string note;
  double ms = 0;
  json details = json::object();
  std::vector<std::string> trace;

  std::optional<PolyMap> inverse;
  std::optional<std::vector<Coefficient>> point;
  std::optional<Curve> curve;
  /// Largest preimage t-degree the iterative engine certified.
  unsigned max_deg = 0;
};

unsigned budget_or(const SessionConfig& cfg, std::optional<unsigned> flag, unsigned fallback) {
  if (flag) return *flag;
  if (cfg.default_budget_override) return *cfg.default_budget_override;
  return fallback;
}

// ---------------------------------------------------------------- invert

EngineAnswer iterative_invert(const PolyMap& f, const SessionConfig& cfg) {
  EngineAnswer a;
  a.engine = "iterative";
  const auto start = Clock::now();
  InverseOptions opts;
  opts.keep_trace = cfg.verbose;
  std::optional<AffineSplit> split;
  PolyMap work = f;
  const bool degree_kind = cfg.filtration.kind() == FiltrationSpec::Kind::Degree;
  if (degree_kind && !centered_with_identity_linear_part(f)) {
    try {
      split = affine_normalize(f);
    } catch (const LinearPartSingular& e) {
      a.status = "inapplicable";
      a.inapplicable = true;
      a.note = std::string(e.what()) + "; the groebner engine still applies";
      a.ms = ms_since(start);
      return a;
    }
    work = split->normalized;
  }
  const unsigned fallback = degree_kind ? degree_bound(work) + 1 : 64;
  opts.budget = budget_or(cfg, cfg.budget, fallback);

  InverseOutcome out = iterative_inverse(work, cfg.filtration, opts);
  a.status = to_string(out.status);
  a.definitive = out.status != InverseStatus::BudgetExhausted;
  if (out.status == InverseStatus::Inverted) {
    PolyMap g = split ? compose_maps(*out.inverse, split->outer_inverse) : *out.inverse;
    if (split &&
        !(compose_maps(f, g).is_identity() && compose_maps(g, f).is_identity())) {
      throw InvariantViolation("conjugated inverse fails verification");
    }
    a.inverse = g.with_names(f.names());
  }
  a.details["filtration"] = cfg.filtration.name();
  a.details["affine_normalized"] = split.has_value();
  a.details["iterations"] = out.iterations;
  a.details["level"] = out.level;
  a.details["fixed_point_checks"] = out.checks;
  a.details["budget"] = *opts.budget;
  if (degree_kind) a.details["degree_bound"] = degree_bound(work);
  if (out.status == InverseStatus::BudgetExhausted) {
    a.note = "no stopping bound for this filtration; the answer is unknown";
    a.details["last_k"] = format_map(out.last_k);
  }
  for (std::size_t d = 0; d < out.trace.size(); ++d) {
    a.trace.push_back("K_" + std::to_string(d) + " = " + format_map(out.trace[d]));
  }
  a.ms = ms_since(start);
  return a;
}

EngineAnswer groebner_invert(const PolyMap& f, const SessionConfig& cfg) {
  EngineAnswer a;
  a.engine = "groebner";
  const auto start = Clock::now();
  const bool over_z = f.domain().kind() == DomainKind::Integers;
  const PolyMap fq = over_z ? with_domain(f, Domain::rationals()) : f;
  GbInverseOutcome out = gb_inverse(fq, cfg.order);
  a.definitive = true;
  if (out.invertible) {
    if (over_z && !integral(out.inverse->components())) {
      a.status = "not-invertible";
      a.note = "the inverse over QQ has non-integer coefficients";
      a.details["inverse_over_QQ"] = format_map(*out.inverse);
    } else {
      a.status = "inverted";
      a.inverse = (over_z ? with_domain(*out.inverse, f.domain()) : *out.inverse).with_names(f.names());
    }
  } else {
    a.status = "not-invertible";
    a.note = "reduced basis is not of the form X - G(Y)";
  }
  a.details["order"] = cfg.order == MonomialOrder::Kind::Lex ? "lex" : "grevlex";
  a.details["basis_size"] = out.basis.basis.size();
  if (cfg.verbose) a.trace = formatted_basis(out.basis, doubled_names(f));
  a.ms = ms_since(start);
  return a;
}

// -------------------------------------------------------------- preimage

EngineAnswer iterative_point(const PolyMap& f, std::span<const Coefficient> c,
                             const SessionConfig& cfg) {
  EngineAnswer a;
  a.engine = "iterative";
  const auto start = Clock::now();
  std::optional<AffineSplit> split;
  PolyMap work = f;
  std::vector<Coefficient> target(c.begin(), c.end());
  if (!centered_with_identity_linear_part(f)) {
    try {
      split = affine_normalize(f);
    } catch (const LinearPartSingular& e) {
      a.status = "inapplicable";
      a.inapplicable = true;
      a.note = std::string(e.what()) + "; the groebner engine still applies";
      a.ms = ms_since(start);
      return a;
    }
    work = split->normalized;
    target = evaluate(split->outer_inverse, c);
  }
  PreimageOptions opts;
  opts.keep_trace = cfg.verbose;
  opts.max_deg = budget_or(cfg, cfg.max_deg, std::max(32u, degree_bound(work)));
  PointPreimageOutcome out = point_preimage(work, target, opts);
  a.max_deg = opts.max_deg;
  if (out.found) {
    if (evaluate(f, *out.point) != std::vector<Coefficient>(c.begin(), c.end())) {
      throw InvariantViolation("point preimage fails F(p) = c");
    }
    a.status = "found";
    a.definitive = true;
    a.point = out.point;
  } else {
    a.status = "not-found-within-degree";
    a.note = "no centered polynomial preimage curve of c*t up to the degree budget";
  }
  a.details["affine_normalized"] = split.has_value();
  a.details["iterations"] = out.curve.iterations;
  a.details["max_deg"] = opts.max_deg;
  if (out.curve.g) a.details["curve"] = format_curve(*out.curve.g);
  for (std::size_t d = 0; d < out.curve.trace.size(); ++d) {
    a.trace.push_back("K_" + std::to_string(d + 1) + " = " + format_curve(out.curve.trace[d]));
  }
  a.ms = ms_since(start);
  return a;
}

EngineAnswer groebner_point(const PolyMap& f, std::span<const Coefficient> c,
                            const SessionConfig& cfg) {
  EngineAnswer a;
  a.engine = "groebner";
  const auto start = Clock::now();
  const bool over_z = f.domain().kind() == DomainKind::Integers;
  const Domain qq = Domain::rationals();
  const PolyMap fq = over_z ? with_domain(f, qq) : f;
  GbPointOutcome out = gb_point_preimage(fq, over_z ? with_domain(c, qq) : std::vector<Coefficient>(c.begin(), c.end()), cfg.order);
  switch (out.shape) {
    case PointPreimageShape::Unique:
      a.definitive = true;
      if (over_z && !integral(*out.point)) {
        a.status = "no-preimage";
        a.note = "the only solution " + format_point(*out.point) + " is not integral";
      } else {
        a.status = "found";
        a.point = over_z ? with_domain(*out.point, f.domain()) : *out.point;
      }
      break;
    case PointPreimageShape::Empty:
      a.definitive = true;
      a.status = "no-preimage";
      a.note = "the ideal (c - F) is the unit ideal";
      break;
    case PointPreimageShape::NotUnique:
      a.status = "not-unique";
      a.note = "reduced basis is not of the form X - b; the solution is not a single rational point";
      break;
  }
  a.details["shape"] = to_string(out.shape);
  a.details["basis"] = formatted_basis(out.basis, f.names());
  a.ms = ms_since(start);
  return a;
}

EngineAnswer iterative_curve(const PolyMap& f, const Curve& target, const SessionConfig& cfg) {
  EngineAnswer a;
  a.engine = "iterative";
  const auto start = Clock::now();
  if (has_constant_term(f)) {
    // g(0) = 0 forces F(g)(0) = F(0) != 0 = f(0).
    a.status = "no-centered-preimage";
    a.definitive = true;
    a.note = "F(0) != 0, so no curve with g(0) = 0 maps onto a centered f";
    a.ms = ms_since(start);
    return a;
  }
  std::optional<AffineSplit> split;
  PolyMap work = f;
  Curve goal = target;
  if (!centered_with_identity_linear_part(f)) {
    try {
      split = affine_normalize(f);
    } catch (const LinearPartSingular& e) {
      a.status = "inapplicable";
      a.inapplicable = true;
      a.note = std::string(e.what()) + "; the groebner engine still applies";
      a.ms = ms_since(start);
      return a;
    }
    work = split->normalized;
    goal = apply_to_curve(split->outer_inverse, target);
  }
  PreimageOptions opts;
  opts.keep_trace = cfg.verbose;
  const unsigned natural = degree_bound(work) * static_cast<unsigned>(std::max(1, target.degree()));
  opts.max_deg = budget_or(cfg, cfg.max_deg, std::max(32u, natural));
  PreimageOutcome out = curve_preimage(work, goal, opts);
  a.max_deg = opts.max_deg;
  if (out.status == PreimageStatus::Found) {
    if (!(apply_to_curve(f, *out.g) == target)) {
      throw InvariantViolation("curve preimage fails F(g) = f");
    }
    a.status = "found";
    a.definitive = true;
    a.curve = out.g;
  } else {
    a.status = to_string(out.status);
    a.note = "either no polynomial preimage exists or its degree exceeds the budget";
    a.details["last_k"] = format_curve(out.last_k);
  }
  a.details["affine_normalized"] = split.has_value();
  a.details["iterations"] = out.iterations;
  a.details["max_deg"] = opts.max_deg;
  for (std::size_t d = 0; d < out.trace.size(); ++d) {
    a.trace.push_back("K_" + std::to_string(d + 1) + " = " + format_curve(out.trace[d]));
  }
  a.ms = ms_since(start);
  return a;
}

EngineAnswer groebner_curve(const PolyMap& f, const Curve& target, const SessionConfig& cfg) {
  EngineAnswer a;
  a.engine = "groebner";
  const auto start = Clock::now();
  const bool over_z = f.domain().kind() == DomainKind::Integers;
  const Domain qq = Domain::rationals();
  const PolyMap fq = over_z ? with_domain(f, qq) : f;
  GbCurveOutcome out = gb_curve_preimage(fq, over_z ? with_domain(target, qq) : target, cfg.order);
  std::vector<std::size_t> xs(f.dim());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = i;
  const bool unique = linear_shape(out.basis, xs).has_value();
  switch (out.shape) {
    case CurvePreimageShape::Found:
      if (over_z && !integral(out.g->components())) {
        a.status = unique ? "no-preimage" : "found-over-QQ";
        a.definitive = unique;
        a.note = "the preimage " + format_curve(*out.g) + " is not integral";
      } else {
        a.status = "found";
        a.definitive = true;
        a.curve = over_z ? with_domain(*out.g, f.domain()) : *out.g;
      }
      break;
    case CurvePreimageShape::ShapeBasis: {
      a.status = "no-centered-preimage";
      a.definitive = true;
      std::vector<std::string> parts;
      for (const auto& s : out.solution) parts.push_back(format(s, std::vector<std::string>{target.param()}));
      std::string sol;
      for (const auto& p : parts) sol += (sol.empty() ? "" : ", ") + p;
      a.note = "the only preimage (" + sol + ") is not centered";
      break;
    }
    case CurvePreimageShape::Evidence:
      a.status = "evidence";
      a.note = "no solved form; this proves nonexistence only when F is an automorphism";
      break;
  }
  std::vector<std::string> names = f.names();
  names.push_back(target.param());
  a.details["shape"] = to_string(out.shape);
  a.details["basis"] = formatted_basis(out.basis, names);
  a.ms = ms_since(start);
  return a;
}

// ------------------------------------------------------------ rendering

json answer_json(const EngineAnswer& a) {
  json j;
  j["engine"] = a.engine;
  j["status"] = a.status;
  j["definitive"] = a.definitive;
  if (a.inverse) j["inverse"] = format_map(*a.inverse);
  if (a.point) j["point"] = format_point(*a.point);
  if (a.curve) j["curve"] = format_curve(*a.curve);
  if (!a.note.empty()) j["note"] = a.note;
  for (const auto& [k, v] : a.details.items()) j[k] = v;
  if (!a.trace.empty()) j["trace"] = a.trace;
  j["timing_ms"] = a.ms;
  return j;
}

struct Rendered {
  json doc;
  std::vector<std::pair<std::string, std::string>> rows;
  std::vector<std::string> extra;
  int exit_code = kExitDefinitive;
};

std::string render(const SessionConfig& cfg, const Rendered& r) {
  if (cfg.format == OutputFormat::Machine) return r.doc.dump(2) + "\n";
  std::size_t width = 0;
  for (const auto& [k, v] : r.rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : r.rows) {
    os << k << ":" << std::string(width + 2 - k.size(), ' ') << v << "\n";
  }
  for (const auto& line : r.extra) os << line << "\n";
  return os.str();
}

void add_engine_rows(Rendered& r, const EngineAnswer& a, bool verbose, bool label) {
  const std::string p = label ? a.engine + " " : "";
  r.rows.emplace_back(p + "status", a.status);
  if (!a.note.empty()) r.rows.emplace_back(p + "note", a.note);
  for (const char* key : {"iterations", "fixed_point_checks", "max_deg", "basis_size"}) {
    if (a.details.contains(key)) r.rows.emplace_back(p + key, a.details[key].dump());
  }
  if (a.details.contains("last_k")) {
    r.rows.emplace_back(p + "last iterate", a.details["last_k"].get<std::string>());
  }
  r.rows.emplace_back(p + "time", fixed_ms(a.ms));
  if (verbose) {
    if (a.details.contains("basis")) {
      for (const auto& b : a.details["basis"]) r.extra.push_back("  " + b.get<std::string>());
    }
    for (const auto& t : a.trace) r.extra.push_back("  " + t);
  } else if (a.details.contains("basis") && !a.definitive) {
    r.extra.push_back(a.engine + " basis:");
    for (const auto& b : a.details["basis"]) r.extra.push_back("  " + b.get<std::string>());
  }
}

int exit_for(const EngineAnswer& a) {
  if (a.inapplicable) return kExitUsage;
  return a.definitive ? kExitDefinitive : kExitUnknown;
}

/// Merges two engine answers; returns a discrepancy message when they
/// contradict each other.
std::optional<std::string> disagreement(const EngineAnswer& it, const EngineAnswer& gb) {
  if (!it.definitive || !gb.definitive) return std::nullopt;
  if (it.status != gb.status) {
    return "iterative says " + it.status + ", groebner says " + gb.status;
  }
  if (it.inverse && gb.inverse && !(*it.inverse == *gb.inverse)) return "the inverses differ";
  if (it.point && gb.point && *it.point != *gb.point) return "the points differ";
  if (it.curve && gb.curve && !(*it.curve == *gb.curve)) return "the curves differ";
  return std::nullopt;
}

Rendered combine(const std::string& command, json input, const std::vector<EngineAnswer>& answers,
                 const SessionConfig& cfg,
                 const std::function<std::optional<std::string>(const EngineAnswer&,
                                                                const EngineAnswer&)>& check) {
  Rendered r;
  r.doc["command"] = command;
  r.doc["input"] = std::move(input);
  for (const auto& [k, v] : r.doc["input"].items()) {
    if (v.is_string()) r.rows.emplace_back(k, v.get<std::string>());
  }

  // Pick the answer to headline: the first definitive one, else the first.
  const EngineAnswer* primary = &answers.front();
  for (const auto& a : answers) {
    if (a.definitive) {
      primary = &a;
      break;
    }
  }
  std::optional<std::string> conflict;
  if (answers.size() == 2) conflict = check(answers[0], answers[1]);

  if (conflict) {
    r.doc["status"] = "discrepancy";
    r.rows.emplace_back("status", "discrepancy");
    r.rows.emplace_back("discrepancy", *conflict);
    r.exit_code = kExitDiscrepancy;
  } else {
    r.doc["status"] = primary->status;
    if (answers.size() == 2) {
      bool all_inapplicable = true;
      for (const auto& a : answers) all_inapplicable = all_inapplicable && a.inapplicable;
      r.exit_code = all_inapplicable ? kExitUsage
                                     : (primary->definitive ? kExitDefinitive : kExitUnknown);
    } else {
      r.exit_code = exit_for(*primary);
    }
  }
  r.doc["definitive"] = !conflict && primary->definitive;
  if (primary->inverse) r.doc["inverse"] = format_map(*primary->inverse);
  if (primary->point) r.doc["point"] = format_point(*primary->point);
  if (primary->curve) r.doc["curve"] = format_curve(*primary->curve);
  if (primary->inverse) r.rows.emplace_back("inverse", format_map(*primary->inverse));
  if (primary->point) r.rows.emplace_back("preimage", format_point(*primary->point));
  if (primary->curve) r.rows.emplace_back("preimage", format_curve(*primary->curve));

  json engines = json::array();
  double total = 0;
  for (const auto& a : answers) {
    engines.push_back(answer_json(a));
    total += a.ms;
    add_engine_rows(r, a, cfg.verbose, answers.size() > 1);
  }
  if (answers.size() == 2 && !conflict) r.rows.emplace_back("cross-check", "engines agree");
  r.doc["engines"] = std::move(engines);
  r.doc["timing_ms"] = total;
  return r;
}

// -------------------------------------------------------------- commands

Rendered run_invert(const SessionConfig& cfg, const Command& cmd, Engine engine) {
  const PolyMap f = parse_map(cmd.map);
  json input;
  input["map"] = format_map(f);
  input["engine"] = engine_name(engine);
  if (engine != Engine::Groebner) input["filtration"] = cfg.filtration.name();

  std::vector<EngineAnswer> answers;
  if (engine != Engine::Groebner) answers.push_back(iterative_invert(f, cfg));
  if (engine != Engine::Iterative) answers.push_back(groebner_invert(f, cfg));
  return combine(command_name(cmd.kind), std::move(input), answers, cfg, disagreement);
}

Rendered run_preimage(const SessionConfig& cfg, const Command& cmd, Engine engine) {
  if (cmd.point.has_value() == cmd.curve.has_value()) {
    throw std::invalid_argument("give exactly one of --point and --curve");
  }
  const PolyMap f = parse_map(cmd.map);
  json input;
  input["map"] = format_map(f);
  input["engine"] = engine_name(engine);
  std::vector<EngineAnswer> answers;

  if (cmd.point) {
    const auto c = parse_point(*cmd.point, f.domain());
    if (c.size() != f.dim()) {
      throw ArityMismatch("point has " + std::to_string(c.size()) + " coordinates, map has " +
                          std::to_string(f.dim()));
    }
    input["point"] = format_point(c);
    if (engine != Engine::Groebner) answers.push_back(iterative_point(f, c, cfg));
    if (engine != Engine::Iterative) answers.push_back(groebner_point(f, c, cfg));
    auto check = [](const EngineAnswer& it, const EngineAnswer& gb) -> std::optional<std::string> {
      if (it.point && gb.status == "no-preimage") {
        return "iterative found " + format_point(*it.point) + " but groebner reports no preimage";
      }
      if (it.point && gb.point && *it.point != *gb.point) {
        return "iterative found " + format_point(*it.point) + ", groebner found " +
               format_point(*gb.point);
      }
      return std::nullopt;
    };
    return combine(command_name(cmd.kind), std::move(input), answers, cfg, check);
  }

  const Curve target = parse_curve(*cmd.curve, f.domain());
  if (target.dim() != f.dim()) {
    throw ArityMismatch("curve has " + std::to_string(target.dim()) + " components, map has " +
                        std::to_string(f.dim()));
  }
  input["curve"] = format_curve(target);
  if (engine != Engine::Groebner) answers.push_back(iterative_curve(f, target, cfg));
  if (engine != Engine::Iterative) answers.push_back(groebner_curve(f, target, cfg));
  auto check = [](const EngineAnswer& it, const EngineAnswer& gb) -> std::optional<std::string> {
    if (it.curve && gb.curve && !(*it.curve == *gb.curve)) return "the preimage curves differ";
    if (it.curve && (gb.status == "no-centered-preimage" || gb.status == "no-preimage")) {
      return "iterative found " + format_curve(*it.curve) + " but groebner reports " + gb.status;
    }
    if (gb.curve && it.status == "no-centered-preimage") {
      return "groebner found " + format_curve(*gb.curve) + " but iterative reports none";
    }
    // A centered preimage of degree within the budget is always found.
    if (gb.curve && !it.curve && !it.inapplicable && gb.curve->degree() <= static_cast<int>(it.max_deg)) {
      return "groebner found " + format_curve(*gb.curve) + " within the iterative degree budget";
    }
    return std::nullopt;
  };
  return combine(command_name(cmd.kind), std::move(input), answers, cfg, check);
}

Rendered run_verify(const Command& cmd) {
  const auto start = Clock::now();
  const PolyMap f = parse_map(cmd.map);
  const PolyMap g = parse_map(cmd.second_map);
  if (!(f.domain() == g.domain())) throw DomainMismatch("F and G have different domains");
  if (f.dim() != g.dim()) throw ArityMismatch("F and G have different dimensions");
  const bool fg = compose_maps(f, g).is_identity();
  const bool gf = compose_maps(g, f).is_identity();
  const std::string verdict = fg && gf ? "both compositions identity"
                              : fg     ? "only F o G is the identity"
                              : gf     ? "only G o F is the identity"
                                       : "neither composition is the identity";
  Rendered r;
  r.doc["command"] = "verify";
  r.doc["input"] = {{"map", format_map(f)}, {"inverse", format_map(g)}};
  r.doc["status"] = fg && gf ? "verified" : "not-inverse";
  r.doc["definitive"] = true;
  r.doc["f_of_g_identity"] = fg;
  r.doc["g_of_f_identity"] = gf;
  r.doc["verdict"] = verdict;
  const double ms = ms_since(start);
  r.doc["timing_ms"] = ms;
  r.rows = {{"F", format_map(f)},
            {"G", format_map(g)},
            {"F o G = I", fg ? "yes" : "no"},
            {"G o F = I", gf ? "yes" : "no"},
            {"verdict", verdict},
            {"time", fixed_ms(ms)}};
  return r;
}

Rendered run_bench(const SessionConfig& cfg, const Command& cmd) {
  const std::uint64_t seed = cmd.seed ? *cmd.seed : std::random_device{}();
  std::mt19937_64 rng(seed);
  TameOptions opts;
  opts.domain = parse_domain(cmd.domain);
  opts.dim = cmd.dim;
  opts.max_degree = cmd.max_degree;
  if (opts.domain.kind() == DomainKind::PrimeField) {
    throw DomainMismatch("bench runs over QQ or ZZ");
  }

  SessionConfig engine_cfg = cfg;
  engine_cfg.filtration = FiltrationSpec::degree();
  engine_cfg.verbose = false;
  double it_ms = 0, gb_ms = 0;
  unsigned agree = 0, failures = 0;
  json cases = json::array();
  for (unsigned i = 0; i < cmd.count; ++i) {
    const TamePair pair = random_tame_automorphism(rng, opts);
    const EngineAnswer it = iterative_invert(pair.map, engine_cfg);
    const EngineAnswer gb = groebner_invert(pair.map, engine_cfg);
    it_ms += it.ms;
    gb_ms += gb.ms;
    const bool ok = it.inverse && gb.inverse && *it.inverse == pair.inverse &&
                    *gb.inverse == pair.inverse;
    ok ? ++agree : ++failures;
    if (cfg.verbose || !ok) {
      cases.push_back({{"map", format_map(pair.map)},
                       {"degree", pair.map.degree()},
                       {"iterative_ms", it.ms},
                       {"groebner_ms", gb.ms},
                       {"ok", ok}});
    }
  }
  Rendered r;
  r.doc["command"] = "bench";
  r.doc["seed"] = seed;
  r.doc["count"] = cmd.count;
  r.doc["dim"] = cmd.dim;
  r.doc["max_degree"] = cmd.max_degree;
  r.doc["domain"] = opts.domain.name();
  r.doc["status"] = failures == 0 ? "ok" : "discrepancy";
  r.doc["agreements"] = agree;
  r.doc["failures"] = failures;
  r.doc["iterative_ms"] = it_ms;
  r.doc["groebner_ms"] = gb_ms;
  if (!cases.empty()) r.doc["cases"] = cases;
  r.rows = {{"seed", std::to_string(seed)},
            {"maps", std::to_string(cmd.count) + " tame automorphisms, n = " +
                         std::to_string(cmd.dim) + ", degree <= " +
                         std::to_string(cmd.max_degree) + " over " + opts.domain.name()},
            {"iterative", fixed_ms(it_ms)},
            {"groebner", fixed_ms(gb_ms)},
            {"agreement", std::to_string(agree) + "/" + std::to_string(cmd.count)}};
  if (cfg.verbose) {
    for (const auto& c : cases) {
      r.extra.push_back("  " + c["map"].get<std::string>() + "  it " +
                        fixed_ms(c["iterative_ms"].get<double>()) + ", gb " +
                        fixed_ms(c["groebner_ms"].get<double>()));
    }
  }
  r.exit_code = failures == 0 ? kExitDefinitive : kExitDiscrepancy;
  return r;
}

Report error_report(const SessionConfig& cfg, const Command& cmd, int code,
                    const std::string& kind, const std::string& message) {
  Report rep;
  rep.exit_code = code;
  if (cfg.format == OutputFormat::Machine) {
    json doc;
    doc["command"] = command_name(cmd.kind);
    doc["status"] = "error";
    doc["error"] = kind;
    doc["message"] = message;
    rep.text = doc.dump(2) + "\n";
  } else {
    rep.text = kind + ": " + message + "\n";
  }
  return rep;
}

}  // namespace

Report run(const SessionConfig& config, const Command& command) {
  try {
    Rendered r;
    switch (command.kind) {
      case Command::Kind::Invert:
        r = run_invert(config, command, config.engine);
        break;
      case Command::Kind::GbInvert:
        r = run_invert(config, command, Engine::Groebner);
        break;
      case Command::Kind::Preimage:
        r = run_preimage(config, command, config.engine);
        break;
      case Command::Kind::GbPreimage:
        r = run_preimage(config, command, Engine::Groebner);
        break;
      case Command::Kind::Verify:
        r = run_verify(command);
        break;
      case Command::Kind::Bench:
        r = run_bench(config, command);
        break;
    }
    return {r.exit_code, render(config, r)};
  } catch (const ParseError& e) {
    return error_report(config, command, kExitUsage, "parse error", e.what());
  } catch (const InvariantViolation& e) {
    return error_report(config, command, kExitDiscrepancy, "internal inconsistency", e.what());
  } catch (const Error& e) {
    return error_report(config, command, kExitUsage, "input error", e.what());
  } catch (const std::invalid_argument& e) {
    return error_report(config, command, kExitUsage, "usage error", e.what());
  }
}

}  // namespace polyinv
