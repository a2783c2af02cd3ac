#include "polyinv/inverse.hpp"

#include <limits>

#include "polyinv/errors.hpp"

namespace polyinv {

const char* to_string(InverseStatus status) {
  switch (status) {
    case InverseStatus::Inverted:
      return "inverted";
    case InverseStatus::NotInvertibleByDegreeBound:
      return "not-invertible";
    case InverseStatus::BudgetExhausted:
      return "budget-exhausted";
  }
  return "?";
}

unsigned degree_bound(const PolyMap& f) {
  const unsigned long deg = std::max(1, f.degree());
  unsigned long bound = 1;
  for (std::size_t i = 1; i < f.dim(); ++i) {
    bound *= deg;
    if (bound > std::numeric_limits<unsigned>::max() / 2) {
      return std::numeric_limits<unsigned>::max() / 2;
    }
  }
  return static_cast<unsigned>(bound);
}

namespace {

constexpr unsigned kDefaultPAdicBudget = 64;

std::size_t term_count(const PolyMap& k) {
  std::size_t n = 0;
  for (const auto& c : k.components()) n += c.size();
  return n;
}

/// Cheap necessary condition for H(I + K) = K: agreement at a few integer
/// points.
bool agrees_at_sample_points(const PolyMap& h, const PolyMap& k) {
  const Domain& dom = k.domain();
  const std::size_t n = k.dim();
  for (long seed : {2L, -3L}) {
    std::vector<Coefficient> point;
    for (std::size_t i = 0; i < n; ++i) {
      point.push_back(dom.make(seed + static_cast<long>(3 * i) * (i % 2 ? -1 : 1)));
    }
    auto k_at = evaluate(k, point);
    std::vector<Coefficient> shifted;
    for (std::size_t i = 0; i < n; ++i) shifted.push_back(dom.add(point[i], k_at[i]));
    if (evaluate(h, shifted) != k_at) return false;
  }
  return true;
}

// F o (I + K) = I + K - H(I + K), so this is exactly H(I + K) = K.
bool is_fixed_point(const PolyMap& f, const PolyMap& h, const PolyMap& k) {
  if (!agrees_at_sample_points(h, k)) return false;
  PolyMap g = PolyMap::identity(k.domain(), k.dim(), k.names()) + k;
  return compose_maps(f, g).is_identity();
}

}  // namespace

InverseOutcome iterative_inverse(const PolyMap& f, const FiltrationSpec& spec,
                                 const InverseOptions& options) {
  const std::size_t n = f.dim();
  const Domain& dom = f.domain();
  for (std::size_t i = 0; i < n; ++i) {
    if (!f[i].constant_term().is_zero()) {
      throw NotCentered("F(0) != 0: component " + std::to_string(i + 1) +
                        " has constant term " + f[i].constant_term().to_string());
    }
  }
  if (spec.kind() == FiltrationSpec::Kind::PAdic &&
      dom.kind() != DomainKind::Integers) {
    throw DomainMismatch(spec.name() + " filtration needs a map over ZZ");
  }

  PolyMap h = PolyMap::identity(dom, n, f.names()) - f;
  if (spec.kind() == FiltrationSpec::Kind::Degree) {
    h = normalize(f).h_part;  // reports the linear part on failure
  }
  if (!check_h_admissible(spec, h)) {
    throw AdmissibilityError("H = I - F is not in A_1 for the " + spec.name() +
                             " filtration");
  }

  const bool degree_kind = spec.kind() == FiltrationSpec::Kind::Degree;
  const unsigned budget = options.budget.value_or(
      degree_kind ? degree_bound(f) + 1 : kDefaultPAdicBudget);

  // K_{d+1} = s_{d+1} pi_{d+1} H(I + K_d), with the projection pushed into
  // the substitution so intermediates stay small.
  auto step = [&](const PolyMap& k, unsigned level) {
    PolyMap shifted = PolyMap::identity(dom, n, f.names()) + k;
    ComposeOptions opts;
    if (degree_kind) {
      opts.max_degree = level;
    } else {
      opts.reduce = [&spec, level](const Polynomial& p) { return project(spec, p, level); };
    }
    std::vector<Polynomial> comps;
    for (const auto& hc : h.components()) {
      comps.push_back(section(spec, project(spec, compose(hc, shifted.components(), opts), level),
                              level));
    }
    return PolyMap(std::move(comps), f.names());
  };

  InverseOutcome out{InverseStatus::BudgetExhausted, std::nullopt, 0, 0, 0,
                     PolyMap(std::vector<Polynomial>(n, Polynomial(dom, n)), f.names()),
                     {}};
  PolyMap previous = out.last_k;  // K_{d-1}; only read when d > 0
  PolyMap current = out.last_k;   // K_d
  if (options.keep_trace) out.trace.push_back(current);

  // F o G = I is already known from the fixed-point test.
  auto accept = [&](const PolyMap& k, unsigned level) {
    PolyMap g = PolyMap::identity(dom, n, f.names()) + k;
    if (!compose_maps(g, f).is_identity()) {
      throw InvariantViolation("fixed point of the iteration is not a two-sided inverse");
    }
    out.status = InverseStatus::Inverted;
    out.inverse = std::move(g);
    out.level = level;
    out.last_k = k;
  };

  bool checked_current = false;
  for (unsigned d = 0; d < budget; ++d) {
    PolyMap next = step(current, d + 1);
    ++out.iterations;
    if (options.keep_trace) out.trace.push_back(next);
    const bool repeated = next == current && (d == 0 || !(previous == current));
    if (repeated) {
      ++out.checks;
      if (is_fixed_point(f, h, current)) {
        accept(current, d);
        return out;
      }
    }
    // A run of equal iterates is checked once, at its first repeat.
    checked_current = next == current;
    previous = std::move(current);
    current = std::move(next);
    if (!degree_kind && term_count(current) > options.max_terms) break;
  }

  if (!checked_current) {
    ++out.checks;
    if (is_fixed_point(f, h, current)) {
      accept(current, out.iterations);
      return out;
    }
  }
  out.level = out.iterations;
  out.last_k = current;
  // Past deg(F)^(n-1) + 1 steps the bound rules out a polynomial inverse.
  const bool bound_reached = degree_kind && out.iterations >= degree_bound(f) + 1;
  out.status = bound_reached ? InverseStatus::NotInvertibleByDegreeBound
                             : InverseStatus::BudgetExhausted;
  return out;
}

}  // namespace polyinv
