#include "polyinv/preimage.hpp"

#include <algorithm>

#include "polyinv/errors.hpp"
#include "polyinv/inverse.hpp"

namespace polyinv {

const char* to_string(PreimageStatus status) {
  switch (status) {
    case PreimageStatus::Found:
      return "found";
    case PreimageStatus::NotFoundWithinDegree:
      return "not-found-within-degree";
  }
  return "?";
}

unsigned default_preimage_budget(const PolyMap& f_map, const Curve& f) {
  const unsigned long bound =
      static_cast<unsigned long>(degree_bound(f_map)) * std::max(1, f.degree());
  return static_cast<unsigned>(std::min<unsigned long>(bound, 1u << 20));
}

namespace {

std::vector<Polynomial> plus(const Curve& a, const Curve& b) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

/// H(f + K), truncated to t-degree <= max_degree when given.
Curve apply_h(const PolyMap& h, const Curve& f, const Curve& k,
              std::optional<unsigned> max_degree) {
  const auto args = plus(f, k);
  ComposeOptions opts;
  opts.max_degree = max_degree;
  std::vector<Polynomial> comps;
  for (const auto& hc : h.components()) comps.push_back(compose(hc, args, opts));
  return Curve(std::move(comps), f.param());
}

}  // namespace

PreimageOutcome curve_preimage(const PolyMap& f_map, const Curve& f,
                               const PreimageOptions& options) {
  if (f_map.dim() != f.dim()) throw ArityMismatch("curve and map dimensions differ");
  if (!(f_map.domain() == f.domain())) throw DomainMismatch("curve and map domains differ");
  const PolyMap h = normalize(f_map).h_part;
  const Domain& dom = f.domain();

  const unsigned limit = std::max<unsigned>(options.max_deg, std::max(0, f.degree()));
  const Curve zero = Curve::zero(dom, f.dim(), f.param());

  PreimageOutcome out{PreimageStatus::NotFoundWithinDegree, std::nullopt, 0, 1,
                      options.max_deg, zero, {}};
  if (options.keep_trace) out.trace.push_back(zero);

  auto accept = [&](const Curve& k, unsigned level) {
    Curve g(plus(f, k), f.param());
    if (!(apply_to_curve(f_map, g) == f)) {
      throw InvariantViolation("accepted preimage curve does not map onto f");
    }
    out.status = PreimageStatus::Found;
    out.g = std::move(g);
    out.level = level;
    out.last_k = k;
  };
  auto fixed = [&](const Curve& k) { return apply_h(h, f, k, std::nullopt) == k; };

  Curve previous = zero;  // K_{d-1}; only read when d > 1
  Curve current = zero;   // K_d
  bool checked_current = false;
  // With deg g <= limit, K_{limit+1} already equals g - f.
  for (unsigned d = 1; d <= limit + 1; ++d) {
    Curve next = apply_h(h, f, current, d);
    ++out.iterations;
    if (options.keep_trace) out.trace.push_back(next);
    if (next == current && (d == 1 || !(previous == current))) {
      if (fixed(current)) {
        accept(current, d);
        return out;
      }
    }
    checked_current = next == current;
    previous = std::move(current);
    current = std::move(next);
  }
  if (!checked_current && fixed(current)) {
    accept(current, out.iterations + 1);
    return out;
  }
  out.level = out.iterations + 1;
  out.last_k = current;
  return out;
}

PointPreimageOutcome point_preimage(const PolyMap& f_map, std::span<const Coefficient> c,
                                    const PreimageOptions& options) {
  if (c.size() != f_map.dim()) throw ArityMismatch("point and map dimensions differ");
  const Domain& dom = f_map.domain();
  std::vector<Coefficient> target;
  for (const auto& v : c) target.push_back(dom.make(v.value()));
  const Curve line = Curve::line(dom, target);

  PointPreimageOutcome out{false, std::nullopt, curve_preimage(f_map, line, options)};
  if (out.curve.status != PreimageStatus::Found) return out;
  auto p = out.curve.g->at(dom.one());
  if (evaluate(f_map, p) != target) {
    throw InvariantViolation("point preimage does not map onto the target");
  }
  out.found = true;
  out.point = std::move(p);
  return out;
}

}  // namespace polyinv
