#include "polyinv/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "polyinv/errors.hpp"

namespace polyinv {

namespace {

/// Terms sorted by decreasing `order`; the working representation inside
/// Buchberger's algorithm.
using OrderedTerms = std::vector<Term>;

struct Greater {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order->compare(a, b) > 0;
  }
};

OrderedTerms ordered(const Polynomial& f, const MonomialOrder& order) {
  OrderedTerms terms(f.terms().begin(), f.terms().end());
  if (order.kind() != MonomialOrder::Kind::GrevLex) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return order.compare(a.monomial, b.monomial) > 0;
    });
  }
  return terms;
}

Polynomial to_polynomial(const Domain& dom, std::size_t nvars, OrderedTerms terms) {
  return Polynomial::from_terms(dom, nvars, std::move(terms));
}

void make_monic(const Domain& dom, OrderedTerms& terms) {
  if (terms.empty() || terms.front().coeff.is_one()) return;
  Coefficient inv = dom.inv(terms.front().coeff);
  for (auto& t : terms) t.coeff = dom.mul(t.coeff, inv);
}

void require_field(const Domain& dom) {
  if (!dom.is_field()) {
    throw DomainMismatch("Gröbner computations need a field, got " + dom.name());
  }
}

/// Full reduction of `f` by `reducers` (all nonzero, any leading coefficient).
OrderedTerms reduce_fully(const Domain& dom, const OrderedTerms& f,
                          const std::vector<const OrderedTerms*>& reducers,
                          const MonomialOrder& order) {
  std::map<Monomial, Coefficient, Greater> work(Greater{&order});
  for (const auto& t : f) work.emplace(t.monomial, t.coeff);
  OrderedTerms remainder;
  while (!work.empty()) {
    auto it = work.begin();
    const OrderedTerms* reducer = nullptr;
    for (const auto* g : reducers) {
      if (g->front().monomial.divides(it->first)) {
        reducer = g;
        break;
      }
    }
    if (reducer == nullptr) {
      remainder.push_back({it->first, it->second});
      work.erase(it);
      continue;
    }
    const Monomial shift = it->first.quotient(reducer->front().monomial);
    const Coefficient factor = dom.div(it->second, reducer->front().coeff);
    work.erase(it);
    for (std::size_t k = 1; k < reducer->size(); ++k) {
      const Term& t = (*reducer)[k];
      Monomial m = t.monomial * shift;
      Coefficient delta = dom.neg(dom.mul(factor, t.coeff));
      auto [pos, inserted] = work.try_emplace(std::move(m), delta);
      if (!inserted) {
        pos->second = dom.add(pos->second, delta);
        if (pos->second.is_zero()) work.erase(pos);
      }
    }
  }
  return remainder;
}

OrderedTerms spoly(const Domain& dom, const OrderedTerms& f, const OrderedTerms& g,
                   const MonomialOrder& order) {
  const Monomial l = f.front().monomial.lcm(g.front().monomial);
  const Monomial uf = l.quotient(f.front().monomial);
  const Monomial ug = l.quotient(g.front().monomial);
  const Coefficient cf = dom.inv(f.front().coeff);
  const Coefficient cg = dom.inv(g.front().coeff);
  std::map<Monomial, Coefficient, Greater> acc(Greater{&order});
  auto add = [&](const Monomial& m, const Coefficient& c) {
    auto [pos, inserted] = acc.try_emplace(m, c);
    if (!inserted) {
      pos->second = dom.add(pos->second, c);
      if (pos->second.is_zero()) acc.erase(pos);
    }
  };
  for (std::size_t k = 1; k < f.size(); ++k) add(f[k].monomial * uf, dom.mul(f[k].coeff, cf));
  for (std::size_t k = 1; k < g.size(); ++k) {
    add(g[k].monomial * ug, dom.neg(dom.mul(g[k].coeff, cg)));
  }
  OrderedTerms out;
  for (auto& [m, c] : acc) out.push_back({m, c});
  return out;
}

/// Keeps only exponents of `vars`; every other exponent must be zero.
Polynomial restrict_to(const Polynomial& f, std::span<const std::size_t> vars) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(vars.size());
    for (std::size_t k = 0; k < vars.size(); ++k) m.set(k, t.monomial[vars[k]]);
    if (m.total_degree() != t.monomial.total_degree()) {
      throw InvariantViolation("restrict_to: polynomial uses a dropped variable");
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(f.domain(), vars.size(), std::move(terms));
}

std::vector<std::size_t> iota(std::size_t from, std::size_t count) {
  std::vector<std::size_t> v(count);
  std::iota(v.begin(), v.end(), from);
  return v;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order) {
  require_field(f.domain());
  std::vector<OrderedTerms> storage;
  for (const auto& b : basis) {
    if (!b.is_zero()) storage.push_back(ordered(b, order));
  }
  std::vector<const OrderedTerms*> reducers;
  for (const auto& s : storage) reducers.push_back(&s);
  return to_polynomial(f.domain(), f.nvars(),
                       reduce_fully(f.domain(), ordered(f, order), reducers, order));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  require_field(f.domain());
  if (f.is_zero() || g.is_zero()) return Polynomial(f.domain(), f.nvars());
  return to_polynomial(f.domain(), f.nvars(),
                       spoly(f.domain(), ordered(f, order), ordered(g, order), order));
}

GroebnerResult buchberger_reduced(const IdealBasis& ideal) {
  const MonomialOrder& order = ideal.order;
  GroebnerResult result{{}, order};
  if (ideal.generators.empty()) return result;
  const Domain& dom = ideal.generators.front().domain();
  const std::size_t nvars = ideal.generators.front().nvars();
  require_field(dom);
  for (const auto& g : ideal.generators) {
    if (!(g.domain() == dom) || g.nvars() != nvars) {
      throw ArityMismatch("ideal generators must share domain and arity");
    }
  }

  std::vector<OrderedTerms> basis;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_element = [&](OrderedTerms h) {
    make_monic(dom, h);
    const std::size_t s = basis.size();
    basis.push_back(std::move(h));
    for (std::size_t i = 0; i < s; ++i) pending.emplace(i, s);
  };

  // Seed with the inter-reduced generators so early pairs are small.
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    std::vector<const OrderedTerms*> reducers;
    for (const auto& b : basis) reducers.push_back(&b);
    OrderedTerms h = reduce_fully(dom, ordered(g, order), reducers, order);
    if (!h.empty()) add_element(std::move(h));
  }

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    // Normal strategy: smallest lcm first.
    auto best = pending.begin();
    Monomial best_lcm = basis[best->first].front().monomial.lcm(basis[best->second].front().monomial);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = basis[it->first].front().monomial.lcm(basis[it->second].front().monomial);
      if (order.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    const Monomial& lm_i = basis[i].front().monomial;
    const Monomial& lm_j = basis[j].front().monomial;
    if (lm_i.coprime(lm_j)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (basis[k].front().monomial.divides(best_lcm) && !is_pending(i, k) &&
          !is_pending(j, k)) {
        chain = true;
      }
    }
    if (chain) continue;

    std::vector<const OrderedTerms*> reducers;
    for (const auto& b : basis) reducers.push_back(&b);
    OrderedTerms h = reduce_fully(dom, spoly(dom, basis[i], basis[j], order), reducers, order);
    if (h.empty()) continue;
    if (h.front().monomial.is_one()) {
      result.basis = {Polynomial::constant(dom, nvars, dom.one())};
      return result;
    }
    add_element(std::move(h));
  }

  // Minimal basis: drop elements whose leading monomial is a multiple of
  // another's; among equal leading monomials keep the first.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      const Monomial& la = basis[a].front().monomial;
      const Monomial& lb = basis[b].front().monomial;
      if (lb.divides(la) && (!(la == lb) || b < a)) keep[a] = false;
    }
  }
  std::vector<OrderedTerms> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (keep[a]) minimal.push_back(std::move(basis[a]));
  }

  // Inter-reduce tails.
  std::vector<OrderedTerms> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<const OrderedTerms*> reducers;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) reducers.push_back(&minimal[b]);
    }
    OrderedTerms tail(minimal[a].begin() + 1, minimal[a].end());
    OrderedTerms r = reduce_fully(dom, tail, reducers, order);
    OrderedTerms full{minimal[a].front()};
    full.insert(full.end(), r.begin(), r.end());
    reduced.push_back(std::move(full));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const OrderedTerms& a, const OrderedTerms& b) {
    return order.compare(a.front().monomial, b.front().monomial) < 0;
  });
  for (auto& r : reduced) result.basis.push_back(to_polynomial(dom, nvars, std::move(r)));
  return result;
}

std::optional<LinearShape> linear_shape(const GroebnerResult& gb,
                                        std::span<const std::size_t> block) {
  if (gb.basis.size() != block.size()) return std::nullopt;
  const std::size_t nvars = gb.basis.empty() ? 0 : gb.basis.front().nvars();
  std::vector<std::optional<Polynomial>> values(block.size());
  for (const auto& g : gb.basis) {
    const Term& lead = g.leading_term(gb.order);
    if (lead.monomial.total_degree() != 1 || !lead.coeff.is_one()) return std::nullopt;
    auto pos = std::find_if(block.begin(), block.end(),
                            [&](std::size_t v) { return lead.monomial[v] == 1; });
    if (pos == block.end()) return std::nullopt;
    const auto slot = static_cast<std::size_t>(pos - block.begin());
    if (values[slot]) return std::nullopt;
    Polynomial tail = Polynomial::term(g.domain(), lead.monomial, lead.coeff) - g;
    for (const auto& t : tail.terms()) {
      for (auto v : block) {
        if (t.monomial[v] != 0) return std::nullopt;
      }
    }
    values[slot] = std::move(tail);
  }
  LinearShape shape;
  for (auto& v : values) shape.values.push_back(std::move(*v));
  (void)nvars;
  return shape;
}

GbInverseOutcome gb_inverse(const PolyMap& f, MonomialOrder::Kind inner) {
  const Domain& dom = f.domain();
  require_field(dom);
  const std::size_t n = f.dim();
  const auto xs = iota(0, n);
  const auto ys = iota(n, n);
  IdealBasis ideal{{}, MonomialOrder::block(xs, ys, inner)};
  for (std::size_t i = 0; i < n; ++i) {
    ideal.generators.push_back(Polynomial::variable(dom, 2 * n, n + i) - embed(f[i], 2 * n, xs));
  }
  GbInverseOutcome out{false, std::nullopt, buchberger_reduced(ideal)};
  auto shape = linear_shape(out.basis, xs);
  if (!shape) return out;
  std::vector<Polynomial> comps;
  for (const auto& v : shape->values) comps.push_back(restrict_to(v, ys));
  out.invertible = true;
  out.inverse = PolyMap(std::move(comps), f.names());
  return out;
}

const char* to_string(PointPreimageShape shape) {
  switch (shape) {
    case PointPreimageShape::Unique:
      return "unique";
    case PointPreimageShape::NotUnique:
      return "not-unique";
    case PointPreimageShape::Empty:
      return "empty";
  }
  return "?";
}

GbPointOutcome gb_point_preimage(const PolyMap& f, std::span<const Coefficient> c,
                                 MonomialOrder::Kind inner) {
  const Domain& dom = f.domain();
  require_field(dom);
  const std::size_t n = f.dim();
  if (c.size() != n) throw ArityMismatch("point and map dimensions differ");
  MonomialOrder order = inner == MonomialOrder::Kind::Lex ? MonomialOrder::lex()
                                                          : MonomialOrder::grevlex();
  IdealBasis ideal{{}, order};
  for (std::size_t i = 0; i < n; ++i) {
    ideal.generators.push_back(Polynomial::constant(dom, n, dom.make(c[i].value())) - f[i]);
  }
  GbPointOutcome out{PointPreimageShape::NotUnique, std::nullopt, buchberger_reduced(ideal)};
  if (out.basis.is_unit_ideal()) {
    out.shape = PointPreimageShape::Empty;
    return out;
  }
  const auto xs = iota(0, n);
  auto shape = linear_shape(out.basis, xs);
  if (!shape) return out;
  std::vector<Coefficient> point;
  for (const auto& v : shape->values) point.push_back(v.constant_term());
  out.shape = PointPreimageShape::Unique;
  out.point = std::move(point);
  return out;
}

const char* to_string(CurvePreimageShape shape) {
  switch (shape) {
    case CurvePreimageShape::Found:
      return "found";
    case CurvePreimageShape::ShapeBasis:
      return "shape-basis";
    case CurvePreimageShape::Evidence:
      return "evidence";
  }
  return "?";
}

namespace {

/// Exact quotient a / b of univariate polynomials over a field, if b | a.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  const Domain& dom = a.domain();
  Polynomial quotient(dom, 1);
  Polynomial rest = a;
  const Term lead_b = b.terms().front();
  while (!rest.is_zero()) {
    const Term& lead = rest.terms().front();
    if (!lead_b.monomial.divides(lead.monomial)) return std::nullopt;
    Polynomial q = Polynomial::term(dom, lead.monomial.quotient(lead_b.monomial),
                                    dom.div(lead.coeff, lead_b.coeff));
    quotient += q;
    rest -= q * b;
  }
  return quotient;
}

bool mentions_any(const Polynomial& p, std::span<const std::size_t> vars) {
  for (const auto& t : p.terms()) {
    for (auto v : vars) {
      if (t.monomial[v] != 0) return true;
    }
  }
  return false;
}

/// Triangular back-substitution over generators of the form a(t) X_i + b(t).
std::optional<std::vector<Polynomial>> back_substitute(std::vector<Polynomial> polys,
                                                       std::size_t n) {
  const Domain& dom = polys.front().domain();
  const std::size_t t_var = n;
  const std::vector<std::size_t> t_only{t_var};
  const auto xs = iota(0, n);
  std::vector<std::optional<Polynomial>> solved(n);

  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& p : polys) {
      if (p.is_zero()) continue;
      if (!mentions_any(p, xs)) return std::nullopt;  // nonzero relation in t alone
    }
    for (const auto& p : polys) {
      if (p.is_zero()) continue;
      std::optional<std::size_t> var;
      bool single = true;
      for (auto x : xs) {
        if (p.degree_in(x) > 0) {
          if (var) single = false;
          var = x;
        }
      }
      if (!single || !var || p.degree_in(*var) != 1) continue;
      // p = a(t) X_var + b(t)
      std::vector<Term> a_terms;
      std::vector<Term> b_terms;
      for (const auto& t : p.terms()) {
        if (t.monomial[*var] == 1) {
          Monomial m = t.monomial;
          m.set(*var, 0);
          a_terms.push_back({m, t.coeff});
        } else {
          b_terms.push_back(t);
        }
      }
      Polynomial a = restrict_to(Polynomial::from_terms(dom, n + 1, a_terms), t_only);
      Polynomial b = restrict_to(Polynomial::from_terms(dom, n + 1, b_terms), t_only);
      auto q = divide_exact(-b, a);
      if (!q) continue;
      Polynomial value = embed(*q, n + 1, t_only);
      std::vector<Polynomial> args;
      for (std::size_t v = 0; v <= n; ++v) {
        args.push_back(v == *var ? value : Polynomial::variable(dom, n + 1, v));
      }
      for (auto& other : polys) other = compose(other, args);
      solved[*var] = std::move(*q);
      progress = true;
      break;
    }
  }
  for (const auto& p : polys) {
    if (!p.is_zero()) return std::nullopt;
  }
  std::vector<Polynomial> out;
  for (auto& s : solved) {
    if (!s) return std::nullopt;
    out.push_back(std::move(*s));
  }
  return out;
}

}  // namespace

GbCurveOutcome gb_curve_preimage(const PolyMap& f, const Curve& target,
                                 MonomialOrder::Kind inner) {
  const Domain& dom = f.domain();
  require_field(dom);
  const std::size_t n = f.dim();
  if (target.dim() != n) throw ArityMismatch("curve and map dimensions differ");
  if (!(target.domain() == dom)) throw DomainMismatch("curve and map domains differ");
  const auto xs = iota(0, n);
  const std::vector<std::size_t> t_only{n};
  IdealBasis ideal{{}, MonomialOrder::block(xs, t_only, inner)};
  for (std::size_t i = 0; i < n; ++i) {
    ideal.generators.push_back(embed(f[i], n + 1, xs) - embed(target[i], n + 1, t_only));
  }
  GbCurveOutcome out{CurvePreimageShape::Evidence, std::nullopt, {}, buchberger_reduced(ideal)};

  auto centered_solution = [&](const std::vector<Polynomial>& comps) {
    for (const auto& c : comps) {
      if (!c.constant_term().is_zero()) return false;
    }
    return true;
  };

  if (auto shape = linear_shape(out.basis, xs)) {
    std::vector<Polynomial> comps;
    for (const auto& v : shape->values) comps.push_back(restrict_to(v, t_only));
    if (!centered_solution(comps)) {
      out.shape = CurvePreimageShape::ShapeBasis;
      out.solution = std::move(comps);
      return out;
    }
    Curve g(std::move(comps), target.param());
    if (!(apply_to_curve(f, g) == target)) {
      throw InvariantViolation("shape basis solution does not map onto the target");
    }
    out.shape = CurvePreimageShape::Found;
    out.g = std::move(g);
    return out;
  }

  if (out.basis.is_unit_ideal() || out.basis.basis.empty()) return out;
  auto candidate = back_substitute(out.basis.basis, n);
  if (!candidate || !centered_solution(*candidate)) return out;
  Curve g(std::move(*candidate), target.param());
  if (apply_to_curve(f, g) == target) {
    out.shape = CurvePreimageShape::Found;
    out.g = std::move(g);
  }
  return out;
}

}  // namespace polyinv
