#include "polyinv/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>

#include "polyinv/errors.hpp"

namespace polyinv {

namespace {

bool grevlex_greater(const Term& a, const Term& b) {
  return grevlex_compare(a.monomial, b.monomial) > 0;
}

void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (!(a.domain() == b.domain())) {
    throw DomainMismatch("polynomials over " + a.domain().name() + " and " +
                         b.domain().name());
  }
  if (a.nvars() != b.nvars()) {
    throw ArityMismatch("polynomials in " + std::to_string(a.nvars()) +
                        " and " + std::to_string(b.nvars()) + " variables");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// TermAccumulator

void TermAccumulator::add(const Monomial& m, const Coefficient& c) {
  if (c.is_zero()) return;
  sums_[m] += c.value();
}

void TermAccumulator::add_product(const Monomial& m, const Coefficient& a,
                                  const Coefficient& b) {
  mpq_class& slot = sums_[m];
  const mpq_srcptr x = a.value().get_mpq_t();
  const mpq_srcptr y = b.value().get_mpq_t();
  if (mpz_cmp_ui(mpq_denref(x), 1) == 0 && mpz_cmp_ui(mpq_denref(y), 1) == 0 &&
      mpz_cmp_ui(mpq_denref(slot.get_mpq_t()), 1) == 0) {
    mpz_addmul(mpq_numref(slot.get_mpq_t()), mpq_numref(x), mpq_numref(y));
    return;
  }
  mpq_mul(scratch_.get_mpq_t(), x, y);
  slot += scratch_;
}

void TermAccumulator::add(const Polynomial& p) {
  for (const auto& t : p.terms_) sums_[t.monomial] += t.coeff.value();
}

void TermAccumulator::add_scaled(const Polynomial& p, const Coefficient& c,
                                 const Monomial& m) {
  if (c.is_zero()) return;
  const bool unit_monomial = m.is_one();
  for (const auto& t : p.terms_) {
    add_product(unit_monomial ? t.monomial : t.monomial * m, t.coeff, c);
  }
}

Polynomial TermAccumulator::finish() {
  Polynomial out(domain_, nvars_);
  auto& dst = out.terms_;
  dst.reserve(sums_.size());
  for (auto& [m, v] : sums_) {
    if (sgn(v) == 0) continue;
    Coefficient c = domain_.make(v);
    if (!c.is_zero()) dst.push_back({m, std::move(c)});
  }
  sums_.clear();
  std::sort(dst.begin(), dst.end(), grevlex_greater);
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(const Domain& domain, std::size_t nvars,
                                const Coefficient& c) {
  return term(domain, Monomial(nvars), c);
}

Polynomial Polynomial::variable(const Domain& domain, std::size_t nvars,
                                std::size_t index) {
  if (index >= nvars) throw ArityMismatch("variable index out of range");
  return term(domain, Monomial::variable(nvars, index), domain.one());
}

Polynomial Polynomial::term(const Domain& domain, const Monomial& m,
                            const Coefficient& c) {
  Polynomial p(domain, m.nvars());
  Coefficient cc = domain.make(c.value());
  if (!cc.is_zero()) p.terms_.push_back({m, cc});
  return p;
}

Polynomial Polynomial::from_terms(const Domain& domain, std::size_t nvars,
                                  std::vector<Term> terms) {
  TermAccumulator acc(domain, nvars);
  for (auto& t : terms) {
    if (t.monomial.nvars() != nvars) {
      throw ArityMismatch("monomial arity differs from polynomial arity");
    }
    acc.add(t.monomial, domain.make(t.coeff.value()));
  }
  return acc.finish();
}

int Polynomial::low_degree() const noexcept {
  if (terms_.empty()) return kDegreeOfZero;
  unsigned low = terms_.front().monomial.total_degree();
  for (const auto& t : terms_) low = std::min(low, t.monomial.total_degree());
  return static_cast<int>(low);
}

int Polynomial::degree_in(std::size_t var) const {
  if (terms_.empty()) return kDegreeOfZero;
  Monomial::Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return static_cast<int>(d);
}

Coefficient Polynomial::coefficient(const Monomial& m) const {
  Term probe{m, Coefficient()};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, grevlex_greater);
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return Coefficient(0);
}

Coefficient Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) {
    return terms_.back().coeff;
  }
  return Coefficient(0);
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw InvariantViolation("leading term of zero");
  if (order.kind() == MonomialOrder::Kind::GrevLex) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  }
  return *best;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coeff = domain_.neg(t.coeff);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(*this, other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() ||
        (a != terms_.end() && grevlex_greater(*a, *b))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || grevlex_greater(*b, *a)) {
      merged.push_back(*b++);
    } else {
      Coefficient c = domain_.add(a->coeff, b->coeff);
      if (!c.is_zero()) merged.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  return *this += -other;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  TermAccumulator acc(a.domain(), a.nvars());
  for (const auto& t : b.terms()) acc.add_scaled(a, t.coeff, t.monomial);
  return acc.finish();
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
  Polynomial out(domain_, nvars_);
  Coefficient cc = domain_.make(c.value());
  if (cc.is_zero()) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff = domain_.mul(t.coeff, cc);
  // GF(p) and QQ have no zero divisors; ZZ scaling by nonzero keeps terms.
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(domain_, nvars_, domain_.one());
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Free functions

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }
Polynomial neg(const Polynomial& f) { return -f; }

Polynomial mul_truncated(const Polynomial& f, const Polynomial& g,
                         unsigned max_degree) {
  check_compatible(f, g);
  TermAccumulator acc(f.domain(), f.nvars());
  for (const auto& a : f.terms()) {
    unsigned da = a.monomial.total_degree();
    if (da > max_degree) continue;
    for (const auto& b : g.terms()) {
      if (da + b.monomial.total_degree() > max_degree) continue;
      acc.add_product(a.monomial * b.monomial, a.coeff, b.coeff);
    }
  }
  return acc.finish();
}

Polynomial truncate_total_degree(const Polynomial& f, unsigned d) {
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    if (t.monomial.total_degree() <= d) kept.push_back(t);
  }
  return Polynomial::from_terms(f.domain(), f.nvars(), std::move(kept));
}

Polynomial homogeneous_part(const Polynomial& f, unsigned k) {
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    if (t.monomial.total_degree() == k) kept.push_back(t);
  }
  return Polynomial::from_terms(f.domain(), f.nvars(), std::move(kept));
}

Polynomial linear_part(const Polynomial& f) { return homogeneous_part(f, 1); }

Polynomial affine_part(const Polynomial& f) { return truncate_total_degree(f, 1); }

Polynomial map_coefficients(
    const Polynomial& f, const std::function<Coefficient(const Coefficient&)>& fn) {
  TermAccumulator acc(f.domain(), f.nvars());
  for (const auto& t : f.terms()) acc.add(t.monomial, f.domain().make(fn(t.coeff).value()));
  return acc.finish();
}

Polynomial change_domain(const Polynomial& f, const Domain& domain) {
  TermAccumulator acc(domain, f.nvars());
  for (const auto& t : f.terms()) acc.add(t.monomial, domain.make(t.coeff.value()));
  return acc.finish();
}

Polynomial embed(const Polynomial& f, std::size_t nvars,
                 std::span<const std::size_t> positions) {
  if (positions.size() != f.nvars()) {
    throw ArityMismatch("embed: one target position per variable required");
  }
  TermAccumulator acc(f.domain(), nvars);
  for (const auto& t : f.terms()) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if (positions[i] >= nvars) throw ArityMismatch("embed: position out of range");
      m.set(positions[i], m[positions[i]] + t.monomial[i]);
    }
    acc.add(m, t.coeff);
  }
  return acc.finish();
}

Coefficient evaluate(const Polynomial& f, std::span<const Coefficient> point) {
  if (point.size() != f.nvars()) {
    throw ArityMismatch("evaluate: point has " + std::to_string(point.size()) +
                        " coordinates, polynomial has " +
                        std::to_string(f.nvars()) + " variables");
  }
  const Domain& dom = f.domain();
  std::vector<Coefficient> coords;
  coords.reserve(point.size());
  for (const auto& c : point) {
    if (!dom.contains(c)) {
      throw DomainMismatch("point coordinate " + c.to_string() + " not in " +
                           dom.name());
    }
    coords.push_back(c);
  }
  // Powers are memoized per coordinate.
  std::vector<std::vector<Coefficient>> powers(coords.size());
  auto power = [&](std::size_t i, unsigned e) -> const Coefficient& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(dom.one());
    while (cache.size() <= e) cache.push_back(dom.mul(cache.back(), coords[i]));
    return cache[e];
  };
  Coefficient sum = dom.zero();
  for (const auto& t : f.terms()) {
    Coefficient v = t.coeff;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (t.monomial[i] != 0) v = dom.mul(v, power(i, t.monomial[i]));
    }
    sum = dom.add(sum, v);
  }
  return sum;
}

Polynomial compose(const Polynomial& f, std::span<const Polynomial> args,
                   const ComposeOptions& options) {
  if (args.size() != f.nvars()) {
    throw ArityMismatch("compose: " + std::to_string(f.nvars()) +
                        " variables but " + std::to_string(args.size()) +
                        " substitutions");
  }
  if (args.empty()) throw ArityMismatch("compose: no substitutions");
  const Domain& dom = args.front().domain();
  const std::size_t m = args.front().nvars();
  for (const auto& a : args) check_compatible(args.front(), a);
  if (!(f.domain() == dom)) {
    throw DomainMismatch("compose: outer polynomial over " + f.domain().name() +
                         ", substitutions over " + dom.name());
  }

  auto reduce = [&](Polynomial p) {
    if (options.reduce) p = options.reduce(p);
    return p;
  };
  auto multiply = [&](const Polynomial& a, const Polynomial& b) {
    if (options.max_degree) return reduce(mul_truncated(a, b, *options.max_degree));
    return reduce(a * b);
  };
  const Polynomial one = Polynomial::constant(dom, m, dom.one());

  std::vector<int> low(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) low[i] = args[i].low_degree();

  std::vector<std::vector<Polynomial>> powers(args.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(one);
    while (cache.size() <= e) cache.push_back(multiply(cache.back(), args[i]));
    return cache[e];
  };

  // Products of leading variable powers are shared between terms through a
  // cache keyed by exponent prefix.
  std::unordered_map<Monomial, Polynomial, MonomialHash> prefix_cache;
  TermAccumulator acc(dom, m);
  for (const auto& t : f.terms()) {
    bool vanishes = false;
    long lower_bound = 0;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (low[i] == kDegreeOfZero) {
        vanishes = true;
        break;
      }
      lower_bound += static_cast<long>(t.monomial[i]) * low[i];
    }
    if (vanishes) continue;
    if (options.max_degree && lower_bound > static_cast<long>(*options.max_degree)) {
      continue;
    }

    Monomial prefix(f.nvars());
    const Polynomial* product = &one;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      prefix.set(i, t.monomial[i]);
      auto it = prefix_cache.find(prefix);
      if (it == prefix_cache.end()) {
        Polynomial next = product == &one ? power(i, t.monomial[i])
                                          : multiply(*product, power(i, t.monomial[i]));
        it = prefix_cache.emplace(prefix, std::move(next)).first;
      }
      product = &it->second;
    }
    acc.add_scaled(*product, dom.make(t.coeff.value()), Monomial(m));
  }
  return reduce(acc.finish());
}

// ---------------------------------------------------------------------------
// Rendering

std::vector<std::string> default_names(std::size_t nvars) {
  static const char* const kShort[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) {
    names.push_back(nvars <= 3 ? kShort[i] : "x" + std::to_string(i + 1));
  }
  return names;
}

std::string format(const Polynomial& f, std::span<const std::string> names) {
  if (names.size() != f.nvars()) {
    throw ArityMismatch("format: wrong number of variable names");
  }
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Coefficient c = t.coeff;
    bool negative = c.sign() < 0;
    mpq_class mag = abs(c.value());
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      auto e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += Coefficient(mag).to_string();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += Coefficient(mag).to_string() + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  auto names = default_names(f.nvars());
  return os << format(f, names);
}

}  // namespace polyinv
