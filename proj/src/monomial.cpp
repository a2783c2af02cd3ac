#include "polyinv/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "polyinv/errors.hpp"

namespace polyinv {

Monomial::Monomial(std::initializer_list<Exponent> exps)
    : exps_(exps.begin(), exps.end()),
      degree_(std::accumulate(exps.begin(), exps.end(), 0u)) {}

Monomial::Monomial(std::span<const Exponent> exps)
    : exps_(exps.begin(), exps.end()),
      degree_(std::accumulate(exps.begin(), exps.end(), 0u)) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.set(index, 1);
  return m;
}

void Monomial::set(std::size_t i, Exponent e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial q(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= other.exps_[i];
  q.degree_ = degree_ - other.degree_;
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l(*this);
  l.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    l.exps_[i] = std::max(exps_[i], other.exps_[i]);
    l.degree_ += l.exps_[i];
  }
  return l;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial p(a);
  for (std::size_t i = 0; i < a.exps_.size(); ++i) p.exps_[i] += b.exps_[i];
  p.degree_ = a.degree_ + b.degree_;
  return p;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree()) {
    return a.total_degree() <=> b.total_degree();
  }
  // Tie: the monomial with the smaller exponent in the last differing
  // variable is greater.
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

namespace {

std::strong_ordering compare_on(const Monomial& a, const Monomial& b,
                                const std::vector<std::size_t>& vars,
                                MonomialOrder::Kind inner) {
  if (inner == MonomialOrder::Kind::GrevLex) {
    unsigned da = 0;
    unsigned db = 0;
    for (auto v : vars) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da <=> db;
    for (std::size_t k = vars.size(); k-- > 0;) {
      auto v = vars[k];
      if (a[v] != b[v]) return b[v] <=> a[v];
    }
    return std::strong_ordering::equal;
  }
  for (auto v : vars) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

}  // namespace

MonomialOrder MonomialOrder::block(std::vector<std::size_t> high,
                                   std::vector<std::size_t> low, Kind inner) {
  if (inner == Kind::Block) {
    throw ArityMismatch("block order needs a Lex or GrevLex inner order");
  }
  std::vector<std::size_t> all(high);
  all.insert(all.end(), low.begin(), low.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != i) {
      throw ArityMismatch("block order must partition the variables");
    }
  }
  MonomialOrder order(Kind::Block, inner);
  order.high_ = std::move(high);
  order.low_ = std::move(low);
  return order;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a,
                                            const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      return lex_compare(a, b);
    case Kind::GrevLex:
      return grevlex_compare(a, b);
    case Kind::Block: {
      auto c = compare_on(a, b, high_, inner_);
      if (c != 0) return c;
      return compare_on(a, b, low_, inner_);
    }
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace polyinv
