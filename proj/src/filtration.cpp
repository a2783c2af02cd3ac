#include "polyinv/filtration.hpp"

#include "polyinv/errors.hpp"

namespace polyinv {

FiltrationSpec FiltrationSpec::padic(const mpz_class& p) {
  if (!is_prime(p)) throw DomainMismatch("padic:" + p.get_str() + " is not prime");
  return FiltrationSpec(Kind::PAdic, p);
}

std::string FiltrationSpec::name() const {
  return kind_ == Kind::Degree ? "degree" : "padic:" + prime_.get_str();
}

namespace {

void require_integers(const FiltrationSpec& spec, const Polynomial& f) {
  if (spec.kind() == FiltrationSpec::Kind::PAdic &&
      f.domain().kind() != DomainKind::Integers) {
    throw DomainMismatch(spec.name() + " filtration needs ZZ coefficients, got " +
                         f.domain().name());
  }
}

mpz_class prime_power(const mpz_class& p, unsigned d) {
  mpz_class m;
  mpz_pow_ui(m.get_mpz_t(), p.get_mpz_t(), d);
  return m;
}

}  // namespace

Polynomial project(const FiltrationSpec& spec, const Polynomial& f, unsigned d) {
  require_integers(spec, f);
  if (spec.kind() == FiltrationSpec::Kind::Degree) return truncate_total_degree(f, d);
  // p^0 = 1: everything is congruent to 0.
  if (d == 0) return Polynomial(f.domain(), f.nvars());
  const mpz_class m = prime_power(spec.prime(), d);
  return map_coefficients(f, [&](const Coefficient& c) {
    return Coefficient(balanced_mod(c.value().get_num(), m));
  });
}

PolyMap project(const FiltrationSpec& spec, const PolyMap& f, unsigned d) {
  std::vector<Polynomial> comps;
  for (const auto& c : f.components()) comps.push_back(project(spec, c, d));
  return PolyMap(std::move(comps), f.names());
}

Polynomial section(const FiltrationSpec& spec, const Polynomial& representative,
                   unsigned d) {
  if (!(project(spec, representative, d) == representative)) {
    throw CanonicalityViolation("not a canonical representative at level " +
                                std::to_string(d) + " of the " + spec.name() +
                                " filtration");
  }
  return representative;
}

PolyMap section(const FiltrationSpec& spec, const PolyMap& representative, unsigned d) {
  std::vector<Polynomial> comps;
  for (const auto& c : representative.components()) comps.push_back(section(spec, c, d));
  return PolyMap(std::move(comps), representative.names());
}

bool check_h_admissible(const FiltrationSpec& spec, const PolyMap& h) {
  for (const auto& c : h.components()) {
    if (spec.kind() == FiltrationSpec::Kind::Degree) {
      if (!c.is_zero() && c.low_degree() < 2) return false;
    } else {
      if (c.domain().kind() != DomainKind::Integers) return false;
      for (const auto& t : c.terms()) {
        if (!mpz_divisible_p(t.coeff.value().get_num_mpz_t(), spec.prime().get_mpz_t())) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace polyinv
