#include "polyinv/ring.hpp"

#include <ostream>

#include "polyinv/errors.hpp"

namespace polyinv {

std::string Coefficient::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Coefficient& c) {
  return os << c.to_string();
}

bool is_prime(const mpz_class& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

Domain Domain::prime_field(const mpz_class& p) {
  if (!is_prime(p)) {
    throw DomainMismatch("GF(" + p.get_str() + "): modulus is not prime");
  }
  return Domain(DomainKind::PrimeField, p);
}

std::string Domain::name() const {
  switch (kind_) {
    case DomainKind::Rationals:
      return "QQ";
    case DomainKind::Integers:
      return "ZZ";
    case DomainKind::PrimeField:
      return "GF(" + modulus_.get_str() + ")";
  }
  return "?";
}

Coefficient Domain::reduce(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
  return Coefficient(r);
}

Coefficient Domain::make(const mpq_class& raw) const {
  mpq_class v(raw);
  v.canonicalize();
  switch (kind_) {
    case DomainKind::Rationals:
      return Coefficient(v);
    case DomainKind::Integers:
      if (v.get_den() != 1) {
        throw DomainMismatch("value " + v.get_str() + " is not an integer");
      }
      return Coefficient(v.get_num());
    case DomainKind::PrimeField: {
      if (v.get_den() == 1) return reduce(v.get_num());
      mpz_class den_inv;
      if (mpz_invert(den_inv.get_mpz_t(), v.get_den().get_mpz_t(),
                     modulus_.get_mpz_t()) == 0) {
        throw NotInvertibleElement("denominator " + v.get_den().get_str() +
                                   " vanishes in " + name());
      }
      return reduce(v.get_num() * den_inv);
    }
  }
  return Coefficient(v);
}

bool Domain::contains(const Coefficient& c) const {
  switch (kind_) {
    case DomainKind::Rationals:
      return true;
    case DomainKind::Integers:
      return c.is_integer();
    case DomainKind::PrimeField:
      return c.is_integer() && c.value() >= 0 && c.value() < modulus_;
  }
  return false;
}

Coefficient Domain::add(const Coefficient& a, const Coefficient& b) const {
  if (kind_ == DomainKind::PrimeField) {
    mpz_class s = a.value().get_num() + b.value().get_num();
    if (s >= modulus_) s -= modulus_;
    return Coefficient(s);
  }
  return Coefficient(mpq_class(a.value() + b.value()));
}

Coefficient Domain::sub(const Coefficient& a, const Coefficient& b) const {
  if (kind_ == DomainKind::PrimeField) {
    mpz_class s = a.value().get_num() - b.value().get_num();
    if (s < 0) s += modulus_;
    return Coefficient(s);
  }
  return Coefficient(mpq_class(a.value() - b.value()));
}

Coefficient Domain::mul(const Coefficient& a, const Coefficient& b) const {
  if (kind_ == DomainKind::PrimeField) {
    return reduce(a.value().get_num() * b.value().get_num());
  }
  return Coefficient(mpq_class(a.value() * b.value()));
}

Coefficient Domain::neg(const Coefficient& a) const {
  if (kind_ == DomainKind::PrimeField) {
    if (a.is_zero()) return a;
    return Coefficient(mpz_class(modulus_ - a.value().get_num()));
  }
  return Coefficient(mpq_class(-a.value()));
}

bool Domain::is_unit(const Coefficient& a) const {
  if (a.is_zero()) return false;
  if (kind_ == DomainKind::Integers) return abs(a.value()) == 1;
  return true;
}

Coefficient Domain::inv(const Coefficient& a) const {
  if (!is_unit(a)) {
    throw NotInvertibleElement(a.to_string() + " is not a unit in " + name());
  }
  if (kind_ == DomainKind::PrimeField) {
    mpz_class r;
    mpz_invert(r.get_mpz_t(), a.value().get_num_mpz_t(), modulus_.get_mpz_t());
    return Coefficient(r);
  }
  return Coefficient(mpq_class(1 / a.value()));
}

mpz_class balanced_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  // even m: [-m/2, m/2 - 1]; odd m: [-(m-1)/2, (m-1)/2]
  mpz_class upper = mpz_class(m - 1) / 2;
  if (r > upper) r -= m;
  return r;
}

Coefficient balanced_residue(const Domain& domain, const Coefficient& a,
                             unsigned d, const mpz_class& p) {
  if (domain.kind() != DomainKind::Integers || !a.is_integer()) {
    throw DomainMismatch("balanced residues are defined over ZZ only");
  }
  if (d == 0) throw DomainMismatch("balanced residue needs d >= 1");
  if (!is_prime(p)) throw DomainMismatch("modulus base must be prime");
  mpz_class m;
  mpz_pow_ui(m.get_mpz_t(), p.get_mpz_t(), d);
  return Coefficient(balanced_mod(a.value().get_num(), m));
}

}  // namespace polyinv
