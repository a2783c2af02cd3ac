#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace polyinv {

/// Exact element of a coefficient domain.
///
/// Every domain is embedded in the rationals, so the carrier is a single
/// `mpq_class` kept in the canonical form of its domain: lowest terms with a
/// positive denominator, denominator 1 for integers, and a representative in
/// [0, p-1] for GF(p). A Coefficient does not know its domain; the owning
/// polynomial or Domain does.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Coefficient(const mpz_class& v) : value_(v) {}
  explicit Coefficient(const mpq_class& v) : value_(v) { value_.canonicalize(); }

  const mpq_class& value() const noexcept { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "a/b" for proper rationals, plain decimal otherwise.
  std::string to_string() const;

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Coefficient& a,
                                          const Coefficient& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Coefficient& c);

enum class DomainKind { Rationals, Integers, PrimeField };

/// One of the three supported coefficient domains: QQ, ZZ or GF(p).
class Domain {
 public:
  static Domain rationals() { return Domain(DomainKind::Rationals, 0); }
  static Domain integers() { return Domain(DomainKind::Integers, 0); }
  /// Throws DomainMismatch unless p is prime.
  static Domain prime_field(const mpz_class& p);

  DomainKind kind() const noexcept { return kind_; }
  /// The characteristic p of GF(p); zero for QQ and ZZ.
  const mpz_class& modulus() const noexcept { return modulus_; }
  bool is_field() const noexcept { return kind_ != DomainKind::Integers; }
  /// "QQ", "ZZ" or "GF(p)".
  std::string name() const;

  /// Canonical image of a rational. Throws DomainMismatch for a non-integer
  /// in ZZ and NotInvertibleElement for a denominator divisible by p.
  Coefficient make(const mpq_class& v) const;
  Coefficient make(long v) const { return make(mpq_class(v)); }
  Coefficient zero() const { return Coefficient(0); }
  Coefficient one() const { return Coefficient(1); }

  /// True if c is already in this domain's canonical form.
  bool contains(const Coefficient& c) const;

  Coefficient add(const Coefficient& a, const Coefficient& b) const;
  Coefficient sub(const Coefficient& a, const Coefficient& b) const;
  Coefficient mul(const Coefficient& a, const Coefficient& b) const;
  Coefficient neg(const Coefficient& a) const;
  /// Multiplicative inverse; throws NotInvertibleElement for non-units.
  Coefficient inv(const Coefficient& a) const;
  Coefficient div(const Coefficient& a, const Coefficient& b) const {
    return mul(a, inv(b));
  }
  bool is_unit(const Coefficient& a) const;

  friend bool operator==(const Domain& a, const Domain& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  Domain(DomainKind kind, const mpz_class& p) : kind_(kind), modulus_(p) {}
  Coefficient reduce(const mpz_class& v) const;

  DomainKind kind_;
  mpz_class modulus_;
};

bool is_prime(const mpz_class& p);

/// Representative of a modulo p^d taken from the balanced window:
/// [-p^d/2, p^d/2 - 1] for p = 2 and [-(p^d-1)/2, (p^d-1)/2] for odd p.
/// `domain` must be ZZ.
Coefficient balanced_residue(const Domain& domain, const Coefficient& a,
                             unsigned d, const mpz_class& p);

/// Balanced representative of an integer modulo m (m > 0). The window is
/// [-m/2, m/2 - 1] for even m and symmetric for odd m.
mpz_class balanced_mod(const mpz_class& a, const mpz_class& m);

}  // namespace polyinv
