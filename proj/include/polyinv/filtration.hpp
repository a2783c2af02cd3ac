#pragma once

#include <string>

#include "polyinv/endo.hpp"

namespace polyinv {

/// A composition-filtration A_0 ⊇ A_1 ⊇ ... of the polynomial ring together
/// with its sections s_d : A/A_d -> A.
///
/// Degree: A_d = (x_1, ..., x_n)^(d+1). Classes mod A_d are represented by
/// the polynomial truncated to total degree <= d.
///
/// PAdic(p): A_d = p^d A over ZZ. Classes are represented coefficientwise by
/// balanced residues mod p^d, which makes the sections converge: any fixed
/// polynomial is its own representative once p^d exceeds twice its largest
/// coefficient.
///
/// Classes are stored as their canonical representatives, so the section
/// is the identity on representatives and project(section(r)) = r holds
/// trivially.
class FiltrationSpec {
 public:
  enum class Kind { Degree, PAdic };

  static FiltrationSpec degree() { return FiltrationSpec(Kind::Degree, 0); }
  /// Throws DomainMismatch unless p is prime.
  static FiltrationSpec padic(const mpz_class& p);

  Kind kind() const noexcept { return kind_; }
  const mpz_class& prime() const noexcept { return prime_; }
  /// "degree" or "padic:<p>".
  std::string name() const;

  friend bool operator==(const FiltrationSpec&, const FiltrationSpec&) = default;

 private:
  FiltrationSpec(Kind kind, const mpz_class& p) : kind_(kind), prime_(p) {}

  Kind kind_;
  mpz_class prime_;
};

/// Canonical representative of f mod A_d.
Polynomial project(const FiltrationSpec& spec, const Polynomial& f, unsigned d);
PolyMap project(const FiltrationSpec& spec, const PolyMap& f, unsigned d);

/// s_d: lifts a canonical level-d representative back into A. Throws
/// CanonicalityViolation when `representative` is not canonical for level d.
Polynomial section(const FiltrationSpec& spec, const Polynomial& representative,
                   unsigned d);
PolyMap section(const FiltrationSpec& spec, const PolyMap& representative, unsigned d);

/// True when every component of H lies in A_1.
bool check_h_admissible(const FiltrationSpec& spec, const PolyMap& h);

}  // namespace polyinv
