#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "invtqft/abelian.hpp"

namespace invtqft::tqft {

/// Nonzero complex number as (positive magnitude, phase in Q/Z turns).
/// Magnitudes are kept exactly as products of primes with rational exponents;
/// when a literal cannot be factored the magnitude degrades to a long double
/// logarithm and equality switches to a 1e-9 relative tolerance.
class Scalar {
 public:
  Scalar() = default;  // 1

  // r != 0; negative r carries phase 1/2.
  static Scalar rational(const mpq_class& r);
  static Scalar real(long double x);
  static Scalar root_of_unity(const mpq_class& turns);
  // Same magnitude as `magnitude`, phase replaced.
  static Scalar polar(const Scalar& magnitude, const mpq_class& turns);

  bool is_exact() const noexcept { return exact_; }
  const mpq_class& phase() const noexcept { return phase_; }
  Scalar magnitude() const;
  const std::map<abelian::Integer, mpq_class>& prime_exponents() const noexcept { return primes_; }

  // Rational exponents act on the phase by the principal branch.
  Scalar pow(const mpq_class& e) const;
  Scalar pow(long e) const { return pow(mpq_class(e)); }
  Scalar inverse() const { return pow(-1L); }

  long double log_magnitude() const;
  long double magnitude_value() const;
  // The magnitude when it is an exact rational.
  std::optional<mpq_class> rational_magnitude() const;
  bool magnitude_is_one() const;
  bool is_one() const { return phase_ == 0 && magnitude_is_one(); }

  // Exact form like `2^(3/2)*e(1/8)`, approximate magnitudes printed with
  // `digits` significant digits.
  std::string to_string(int digits = 12) const;
  // Decimal magnitude with the phase, e.g. `2.82842712475*e(1/8)`.
  std::string approx_string(int digits = 12) const;

  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend Scalar operator-(const Scalar& a) { return a * root_of_unity(mpq_class(1, 2)); }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void set_phase(mpq_class p);

  std::map<abelian::Integer, mpq_class> primes_;  // nonzero exponents only
  bool exact_ = true;
  long double log_mag_ = 0;  // used when !exact_
  mpq_class phase_ = 0;      // in [0, 1)
};

/// Accepts products of factors `r`, `r^k`, `r^(p/q)`, `e(p/q)` with an
/// optional leading `-`; r is an integer, fraction or decimal literal. So
/// `2*e(1/8)`, `-3`, `1.5`, `2^(3/2)*e(1/8)` all parse. Throws ParseError.
Scalar parse_scalar(std::string_view text);

/// Factorization of a positive rational into primes, nullopt when a cofactor
/// is too large to split by trial division and not a probable prime.
std::optional<std::map<abelian::Integer, mpq_class>> factor_rational(const mpq_class& r);

}  // namespace invtqft::tqft
