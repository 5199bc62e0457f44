#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "colorlie/error.hpp"

namespace colorlie {

/// The cyclotomic field Q(zeta_m), elements represented as polynomials in
/// zeta of degree < phi(m), reduced modulo the m-th cyclotomic polynomial.
///
/// Instances are cached per conductor and immutable after construction, so
/// references returned by get() stay valid for the whole session.
class CyclotomicField {
 public:
  static const CyclotomicField& get(unsigned conductor);

  unsigned conductor() const { return m_; }
  std::size_t degree() const { return degree_; }  // = phi(m)

  /// zeta^k reduced into the power basis, valid for k <= max_power().
  const std::vector<mpq_class>& power(std::size_t k) const;
  std::size_t max_power() const { return powers_.size() - 1; }

  /// Monic integer coefficients of Phi_m, ascending degree.
  const std::vector<mpz_class>& cyclotomic_polynomial() const { return phi_; }

 private:
  explicit CyclotomicField(unsigned m);

  unsigned m_;
  std::size_t degree_;
  std::vector<mpz_class> phi_;
  std::vector<std::vector<mpq_class>> powers_;
};

/// Exact scalar in Q(zeta_m). All coefficients of the artifact live here;
/// plain rationals are the conductor-1 (or 2) case. Values are kept in
/// canonical reduced form, so equality is coefficient-wise. Binary
/// operations on scalars with different conductors promote both sides to
/// the lcm conductor first.
class Scalar {
 public:
  Scalar() : m_(1), c_(1, mpq_class(0)) {}
  Scalar(long n) : m_(1), c_(1, mpq_class(n)) {}  // NOLINT: implicit by design

  static Scalar rational(long num, long den);
  static Scalar rational(const mpq_class& q);
  static Scalar zeta(unsigned conductor, long k = 1);

  /// Parses sums of terms "p/q", "z^k", "p/q*z^k" with z = zeta_conductor.
  static Scalar parse(const std::string& text, unsigned conductor);

  unsigned conductor() const { return m_; }
  bool is_zero() const;
  bool is_one() const;
  std::optional<mpq_class> as_rational() const;

  Scalar promoted(unsigned conductor) const;  // conductor() must divide it

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Scalar(unsigned m, std::vector<mpq_class> c) : m_(m), c_(std::move(c)) {}
  void reduce_inplace(std::vector<mpq_class>& raw) const;  // degree < 2*deg-1

  unsigned m_;
  std::vector<mpq_class> c_;  // size = field degree
};

inline Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
inline Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
inline Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
inline Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Prefix for rendering "coeff*symbol" terms inside a sum: handles signs,
/// suppresses unit coefficients, parenthesizes non-rational values. With
/// `separator` set, the prefix starts with " + " or " - ".
std::string scalar_product_prefix(const Scalar& c, bool separator);

}  // namespace colorlie
