#pragma once

// Laurent polynomials in two variables (q and a second variable x) with
// arbitrary-precision integer coefficients.

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace curvecount {

using BigInt = mpz_class;

class LaurentPoly {
 public:
  /// (q exponent, x exponent)
  using Exponent = std::pair<std::int64_t, std::int64_t>;
  using Terms = std::map<Exponent, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(std::int64_t q_exp, std::int64_t x_exp, const BigInt& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(std::int64_t q_exp, std::int64_t x_exp) const;

  /// Smallest and largest q exponent; requires a nonzero polynomial.
  std::int64_t min_q() const;
  std::int64_t max_q() const;

  /// Coefficient of q^i as a polynomial in x alone (q exponent 0).
  LaurentPoly q_slice(std::int64_t i) const;

  void add_term(std::int64_t q_exp, std::int64_t x_exp, const BigInt& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(unsigned n) const;
  /// Multiply by q^i x^j.
  LaurentPoly shifted(std::int64_t q_exp, std::int64_t x_exp) const;

  /// Substitute x -> x^k (k may be 0 or negative).
  LaurentPoly x_power_map(std::int64_t k) const;
  /// Substitute q -> 1, leaving a polynomial in x (q exponent 0).
  LaurentPoly at_q_one() const;
  /// Substitute q -> c*q.
  LaurentPoly q_scaled(const BigInt& c) const;

  /// Exact division by (1 - q*x^s); s = 0 divides by (1 - q). Returns false
  /// and leaves *out alone when the division is not exact.
  bool divide_one_minus(std::int64_t s, LaurentPoly* out) const;

  /// Monomials sorted by (q exponent, x exponent), e.g. "1 - q + q^2*L".
  std::string render(const std::string& x_name) const;

 private:
  Terms terms_;
};

/// (1 - q*x^s)
LaurentPoly one_minus_q(std::int64_t s);

}  // namespace curvecount
