#pragma once

// Coefficient rings for motivic classes and weight polynomials.
//
// Localized<S> is num / ((1-q)^a (1-q*x^S)^b) with num a Laurent polynomial
// in q and x. RationalQL uses S = 1 (x is the Lefschetz class L), WeightPoly
// uses S = 2 (x is the weight variable t, with L -> t^2).

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvecount/graph.hpp"
#include "curvecount/laurent.hpp"

namespace curvecount {

class RingError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <int S>
class Localized {
 public:
  static constexpr const char* kVariable = S == 1 ? "L" : "t";

  Localized() = default;
  Localized(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  Localized(LaurentPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  Localized(LaurentPoly num, unsigned den_q, unsigned den_qx) : num_(std::move(num)), a_(den_q), b_(den_qx) {
    canonicalize();
  }

  static Localized monomial(std::int64_t q_exp, std::int64_t x_exp, const BigInt& c = 1) {
    return Localized(LaurentPoly::monomial(q_exp, x_exp, c));
  }
  /// 1 / ((1-q)^a (1-q*x^S)^b)
  static Localized inverse_denominator(unsigned a, unsigned b) { return Localized(LaurentPoly(1), a, b); }

  const LaurentPoly& num() const { return num_; }
  unsigned den_q() const { return a_; }
  unsigned den_qx() const { return b_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return a_ == 0 && b_ == 0; }

  Localized& operator+=(const Localized& o) {
    const unsigned a = std::max(a_, o.a_);
    const unsigned b = std::max(b_, o.b_);
    num_ = lift(a, b) + o.lift(a, b);
    a_ = a;
    b_ = b;
    canonicalize();
    return *this;
  }
  Localized& operator-=(const Localized& o) { return *this += -o; }
  Localized& operator*=(const Localized& o) {
    num_ *= o.num_;
    a_ += o.a_;
    b_ += o.b_;
    canonicalize();
    return *this;
  }
  friend Localized operator+(Localized x, const Localized& y) { return x += y; }
  friend Localized operator-(Localized x, const Localized& y) { return x -= y; }
  friend Localized operator*(Localized x, const Localized& y) { return x *= y; }
  friend Localized operator-(Localized x) {
    x.num_ = -x.num_;
    return x;
  }
  /// Canonical forms are unique, so structural comparison is ring equality.
  friend bool operator==(const Localized&, const Localized&) = default;

  Localized pow(unsigned n) const {
    Localized out(num_.pow(n));
    out.a_ = a_ * n;
    out.b_ = b_ * n;
    return out;
  }

  /// Multiply by q^i x^j.
  Localized shifted(std::int64_t q_exp, std::int64_t x_exp) const {
    Localized out = *this;
    out.num_ = num_.shifted(q_exp, x_exp);
    return out;
  }

  /// q -> 1. Requires both denominators to have cancelled.
  LaurentPoly at_q_one() const {
    if (!is_polynomial()) throw RingError("q -> 1 on a class with an uncancelled denominator");
    return num_.at_q_one();
  }

  /// q -> c*q. Denominators only survive for c = 1.
  Localized q_scaled(const BigInt& c) const {
    if (!is_polynomial() && c != 1) throw RingError("q -> c*q on a class with a denominator");
    Localized out = *this;
    out.num_ = num_.q_scaled(c);
    return out;
  }

  std::string render() const {
    std::string num = num_.render(kVariable);
    if (is_polynomial()) return num;
    std::string den;
    if (a_ > 0) den += a_ == 1 ? "(1-q)" : "(1-q)^" + std::to_string(a_);
    if (b_ > 0) {
      if (!den.empty()) den += "*";
      const std::string factor = S == 1 ? "(1-q*L)" : "(1-q*t^2)";
      den += b_ == 1 ? factor : factor + "^" + std::to_string(b_);
    }
    const bool wrap = a_ + b_ > 1 || (a_ > 0 && b_ > 0);
    return "(" + num + ") / " + (wrap ? "(" + den + ")" : den);
  }

 private:
  LaurentPoly lift(unsigned a, unsigned b) const {
    LaurentPoly out = num_;
    if (a > a_) out *= one_minus_q(0).pow(a - a_);
    if (b > b_) out *= one_minus_q(S).pow(b - b_);
    return out;
  }

  void canonicalize() {
    if (num_.is_zero()) {
      a_ = b_ = 0;
      return;
    }
    LaurentPoly quotient;
    while (a_ > 0 && num_.divide_one_minus(0, &quotient)) {
      num_ = std::move(quotient);
      --a_;
    }
    while (b_ > 0 && num_.divide_one_minus(S, &quotient)) {
      num_ = std::move(quotient);
      --b_;
    }
  }

  LaurentPoly num_;
  unsigned a_ = 0;
  unsigned b_ = 0;
};

using RationalQL = Localized<1>;
using WeightPoly = Localized<2>;

/// L -> 1. The (1-q*L) factors become (1-q).
RationalQL at_L_one(const RationalQL& f);
/// L -> t^2.
WeightPoly to_weight(const RationalQL& f);
/// The common denominator D = (1-q)(1-q*L) and the monomial q*L.
RationalQL D_factor();
RationalQL qL_power(std::int64_t k);

// ---------------------------------------------------------------------------
// Laurent polynomials in u = q/(1-q)^2.

class ULaurent {
 public:
  using Terms = std::map<std::int64_t, BigInt>;

  ULaurent() = default;
  ULaurent(long c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)
  static ULaurent monomial(std::int64_t exp, const BigInt& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(std::int64_t exp) const;
  void add_term(std::int64_t exp, const BigInt& c);

  ULaurent& operator+=(const ULaurent& o);
  ULaurent& operator-=(const ULaurent& o);
  friend ULaurent operator+(ULaurent a, const ULaurent& b) { return a += b; }
  friend ULaurent operator-(ULaurent a, const ULaurent& b) { return a -= b; }
  friend ULaurent operator*(const ULaurent& a, const ULaurent& b);
  friend bool operator==(const ULaurent&, const ULaurent&) = default;

  /// Coefficients of u^lo .. u^(lo+len-1).
  std::vector<BigInt> window(std::int64_t lo, std::size_t len) const;
  /// Back into q: the class as a RationalQL with L exponent 0.
  RationalQL to_q() const;
  std::string render() const;

 private:
  Terms terms_;
};

/// Expand f (L exponents all zero) as a Laurent polynomial in u. Throws
/// RingError when f is not of that form.
ULaurent to_u_laurent(const RationalQL& f);

// ---------------------------------------------------------------------------
// Square-zero vertex ring: coefficients indexed by vertex subsets, with
// Q^A * Q^B = 0 whenever A and B meet.

template <class Coeff>
class SquareZero {
 public:
  using Terms = std::map<VertexSet, Coeff>;

  SquareZero() = default;
  explicit SquareZero(std::size_t vertex_count) : n_(vertex_count) {}

  static SquareZero one(std::size_t vertex_count) {
    SquareZero out(vertex_count);
    out.set(VertexSet(), Coeff(1));
    return out;
  }

  std::size_t vertex_count() const { return n_; }
  const Terms& terms() const { return terms_; }

  Coeff at(VertexSet s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Coeff() : it->second;
  }
  void set(VertexSet s, Coeff c) {
    if (!s.is_subset_of(VertexSet::full(n_))) throw RingError("vertex subset outside the host graph");
    if (c.is_zero()) {
      terms_.erase(s);
    } else {
      terms_[s] = std::move(c);
    }
  }

  SquareZero& operator+=(const SquareZero& o) {
    check_host(o);
    for (const auto& [s, c] : o.terms_) set(s, at(s) + c);
    return *this;
  }
  friend SquareZero operator+(SquareZero a, const SquareZero& b) { return a += b; }
  friend SquareZero operator*(const SquareZero& a, const SquareZero& b) {
    a.check_host(b);
    SquareZero out(a.n_);
    for (const auto& [sa, ca] : a.terms_) {
      for (const auto& [sb, cb] : b.terms_) {
        if (!(sa & sb).empty()) continue;
        out.set(sa | sb, out.at(sa | sb) + ca * cb);
      }
    }
    return out;
  }
  friend bool operator==(const SquareZero&, const SquareZero&) = default;

 private:
  void check_host(const SquareZero& o) const {
    if (n_ != o.n_) throw RingError("square-zero classes over different vertex sets");
  }

  std::size_t n_ = 0;
  Terms terms_;
};

/// Exp(F)(S) = sum over set partitions of S of the product of F over the
/// blocks; Exp(F)(empty) = 1. Requires F(empty) = 0.
template <class Coeff>
SquareZero<Coeff> vertex_exp(const SquareZero<Coeff>& f) {
  if (!f.at(VertexSet()).is_zero()) throw RingError("exponential of a class with nonzero constant term");
  const std::size_t n = f.vertex_count();
  if (n > kEnumerationLimit) throw RingError("exponential over more than 24 vertices");
  const std::uint64_t full = VertexSet::full(n).bits();
  std::vector<Coeff> value(std::size_t{1} << n);
  value[0] = Coeff(1);
  for (std::uint64_t s = 1; s <= full; ++s) {
    // Sum over the block B containing the lowest element of s.
    const std::uint64_t low = s & (~s + 1);
    const std::uint64_t rest = s ^ low;
    Coeff total;
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint64_t block = sub | low;
      auto it = f.terms().find(VertexSet(block));
      if (it != f.terms().end()) {
        const Coeff& tail = value[s ^ block];
        if (!tail.is_zero()) total += it->second * tail;
      }
      if (sub == 0) break;
    }
    value[s] = std::move(total);
  }
  SquareZero<Coeff> out(n);
  for (std::uint64_t s = 0; s <= full; ++s) out.set(VertexSet(s), std::move(value[s]));
  return out;
}

using VertexClass = SquareZero<RationalQL>;

}  // namespace curvecount
