#include "curvecount/laurent.hpp"

#include <stdexcept>

namespace curvecount {

LaurentPoly::LaurentPoly(long c) : LaurentPoly(BigInt(c)) {}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, c);
}

LaurentPoly LaurentPoly::monomial(std::int64_t q_exp, std::int64_t x_exp, const BigInt& c) {
  LaurentPoly p;
  p.add_term(q_exp, x_exp, c);
  return p;
}

BigInt LaurentPoly::coefficient(std::int64_t q_exp, std::int64_t x_exp) const {
  auto it = terms_.find({q_exp, x_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::int64_t LaurentPoly::min_q() const {
  if (terms_.empty()) throw std::logic_error("min_q of zero polynomial");
  return terms_.begin()->first.first;
}

std::int64_t LaurentPoly::max_q() const {
  if (terms_.empty()) throw std::logic_error("max_q of zero polynomial");
  return terms_.rbegin()->first.first;
}

LaurentPoly LaurentPoly::q_slice(std::int64_t i) const {
  LaurentPoly out;
  for (auto it = terms_.lower_bound({i, INT64_MIN}); it != terms_.end() && it->first.first == i; ++it) {
    out.terms_.emplace(Exponent{0, it->first.second}, it->second);
  }
  return out;
}

void LaurentPoly::add_term(std::int64_t q_exp, std::int64_t x_exp, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({q_exp, x_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  BigInt prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      out.add_term(ea.first + eb.first, ea.second + eb.second, prod);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(std::int64_t q_exp, std::int64_t x_exp) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.first + q_exp, e.second + x_exp}, c);
  return out;
}

LaurentPoly LaurentPoly::x_power_map(std::int64_t k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e.first, e.second * k, c);
  return out;
}

LaurentPoly LaurentPoly::at_q_one() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(0, e.second, c);
  return out;
}

LaurentPoly LaurentPoly::q_scaled(const BigInt& c) const {
  LaurentPoly out;
  for (const auto& [e, coeff] : terms_) {
    BigInt factor;
    if (e.first >= 0) {
      mpz_pow_ui(factor.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(e.first));
      out.add_term(e.first, e.second, coeff * factor);
    } else {
      if (c != 1 && c != -1) throw std::domain_error("q -> c*q with negative q powers needs c = +-1");
      out.add_term(e.first, e.second, (c == -1 && (e.first % 2) != 0) ? BigInt(-coeff) : coeff);
    }
  }
  return out;
}

bool LaurentPoly::divide_one_minus(std::int64_t s, LaurentPoly* out) const {
  if (terms_.empty()) {
    *out = LaurentPoly();
    return true;
  }
  // p = (1 - c q) r with c = x^s: r_i = p_i + c r_{i-1}, and p_hi + c r_{hi-1} must vanish.
  const std::int64_t lo = min_q();
  const std::int64_t hi = max_q();
  if (lo == hi) return false;
  LaurentPoly quotient;
  LaurentPoly carry;  // c * r_{i-1}, stored with q exponent 0
  for (std::int64_t i = lo; i < hi; ++i) {
    LaurentPoly r = q_slice(i) + carry;
    for (const auto& [e, c] : r.terms_) quotient.terms_.emplace(Exponent{i, e.second}, c);
    carry = r.shifted(0, s);
  }
  if (!(q_slice(hi) + carry).is_zero()) return false;
  *out = std::move(quotient);
  return true;
}

std::string LaurentPoly::render(const std::string& x_name) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    BigInt mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    auto append_var = [&](const std::string& name, std::int64_t exp) {
      if (exp == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (exp != 1) mono += "^" + (exp < 0 ? "(" + std::to_string(exp) + ")" : std::to_string(exp));
    };
    append_var("q", e.first);
    append_var(x_name, e.second);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

LaurentPoly one_minus_q(std::int64_t s) {
  LaurentPoly p(1);
  p.add_term(1, s, -1);
  return p;
}

}  // namespace curvecount
