#include "curvecount/kring.hpp"

namespace curvecount {

RationalQL at_L_one(const RationalQL& f) {
  return RationalQL(f.num().x_power_map(0), f.den_q() + f.den_qx(), 0);
}

WeightPoly to_weight(const RationalQL& f) { return WeightPoly(f.num().x_power_map(2), f.den_q(), f.den_qx()); }

RationalQL D_factor() { return RationalQL(one_minus_q(0) * one_minus_q(1)); }

RationalQL qL_power(std::int64_t k) { return RationalQL::monomial(k, k); }

ULaurent ULaurent::monomial(std::int64_t exp, const BigInt& c) {
  ULaurent u;
  u.add_term(exp, c);
  return u;
}

BigInt ULaurent::coefficient(std::int64_t exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void ULaurent::add_term(std::int64_t exp, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ULaurent& ULaurent::operator+=(const ULaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ULaurent& ULaurent::operator-=(const ULaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ULaurent operator*(const ULaurent& a, const ULaurent& b) {
  ULaurent out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

std::vector<BigInt> ULaurent::window(std::int64_t lo, std::size_t len) const {
  std::vector<BigInt> out(len);
  for (std::size_t k = 0; k < len; ++k) out[k] = coefficient(lo + static_cast<std::int64_t>(k));
  return out;
}

namespace {

RationalQL u_power(std::int64_t k) {
  if (k >= 0) return RationalQL(LaurentPoly::monomial(k, 0), static_cast<unsigned>(2 * k), 0);
  return RationalQL(LaurentPoly::monomial(k, 0) * one_minus_q(0).pow(static_cast<unsigned>(-2 * k)));
}

}  // namespace

RationalQL ULaurent::to_q() const {
  RationalQL out;
  for (const auto& [e, c] : terms_) out += u_power(e) * RationalQL(LaurentPoly(c));
  return out;
}

std::string ULaurent::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const BigInt mag = abs(c);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string mono = e == 0 ? "" : (e == 1 ? "u" : "u^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e)));
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      out += mag == 1 ? mono : mag.get_str() + "*" + mono;
    }
  }
  return out;
}

ULaurent to_u_laurent(const RationalQL& f) {
  if (f.den_qx() != 0) throw RingError("u-expansion needs L = 1");
  for (const auto& [e, c] : f.num().terms()) {
    if (e.second != 0) throw RingError("u-expansion needs L = 1");
  }
  // f = sum_k c_k u^k has denominator exactly (1-q)^(2*max k) when max k > 0,
  // and its lowest q-order term is c_min q^(min k). Peel from the bottom.
  ULaurent out;
  RationalQL rest = f;
  while (!rest.is_zero()) {
    const std::int64_t bound = std::max<std::int64_t>(0, (static_cast<std::int64_t>(rest.den_q()) + 1) / 2);
    const std::int64_t m = rest.num().min_q();
    if (m > bound || rest.den_qx() != 0) throw RingError("class is not a Laurent polynomial in q/(1-q)^2");
    const BigInt c = rest.num().coefficient(m, 0);
    out.add_term(m, c);
    rest -= u_power(m) * RationalQL(LaurentPoly(c));
  }
  return out;
}

}  // namespace curvecount
