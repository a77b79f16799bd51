#include "ih/ring.hpp"

#include <charconv>

namespace ih {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Residue Residue::inverse() const {
  if (value_ == 0) throw std::domain_error("inverse of zero residue");
  // Extended Euclid on signed 128-bit values.
  __int128 r0 = modulus_, r1 = value_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw std::domain_error("residue not invertible");
  if (s0 < 0) s0 += modulus_;
  return {static_cast<std::uint64_t>(s0), modulus_};
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not prime");
  }
}

PrimeField::value_type PrimeField::from_integer(const Integer& v) const {
  Integer r = v % p_;
  if (r < 0) r += p_;
  return {r.convert_to<std::uint64_t>(), p_};
}

std::optional<PrimeField::value_type> PrimeField::from_rational(
    const Rational& q) const {
  const auto den = from_integer(denominator(q));
  if (den.is_zero()) return std::nullopt;
  return from_integer(numerator(q)) / den;
}

Ring Ring::prime_field(std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not prime");
  }
  return Ring{Kind::PrimeField, p};
}

Ring Ring::parse(const std::string& text) {
  if (text == "Z" || text == "z") return integers();
  if (text == "Q" || text == "q") return rationals();
  std::string digits;
  if (text.rfind("Fp:", 0) == 0) {
    digits = text.substr(3);
  } else if (text.size() > 1 && (text[0] == 'F' || text[0] == 'f')) {
    digits = text.substr(1);
  } else {
    throw std::invalid_argument("unknown ring '" + text +
                                "' (expected Z, Q or Fp:<p>)");
  }
  std::uint64_t p = 0;
  const auto* end = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(digits.data(), end, p);
  if (ec != std::errc{} || ptr != end || digits.empty()) {
    throw std::invalid_argument("bad prime in ring '" + text + "'");
  }
  return prime_field(p);
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::PrimeField:
      break;
  }
  return "Fp:" + std::to_string(p_);
}

}  // namespace ih
