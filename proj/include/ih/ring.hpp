#pragma once

// Exact scalar types and the ring policies the linear algebra is generic over.
//
// Every algorithm in ih::linalg is parameterised by a policy object `R` with
//   using value_type;
//   static constexpr bool is_field;
//   value_type zero() const, one() const;
//   value_type from_integer(const Integer&) const;
//   std::optional<value_type> from_rational(const Rational&) const;
//   bool is_unit(const value_type&) const;
// Elements support +, -, * and (for fields) / with their natural meaning.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace ih {

using Integer = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Residue modulo a prime. The modulus travels with the value so that the
/// arithmetic operators stay free functions.
class Residue {
public:
  Residue() = default;
  Residue(std::uint64_t value, std::uint64_t modulus)
      : value_(modulus == 0 ? 0 : value % modulus), modulus_(modulus) {}

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  Residue inverse() const;

  friend Residue operator+(Residue a, Residue b) {
    const auto m = common_modulus(a, b);
    return {(a.value_ + b.value_) % m, m};
  }
  friend Residue operator-(Residue a, Residue b) {
    const auto m = common_modulus(a, b);
    return {(a.value_ + m - b.value_) % m, m};
  }
  friend Residue operator-(Residue a) { return Residue{0, a.modulus_} - a; }
  friend Residue operator*(Residue a, Residue b) {
    const auto m = common_modulus(a, b);
    return {static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(a.value_) * b.value_) % m),
            m};
  }
  friend Residue operator/(Residue a, Residue b) { return a * b.inverse(); }
  Residue& operator+=(Residue b) { return *this = *this + b; }
  Residue& operator-=(Residue b) { return *this = *this - b; }
  Residue& operator*=(Residue b) { return *this = *this * b; }
  friend bool operator==(Residue a, Residue b) { return a.value_ == b.value_; }
  friend bool operator!=(Residue a, Residue b) { return !(a == b); }

private:
  static std::uint64_t common_modulus(Residue a, Residue b) {
    if (a.modulus_ != b.modulus_) {
      throw std::logic_error("mixed moduli in residue arithmetic");
    }
    return a.modulus_;
  }

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t p);

struct IntegerRing {
  using value_type = Integer;
  static constexpr bool is_field = false;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const Integer& v) const { return v; }
  std::optional<value_type> from_rational(const Rational& q) const {
    if (denominator(q) != 1) return std::nullopt;
    return numerator(q);
  }
  bool is_unit(const value_type& v) const { return v == 1 || v == -1; }
  bool is_zero(const value_type& v) const { return v.is_zero(); }
  std::string name() const { return "Z"; }
};

struct RationalField {
  using value_type = Rational;
  static constexpr bool is_field = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const Integer& v) const { return Rational(v); }
  std::optional<value_type> from_rational(const Rational& q) const { return q; }
  bool is_unit(const value_type& v) const { return !v.is_zero(); }
  bool is_zero(const value_type& v) const { return v.is_zero(); }
  value_type inverse(const value_type& v) const { return 1 / v; }
  std::string name() const { return "Q"; }
};

struct PrimeField {
  using value_type = Residue;
  static constexpr bool is_field = true;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  value_type zero() const { return {0, p_}; }
  value_type one() const { return {1, p_}; }
  value_type from_integer(const Integer& v) const;
  std::optional<value_type> from_rational(const Rational& q) const;
  bool is_unit(const value_type& v) const { return !v.is_zero(); }
  bool is_zero(const value_type& v) const { return v.is_zero(); }
  value_type inverse(const value_type& v) const { return v.inverse(); }
  std::string name() const { return "Fp:" + std::to_string(p_); }

private:
  std::uint64_t p_;
};

/// Runtime description of a coefficient ring, as read from the command line
/// or a coefficient file.
class Ring {
public:
  enum class Kind { Integers, Rationals, PrimeField };

  static Ring integers() { return Ring{Kind::Integers, 0}; }
  static Ring rationals() { return Ring{Kind::Rationals, 0}; }
  static Ring prime_field(std::uint64_t p);
  /// Accepts "Z", "Q" and "Fp:<p>" (also "F<p>", e.g. "F2").
  static Ring parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  std::string name() const;

  friend bool operator==(const Ring&, const Ring&) = default;

  /// Calls `f` with the policy object matching this ring.
  template <class F>
  decltype(auto) visit(F&& f) const {
    switch (kind_) {
      case Kind::Integers:
        return f(IntegerRing{});
      case Kind::Rationals:
        return f(RationalField{});
      case Kind::PrimeField:
        break;
    }
    return f(PrimeField{p_});
  }

private:
  Ring(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

}  // namespace ih
