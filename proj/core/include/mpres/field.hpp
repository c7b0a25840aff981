#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace mpres {

/// Coefficient field: a prime field F_p (p < 2^31) or the rationals.
class Field {
 public:
  enum class Kind : std::uint8_t { kPrime, kRational };

  /// Throws InvalidInput unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(Kind::kRational, 0); }
  /// Parses "Fp:<p>" or "Q".
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::kPrime; }
  bool is_rational() const { return kind_ == Kind::kRational; }
  /// p for F_p, 0 for Q.
  std::uint32_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

/// An element of a Field. F_p values are kept in [0, p); rationals are
/// canonical (reduced, positive denominator) by construction of mpq_class.
class Scalar {
 public:
  Scalar(Field field, std::int64_t value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field field) { return Scalar(field, std::int64_t{0}); }
  static Scalar one(Field field) { return Scalar(field, std::int64_t{1}); }
  /// Parses an integer or "a/b".
  static Scalar parse(Field field, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  std::uint32_t fp_value() const;
  const mpq_class& rational_value() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws InvalidInput on zero

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Decimal integer, or "a/b" for non-integral rationals.
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;

  Field field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

}  // namespace mpres
