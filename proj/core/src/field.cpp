#include "mpres/field.hpp"

#include <charconv>
#include <string>

#include "mpres/error.hpp"

namespace mpres {
namespace {

std::uint32_t reduce_mod(std::int64_t value, std::uint32_t p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce_mpz(const mpz_class& value, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw InvalidInput("element is not invertible mod " + std::to_string(p));
  return reduce_mod(t, p);
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_number(p)) {
    throw InvalidInput("field characteristic must be a prime below 2^31, got " +
                       std::to_string(p));
  }
  return Field(Kind::kPrime, p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    auto digits = text.substr(3);
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw InvalidInput("malformed field descriptor '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw InvalidInput("unknown field descriptor '" + std::string(text) +
                     "' (expected Fp:<p> or Q)");
}

std::string Field::to_string() const {
  return is_prime() ? "Fp:" + std::to_string(p_) : "Q";
}

Scalar::Scalar(Field field, std::int64_t value) : field_(field) {
  if (field.is_prime()) {
    value_ = reduce_mod(value, field.characteristic());
  } else {
    value_ = mpq_class(static_cast<long>(value));
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field.is_prime()) {
    const std::uint32_t p = field.characteristic();
    const std::uint32_t num = reduce_mpz(value.get_num(), p);
    const std::uint32_t den = reduce_mpz(value.get_den(), p);
    if (den == 0) throw InvalidInput("denominator vanishes mod " + std::to_string(p));
    value_ = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(num) * inverse_mod(den, p) % p);
  } else {
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
  }
}

Scalar Scalar::parse(Field field, std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw InvalidInput("malformed scalar '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return Scalar(field, q);
}

bool Scalar::is_zero() const {
  if (field_.is_prime()) return std::get<std::uint32_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime()) return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::fp_value() const {
  if (!field_.is_prime()) throw FieldMismatch("fp_value() on a rational scalar");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& Scalar::rational_value() const {
  if (!field_.is_rational()) throw FieldMismatch("rational_value() on an F_p scalar");
  return std::get<mpq_class>(value_);
}

void Scalar::check_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw FieldMismatch("mixed fields " + field_.to_string() + " and " +
                        other.field_.to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_prime()) {
    auto& v = std::get<std::uint32_t>(out.value_);
    if (v != 0) v = field_.characteristic() - v;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero");
  Scalar out = *this;
  if (field_.is_prime()) {
    auto& v = std::get<std::uint32_t>(out.value_);
    v = inverse_mod(v, field_.characteristic());
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_prime()) {
    const std::uint64_t p = field_.characteristic();
    auto& v = std::get<std::uint32_t>(value_);
    v = static_cast<std::uint32_t>((std::uint64_t{v} + std::get<std::uint32_t>(rhs.value_)) % p);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_prime()) {
    const std::uint64_t p = field_.characteristic();
    auto& v = std::get<std::uint32_t>(value_);
    v = static_cast<std::uint32_t>((std::uint64_t{v} + p - std::get<std::uint32_t>(rhs.value_)) % p);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_prime()) {
    const std::uint64_t p = field_.characteristic();
    auto& v = std::get<std::uint32_t>(value_);
    v = static_cast<std::uint32_t>(std::uint64_t{v} * std::get<std::uint32_t>(rhs.value_) % p);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(std::get<std::uint32_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace mpres
