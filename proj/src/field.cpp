#include "qrep/field.hpp"

#include <charconv>

#include "qrep/error.hpp"

namespace qrep {

namespace {

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

bool is_prime_number(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31U) || !is_prime_number(p)) {
    throw ShapeError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view name) {
  if (name == "Q" || name == "QQ") return rationals();
  if (name.size() >= 2 && name.front() == 'F') {
    std::uint64_t p = 0;
    auto body = name.substr(1);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size()) return prime(p);
  }
  throw ShapeError("unknown field tag '" + std::string(name) + "'");
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(p_);
}

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field.is_rational()) {
    if (value != 0) q_ = value;
  } else {
    const auto p = static_cast<long>(field.characteristic());
    r_ = static_cast<std::uint32_t>(((value % p) + p) % p);
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  const std::uint32_t p = field.characteristic();
  const std::uint32_t den = reduce(value.get_den(), p);
  if (den == 0) {
    throw ShapeError("denominator of " + value.get_str() + " vanishes in " + field.name());
  }
  r_ = static_cast<std::uint32_t>(std::uint64_t{reduce(value.get_num(), p)} * inverse_mod(den, p) % p);
}

Scalar Scalar::parse(Field field, std::string_view text) {
  const auto valid = !text.empty() && text.find_first_not_of("+-0123456789/") == std::string_view::npos;
  mpq_class value;
  if (!valid || value.set_str(std::string(text), 10) != 0 || value.get_den() == 0) {
    throw ShapeError("malformed scalar '" + std::string(text) + "'");
  }
  value.canonicalize();
  return Scalar(field, value);
}

bool Scalar::is_zero() const noexcept {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const noexcept {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw ShapeError("scalar is not rational");
  return q_;
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) throw ShapeError("scalar is not a residue");
  return r_;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw ShapeError("scalars over " + field_.name() + " and " + other.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational()) {
    out.q_ = -q_;
  } else if (r_ != 0) {
    out.r_ = field_.characteristic() - r_;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (field_.is_rational()) {
    q_ += other.q_;
  } else {
    r_ = static_cast<std::uint32_t>((std::uint64_t{r_} + other.r_) % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (field_.is_rational()) {
    q_ *= other.q_;
  } else {
    r_ = static_cast<std::uint32_t>(std::uint64_t{r_} * other.r_ % field_.characteristic());
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ShapeError("division by zero");
  Scalar out = *this;
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
  } else {
    out.r_ = inverse_mod(r_, field_.characteristic());
  }
  return out;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace qrep
