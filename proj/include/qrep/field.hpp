#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qrep {

/// The ground field: either the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  static Field rationals() noexcept { return Field(0); }
  /// Throws ShapeError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// Accepts "Q" or "F<p>".
  static Field parse(std::string_view name);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime() const noexcept { return p_ != 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint32_t p) noexcept : p_(p) {}
  std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n) noexcept;

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; prime-field elements are canonical residues in [0, p).
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() = default;
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field field) { return Scalar(field, 0L); }
  static Scalar one(Field field) { return Scalar(field, 1L); }
  /// Integers, or "a/b" fractions. Over F_p the fraction is reduced mod p.
  static Scalar parse(Field field, std::string_view text);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Valid only over the rationals.
  const mpq_class& rational() const;
  /// Valid only over a prime field.
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;

  Field field_ = Field::rationals();
  mpq_class q_;
  std::uint32_t r_ = 0;
};

}  // namespace qrep
