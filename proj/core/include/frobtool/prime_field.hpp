#pragma once

#include <cstdint>
#include <ostream>
#include <string_view>

namespace frob {

/// Deterministic primality test, exact for all 32-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

/// The prime field GF(p) with 2 <= p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  /// Reduces a decimal digit string (optionally signed) without overflow.
  std::uint32_t reduce_decimal(std::string_view digits) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;  // < 2^32 because p < 2^31
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t n) const noexcept;
  /// Multiplicative inverse; `a` must be nonzero.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// A residue in GF(p), always fully reduced.
class FieldElement {
 public:
  FieldElement(const PrimeField& field, std::int64_t value)
      : field_(field), value_(field.reduce(value)) {}

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const {
    return from_raw(field_, field_.add(value_, o.value_));
  }
  FieldElement operator-(const FieldElement& o) const {
    return from_raw(field_, field_.sub(value_, o.value_));
  }
  FieldElement operator-() const { return from_raw(field_, field_.neg(value_)); }
  FieldElement operator*(const FieldElement& o) const {
    return from_raw(field_, field_.mul(value_, o.value_));
  }
  FieldElement operator/(const FieldElement& o) const {
    return from_raw(field_, field_.mul(value_, field_.inv(o.value_)));
  }
  FieldElement pow(std::uint64_t n) const { return from_raw(field_, field_.pow(value_, n)); }
  FieldElement inverse() const { return from_raw(field_, field_.inv(value_)); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
    return os << a.value_;
  }

 private:
  static FieldElement from_raw(const PrimeField& f, std::uint32_t v) {
    FieldElement r(f, 0);
    r.value_ = v;
    return r;
  }

  PrimeField field_;
  std::uint32_t value_;
};

}  // namespace frob
