#pragma once

#include "frobtool/ring.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace frob {

struct Term {
  Monomial monomial;
  std::uint32_t coef = 0;  // reduced residue, nonzero inside a Polynomial

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over GF(p). Terms are kept strictly descending in the
/// ring's monomial order with nonzero coefficients, so equality is structural.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring& ring, std::int64_t c);
  static Polynomial variable(const Ring& ring, std::size_t index);
  static Polynomial variable(const Ring& ring, const std::string& name);
  static Polynomial term(const Ring& ring, const Monomial& m, std::uint32_t coef = 1);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  const RingSpec& spec() const noexcept { return *ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  std::uint32_t leading_coefficient() const { return terms_.front().coef; }
  FieldElement coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial scaled(std::uint32_t c) const;
  Polynomial times_term(const Monomial& m, std::uint32_t c) const;
  /// Repeated squaring; does not use the Frobenius shortcut.
  Polynomial pow(std::uint64_t n) const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  /// Maximum weighted degree over the terms; nullopt for zero.
  std::optional<long> weighted_degree() const;
  /// All terms share one weighted degree (zero counts as homogeneous).
  bool is_homogeneous() const;

  /// The same polynomial viewed in a ring with identical variables and
  /// weights but possibly a different order.
  Polynomial reordered(const Ring& target) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

 private:
  void require_same_ring(const Polynomial& other) const;
  /// Merge of `a + c*b`, both already sorted.
  static std::vector<Term> merge_add(const RingSpec& spec, std::span<const Term> a,
                                     std::span<const Term> b, std::uint32_t c);

  Ring ring_;
  std::vector<Term> terms_;
};

/// f^(p^e), computed termwise: (sum c_i m_i)^q = sum c_i^q m_i^q in char p.
Polynomial frobenius_pow(const Polynomial& f, unsigned e);

/// Exact quotient h / f, or nullopt when f does not divide h.
std::optional<Polynomial> divide_exact(const Polynomial& h, const Polynomial& f);

/// Canonical text: descending terms, least non-negative residues, explicit
/// `*` and `^`, terms joined by " + ". Zero prints as "0".
std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, const RingSpec& spec);

/// p^e as an integer, throwing on overflow of 64 bits.
std::uint64_t prime_power(std::uint32_t p, unsigned e);

}  // namespace frob
