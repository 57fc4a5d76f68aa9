#pragma once

#include "frobtool/prime_field.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace frob {

/// Largest supported number of ring variables, auxiliary variables included.
inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with fixed inline capacity. Slots past the ring's variable
/// count stay zero, so equality and divisibility need no variable count.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  /// Throws InvalidArgument when there are too many entries or an entry is
  /// negative or too large.
  explicit Monomial(const std::vector<long>& exponents);

  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, long value);

  long total_degree() const noexcept;
  bool is_one() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  /// `other / *this`; caller guarantees divisibility.
  Monomial quotient_of(const Monomial& other) const noexcept;

  Monomial operator*(const Monomial& other) const;
  Monomial pow(long n) const;
  Monomial lcm(const Monomial& other) const noexcept;
  Monomial gcd(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  /// Divisibility fingerprint: if a | b then (mask(a) & ~mask(b)) == 0.
  std::uint64_t divmask() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain lexicographic comparison of the raw exponent arrays, for use as a
  /// map key only; it is not a monomial order of any ring.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::array<Exponent, kMaxVariables> exps_{};
};

enum class OrderKind { graded_reverse_lex, lex, elimination };

/// A monomial order tag. `elimination` with block k makes any monomial that
/// involves one of the first k variables larger than every monomial in the
/// remaining ones; inside each block graded reverse lex is used.
struct MonomialOrder {
  OrderKind kind = OrderKind::graded_reverse_lex;
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {OrderKind::elimination, k}; }

  /// "grevlex", "lex" or "elim(k)".
  std::string tag() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class RingSpec;
using Ring = std::shared_ptr<const RingSpec>;

/// GF(p)[variables] with a weighted N-grading and a monomial order.
class RingSpec {
 public:
  /// Weights default to all 1; user-declared weights must be positive.
  static Ring make(PrimeField field, std::vector<std::string> variables,
                   std::vector<long> weights = {},
                   MonomialOrder order = MonomialOrder::grevlex());

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<long>& weights() const noexcept { return weights_; }
  const MonomialOrder& order() const noexcept { return order_; }
  bool standard_grading() const noexcept;

  std::optional<std::size_t> index_of(const std::string& name) const;

  long weighted_degree(const Monomial& m) const noexcept;
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a, b) == std::strong_ordering::greater;
  }

  /// Same variables and weights under another order.
  Ring with_order(MonomialOrder order) const;
  /// Prepends an auxiliary variable of weight 0 and switches to the
  /// elimination order for it. Polynomials of this ring embed by shifting
  /// exponents one slot to the right.
  Ring with_auxiliary_front(const std::string& name) const;

  /// Canonical one-line description, used in cache keys and digests.
  std::string description() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.weights_ == b.weights_ &&
           a.order_ == b.order_;
  }

 private:
  RingSpec(PrimeField field, std::vector<std::string> names, std::vector<long> weights,
           MonomialOrder order);

  std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                     std::size_t hi, bool weighted) const noexcept;

  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<long> weights_;
  MonomialOrder order_;
};

/// Pointer identity or structural equality.
inline bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace frob
