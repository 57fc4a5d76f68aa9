#include "frobtool/ring.hpp"

#include "frobtool/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace frob {

namespace {

constexpr long kMaxExponent = std::numeric_limits<Monomial::Exponent>::max();

Monomial::Exponent checked_exponent(long v) {
  if (v < 0) throw InvalidArgument("negative exponent in polynomial monomial");
  if (v > kMaxExponent) throw InvalidArgument("exponent overflow (limit 65535)");
  return static_cast<Monomial::Exponent>(v);
}

}  // namespace

Monomial::Monomial(const std::vector<long>& exponents) {
  if (exponents.size() > kMaxVariables) {
    throw InvalidArgument("too many variables (limit " + std::to_string(kMaxVariables) + ")");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) exps_[i] = checked_exponent(exponents[i]);
}

void Monomial::set(std::size_t i, long value) { exps_.at(i) = checked_exponent(value); }

long Monomial::total_degree() const noexcept {
  long d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = static_cast<Exponent>(other.exps_[i] - exps_[i]);
  }
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    long s = static_cast<long>(exps_[i]) + other.exps_[i];
    if (s > kMaxExponent) throw InvalidArgument("exponent overflow (limit 65535)");
    r.exps_[i] = static_cast<Exponent>(s);
  }
  return r;
}

Monomial Monomial::pow(long n) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = checked_exponent(exps_[i] * n);
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

std::uint64_t Monomial::divmask() const noexcept {
  // Four threshold bits per variable: e >= 1, 2, 4, 8.
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const auto e = exps_[i];
    std::uint64_t bits = (e >= 1 ? 1u : 0u) | (e >= 2 ? 2u : 0u) | (e >= 4 ? 4u : 0u) |
                         (e >= 8 ? 8u : 0u);
    mask |= bits << (4 * i);
  }
  return mask;
}

std::string MonomialOrder::tag() const {
  switch (kind) {
    case OrderKind::graded_reverse_lex:
      return "grevlex";
    case OrderKind::lex:
      return "lex";
    case OrderKind::elimination:
      return "elim(" + std::to_string(block) + ")";
  }
  return "?";
}

RingSpec::RingSpec(PrimeField field, std::vector<std::string> names, std::vector<long> weights,
                   MonomialOrder order)
    : field_(field), names_(std::move(names)), weights_(std::move(weights)), order_(order) {}

Ring RingSpec::make(PrimeField field, std::vector<std::string> variables, std::vector<long> weights,
                    MonomialOrder order) {
  if (variables.empty()) throw InvalidArgument("a ring needs at least one variable");
  if (variables.size() > kMaxVariables) {
    throw InvalidArgument("too many variables (limit " + std::to_string(kMaxVariables) + ")");
  }
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!seen.insert(v).second) throw InvalidArgument("duplicate variable name '" + v + "'");
  }
  if (weights.empty()) weights.assign(variables.size(), 1);
  if (weights.size() != variables.size()) {
    throw InvalidArgument("weights must have one entry per variable");
  }
  for (long w : weights) {
    if (w <= 0) throw InvalidArgument("variable weights must be positive");
  }
  if (order.kind == OrderKind::elimination &&
      (order.block == 0 || order.block >= variables.size())) {
    throw InvalidArgument("elimination block must be between 1 and nvars-1");
  }
  return Ring(new RingSpec(field, std::move(variables), std::move(weights), order));
}

bool RingSpec::standard_grading() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](long w) { return w == 1; });
}

std::optional<std::size_t> RingSpec::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

long RingSpec::weighted_degree(const Monomial& m) const noexcept {
  long d = 0;
  for (std::size_t i = 0; i < names_.size(); ++i) d += weights_[i] * m[i];
  return d;
}

std::strong_ordering RingSpec::grevlex_range(const Monomial& a, const Monomial& b,
                                             std::size_t lo, std::size_t hi,
                                             bool weighted) const noexcept {
  long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    long w = weighted ? weights_[i] : 1;
    da += w * a[i];
    db += w * b[i];
  }
  if (da != db) return da <=> db;
  // Reverse lex: the last differing variable decides, smaller exponent wins.
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering RingSpec::compare(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = names_.size();
  switch (order_.kind) {
    case OrderKind::graded_reverse_lex:
      return grevlex_range(a, b, 0, n, true);
    case OrderKind::lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case OrderKind::elimination: {
      auto head = grevlex_range(a, b, 0, order_.block, false);
      if (head != std::strong_ordering::equal) return head;
      return grevlex_range(a, b, order_.block, n, true);
    }
  }
  return std::strong_ordering::equal;
}

Ring RingSpec::with_order(MonomialOrder order) const {
  if (order.kind == OrderKind::elimination &&
      (order.block == 0 || order.block >= names_.size())) {
    throw InvalidArgument("elimination block must be between 1 and nvars-1");
  }
  return Ring(new RingSpec(field_, names_, weights_, order));
}

Ring RingSpec::with_auxiliary_front(const std::string& name) const {
  if (names_.size() + 1 > kMaxVariables) {
    throw InvalidArgument("too many variables for an auxiliary elimination variable");
  }
  std::vector<std::string> names{name};
  names.insert(names.end(), names_.begin(), names_.end());
  std::vector<long> weights{0};
  weights.insert(weights.end(), weights_.begin(), weights_.end());
  return Ring(new RingSpec(field_, std::move(names), std::move(weights),
                           MonomialOrder::elimination(1)));
}

std::string RingSpec::description() const {
  std::ostringstream os;
  os << "char " << field_.characteristic() << "; vars";
  for (const auto& n : names_) os << ' ' << n;
  os << "; weights";
  for (long w : weights_) os << ' ' << w;
  os << "; order " << order_.tag();
  return os.str();
}

}  // namespace frob
