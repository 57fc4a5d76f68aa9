#include "frobtool/prime_field.hpp"

#include "frobtool/errors.hpp"

#include <array>

namespace frob {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t n, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (n != 0) {
    if (n & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    n >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are sufficient for every n < 3.3 * 10^24.
  constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t a : witnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InvalidArgument("characteristic must be prime (2 <= p < 2^31), got " +
                          std::to_string(p));
  }
}

std::uint32_t PrimeField::reduce_decimal(std::string_view digits) const {
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw InvalidArgument("empty integer literal");
  std::uint64_t acc = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw InvalidArgument("invalid digit in integer literal");
    acc = (acc * 10 + static_cast<std::uint64_t>(c - '0')) % p_;
  }
  auto r = static_cast<std::uint32_t>(acc);
  return negative ? neg(r) : r;
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t n) const noexcept {
  return static_cast<std::uint32_t>(pow_mod(a, n, p_));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw InvalidArgument("division by zero in GF(p)");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

}  // namespace frob
