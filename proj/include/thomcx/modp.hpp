#pragma once

/**
 * @file modp.hpp
 * @brief Arithmetic in the prime field F_p for odd primes p.
 *
 * The prime is a runtime value: every scalar carries the prime it lives
 * over, and mixing scalars of different primes is a usage error.
 */

#include <cstdint>
#include <stdexcept>
#include <string>

namespace thomcx {

/// An odd prime p >= 3, verified by trial division at construction.
class Prime {
 public:
  static constexpr std::int64_t max_value = 65521;  // keeps products of residues in 64 bits

  explicit Prime(std::int64_t p) : value_(validate(p)) {}

  constexpr std::uint32_t value() const noexcept { return value_; }
  constexpr int as_int() const noexcept { return static_cast<int>(value_); }

  friend constexpr bool operator==(Prime, Prime) noexcept = default;

  static bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  static std::uint32_t validate(std::int64_t p) {
    if (p == 2)
      throw std::invalid_argument("p = 2 is not supported: only odd primes are allowed");
    if (p > max_value)
      throw std::invalid_argument("prime " + std::to_string(p) + " exceeds the supported bound " +
                                  std::to_string(max_value));
    if (!is_prime(p))
      throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
    return static_cast<std::uint32_t>(p);
  }

  std::uint32_t value_;
};

/// An element of F_p, stored as a residue in [0, p).
class Fp {
 public:
  Fp(std::int64_t v, Prime p) : value_(normalize(v, p.value())), prime_(p) {}

  static Fp zero(Prime p) { return Fp(0, p); }
  static Fp one(Prime p) { return Fp(1, p); }

  std::uint32_t value() const noexcept { return value_; }
  Prime prime() const noexcept { return prime_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Fp operator+(Fp rhs) const { return Fp(raw(value_) + raw(check(rhs).value_), prime_); }
  Fp operator-(Fp rhs) const { return Fp(raw(value_) - raw(check(rhs).value_), prime_); }
  Fp operator*(Fp rhs) const {
    return Fp(static_cast<std::int64_t>((std::uint64_t{value_} * check(rhs).value_) % prime_.value()),
              prime_);
  }
  Fp operator-() const { return Fp(-raw(value_), prime_); }
  Fp operator/(Fp rhs) const { return *this * check(rhs).inverse(); }

  Fp& operator+=(Fp rhs) { return *this = *this + rhs; }
  Fp& operator-=(Fp rhs) { return *this = *this - rhs; }
  Fp& operator*=(Fp rhs) { return *this = *this * rhs; }

  Fp pow(std::uint64_t e) const {
    Fp result = one(prime_);
    Fp base = *this;
    while (e > 0) {
      if (e & 1U) result *= base;
      base *= base;
      e >>= 1U;
    }
    return result;
  }

  /// Multiplicative inverse via Fermat: a^(p-2).
  Fp inverse() const {
    if (is_zero()) throw std::domain_error("0 has no inverse in F_" + std::to_string(prime_.value()));
    return pow(prime_.value() - 2);
  }

  friend bool operator==(Fp a, Fp b) { return a.check(b).value_ == b.value_; }

 private:
  static std::int64_t raw(std::uint32_t v) { return static_cast<std::int64_t>(v); }

  static std::uint32_t normalize(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
  }

  const Fp& check(const Fp& other) const {
    if (!(other.prime_ == prime_))
      throw std::invalid_argument("F_p arithmetic on mismatched primes " +
                                  std::to_string(prime_.value()) + " and " +
                                  std::to_string(other.prime_.value()));
    return other;
  }

  std::uint32_t value_;
  Prime prime_;
};

namespace detail {

// C(n, k) mod p for 0 <= k, n < p.
inline std::uint64_t small_binom_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t j = 0; j < k; ++j) {
    num = num * ((n - j) % p) % p;
    den = den * ((j + 1) % p) % p;
  }
  // den is a product of units since k < p
  std::uint64_t inv = 1, base = den, e = p - 2;
  while (e > 0) {
    if (e & 1U) inv = inv * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return num * inv % p;
}

}  // namespace detail

/// C(n, k) mod p by Lucas' theorem: product of digit-wise binomials in base p.
inline Fp binom_mod_p(std::uint64_t n, std::uint64_t k, Prime p) {
  const std::uint64_t q = p.value();
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    const std::uint64_t nd = n % q, kd = k % q;
    if (kd > nd) return Fp::zero(p);
    result = result * detail::small_binom_mod(nd, kd, q) % q;
    n /= q;
    k /= q;
  }
  return Fp(static_cast<std::int64_t>(result), p);
}

}  // namespace thomcx
