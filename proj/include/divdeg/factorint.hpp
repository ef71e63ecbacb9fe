#pragma once

// Integers carried together with their prime factorization, plus the
// multiplicative functions (phi, lambda, sigma, divisors) built on top.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "divdeg/bigint.hpp"

namespace divdeg {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

class FactoredInteger {
 public:
  /// The integer 1.
  FactoredInteger() : value_(1) {}

  /// Builds from an explicit factorization. Throws std::invalid_argument when
  /// primes are not strictly increasing, an exponent is zero, or a listed
  /// factor fails the primality test.
  explicit FactoredInteger(std::vector<PrimePower> factors);

  struct Trusted {};
  /// Skips the primality check; callers that already hold certified primes
  /// (sieve output, products of factorized values) use this.
  FactoredInteger(std::vector<PrimePower> factors, Trusted);

  const BigInt& value() const noexcept { return value_; }
  std::span<const PrimePower> factors() const noexcept { return factors_; }
  std::size_t num_distinct_primes() const noexcept { return factors_.size(); }
  bool is_one() const noexcept { return factors_.empty(); }
  std::optional<std::uint64_t> value_u64() const { return to_u64(value_); }

  /// P(n); P(1) = 1.
  std::uint64_t largest_prime() const noexcept { return factors_.empty() ? 1 : factors_.back().prime; }
  /// P^-(n); nullopt stands for +infinity at n = 1.
  std::optional<std::uint64_t> smallest_prime() const noexcept {
    if (factors_.empty()) return std::nullopt;
    return factors_.front().prime;
  }
  /// tau(n), the number of divisors.
  std::uint64_t tau() const noexcept;
  /// Omega(n), prime factors counted with multiplicity.
  unsigned big_omega() const noexcept;
  bool is_squarefree() const noexcept;
  bool is_even() const noexcept { return !factors_.empty() && factors_.front().prime == 2; }
  unsigned exponent_of(std::uint64_t prime) const noexcept;

  FactoredInteger operator*(const FactoredInteger& other) const;
  /// The largest divisor coprime to a (n_(a)).
  FactoredInteger coprime_part(std::uint64_t a) const;

  friend bool operator==(const FactoredInteger& a, const FactoredInteger& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<PrimePower> factors_;
  BigInt value_;
};

/// Factored form, "3^2 * 5 * 29"; "1" for the empty product.
std::string to_string(const FactoredInteger& f);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);
/// Exact below 2^64; above that a strong-probable-prime test on 24 fixed bases.
bool is_prime(const BigInt& n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

/// Trial division below kTrialDivisionBound, then Brent's rho on the cofactor.
/// Throws std::invalid_argument for n < 1.
FactoredInteger factorize(const BigInt& n);
FactoredInteger factorize(std::uint64_t n);

inline constexpr std::uint64_t kTrialDivisionBound = 1U << 16;

template <class Int>
Int phi_of_prime_power(std::uint64_t q, unsigned e) {
  if (e == 0) return Int(1);
  return int_pow(Int(q), e - 1) * Int(q - 1);
}

template <class Int>
Int lambda_of_prime_power(std::uint64_t q, unsigned e) {
  if (e == 0) return Int(1);
  if (q == 2) {
    if (e == 1) return Int(1);
    if (e == 2) return Int(2);
    return int_pow(Int(2), e - 2);
  }
  return phi_of_prime_power<Int>(q, e);
}

template <class Int = BigInt>
Int euler_phi(const FactoredInteger& f) {
  Int result = 1;
  for (const auto& pp : f.factors()) result *= phi_of_prime_power<Int>(pp.prime, pp.exponent);
  return result;
}

template <class Int = BigInt>
Int carmichael_lambda(const FactoredInteger& f) {
  Int result = 1;
  for (const auto& pp : f.factors()) result = int_lcm(result, lambda_of_prime_power<Int>(pp.prime, pp.exponent));
  return result;
}

template <class Int = BigInt>
Int sigma(const FactoredInteger& f) {
  Int result = 1;
  for (const auto& pp : f.factors()) {
    Int term = 1, power = 1;
    for (unsigned i = 0; i < pp.exponent; ++i) {
      power *= Int(pp.prime);
      term += power;
    }
    result *= term;
  }
  return result;
}

/// All divisors in increasing order, each with its factorization.
std::vector<FactoredInteger> divisors(const FactoredInteger& f);

/// Divisor values only; for n that fit a machine word.
std::vector<std::uint64_t> divisor_values_u64(const FactoredInteger& f);

/// Smallest-prime-factor table over [0, limit]. Read-only after construction.
class SmallestPrimeFactorSieve {
 public:
  explicit SmallestPrimeFactorSieve(std::uint32_t limit);

  std::uint32_t limit() const noexcept { return limit_; }
  std::uint32_t smallest_factor(std::uint32_t n) const { return spf_.at(n); }
  bool is_prime(std::uint32_t n) const { return n >= 2 && spf_.at(n) == n; }
  /// Factorization of 1 <= n <= limit; identical to factorize(n).
  FactoredInteger factor(std::uint32_t n) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

/// Primes in [2, limit] by a plain Eratosthenes sieve.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace divdeg
