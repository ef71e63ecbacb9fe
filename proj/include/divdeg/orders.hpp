#pragma once

// Multiplicative orders, the coprime-part order ell*_a(n), and primes p whose
// orders ell*_p(d) reach lambda(d) on every divisor d of n.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "divdeg/factorint.hpp"

namespace divdeg {

/// Raised when a prime search runs past its cap. Says nothing about existence.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSearchCap = 10'000'000;

/// Order of a modulo q^e. Requires q prime, q does not divide a, q^e < 2^64.
/// lambda(q^e) is factored and the order found by descending through its divisors.
std::uint64_t order_mod_prime_power(std::uint64_t a, std::uint64_t q, unsigned e);

/// Same, with the factorization of lambda(q^e) supplied by the caller.
std::uint64_t order_mod_prime_power(std::uint64_t a, std::uint64_t q, unsigned e,
                                    const FactoredInteger& lambda_factored);

/// ell_a(n). Throws std::invalid_argument when a = 0 or gcd(a, n) > 1.
template <class Int = BigInt>
Int mult_order(std::uint64_t a, const FactoredInteger& n) {
  if (a == 0) throw std::invalid_argument("mult_order: a must be positive");
  Int order = 1;
  for (const auto& pp : n.factors()) {
    if (a % pp.prime == 0) throw std::invalid_argument("mult_order: a and n are not coprime");
    order = int_lcm(order, Int(order_mod_prime_power(a, pp.prime, pp.exponent)));
  }
  return order;
}

/// ell*_a(n) = ell_a(n_(a)), the order modulo the part of n coprime to a.
template <class Int = BigInt>
Int ell_star(std::uint64_t a, const FactoredInteger& n) {
  if (a == 0) throw std::invalid_argument("ell_star: a must be positive");
  return mult_order<Int>(a, n.coprime_part(a));
}

/// Smallest a >= 2 generating (Z/q^e Z)^x, for odd prime q.
std::uint64_t primitive_root(std::uint64_t q, unsigned e);

struct WitnessRow {
  std::uint64_t divisor;
  std::uint64_t ell_star;
  std::uint64_t lambda;
};

struct WitnessResult {
  FactoredInteger n;
  std::uint64_t p = 0;
  /// Residue class (mod n) that was scanned for p.
  std::uint64_t residue = 0;
  std::vector<WitnessRow> table;
};

/// A prime p with ell*_p(d) = lambda(d) for every d | n. Built from a primitive
/// root modulo each odd q^e || n and the residue 3 modulo 2^e, glued by CRT;
/// the progression is scanned upward and the first prime taken. The table is
/// checked in full before return. Throws CapExceeded past search_cap.
WitnessResult lambda_witness(const FactoredInteger& n, std::uint64_t search_cap = kDefaultSearchCap);

/// Smallest prime p = 1 (mod n), p <= search_cap.
std::uint64_t one_mod_n_prime(const FactoredInteger& n, std::uint64_t search_cap = kDefaultSearchCap);

/// Table of ell_a(m) for every prime power m <= limit with gcd(a, m) = 1; zero
/// elsewhere. Read-only after construction; the census shares one per prime.
class PrimePowerOrderTable {
 public:
  PrimePowerOrderTable(std::uint64_t a, const SmallestPrimeFactorSieve& sieve);

  std::uint64_t base() const noexcept { return base_; }
  /// ell*_a(q^e); 1 when q divides a.
  std::uint32_t ell_star(std::uint64_t q, unsigned e) const;

 private:
  std::uint64_t base_;
  std::vector<std::uint32_t> order_;
};

}  // namespace divdeg
