#include "divdeg/orders.hpp"

#include <limits>
#include <string>

namespace divdeg {

namespace {

std::uint64_t checked_prime_power(std::uint64_t q, unsigned e) {
  std::uint64_t m = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (m > std::numeric_limits<std::uint64_t>::max() / q)
      throw std::overflow_error("prime power exceeds 64 bits: " + std::to_string(q) + "^" + std::to_string(e));
    m *= q;
  }
  return m;
}

FactoredInteger lambda_factorization(std::uint64_t q, unsigned e) {
  if (q == 2) {
    const unsigned k = e <= 1 ? 0 : (e == 2 ? 1 : e - 2);
    if (k == 0) return FactoredInteger();
    return FactoredInteger({{2, k}}, FactoredInteger::Trusted{});
  }
  FactoredInteger f = factorize(q - 1);
  if (e > 1) f = f * FactoredInteger({{q, e - 1}}, FactoredInteger::Trusted{});
  return f;
}

std::uint64_t descend_order(std::uint64_t a, std::uint64_t m, std::uint64_t lambda, const FactoredInteger& lf) {
  std::uint64_t order = lambda;
  for (const auto& pp : lf.factors()) {
    for (unsigned i = 0; i < pp.exponent; ++i) {
      if (powmod(a, order / pp.prime, m) != 1) break;
      order /= pp.prime;
    }
  }
  return order;
}

}  // namespace

std::uint64_t order_mod_prime_power(std::uint64_t a, std::uint64_t q, unsigned e, const FactoredInteger& lambda_factored) {
  if (a % q == 0) throw std::invalid_argument("order_mod_prime_power: base shares the prime");
  const std::uint64_t m = checked_prime_power(q, e);
  if (m == 1) return 1;
  const auto lambda = lambda_of_prime_power<std::uint64_t>(q, e);
  return descend_order(a, m, lambda, lambda_factored);
}

std::uint64_t order_mod_prime_power(std::uint64_t a, std::uint64_t q, unsigned e) {
  return order_mod_prime_power(a, q, e, lambda_factorization(q, e));
}

std::uint64_t primitive_root(std::uint64_t q, unsigned e) {
  if (q == 2) throw std::invalid_argument("primitive_root: q must be odd");
  const std::uint64_t m = checked_prime_power(q, e);
  const auto phi = phi_of_prime_power<std::uint64_t>(q, e);
  const FactoredInteger pf = lambda_factorization(q, e);
  for (std::uint64_t a = 2; a < m; ++a) {
    if (a % q == 0) continue;
    bool generator = true;
    for (const auto& pp : pf.factors()) {
      if (powmod(a, phi / pp.prime, m) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return a;
  }
  throw std::logic_error("no primitive root found");
}

namespace {

// x = r1 (mod m1), x = r2 (mod m2), coprime moduli; result in [0, m1 m2).
std::uint64_t crt_pair(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2, std::uint64_t m2) {
  // Extended Euclid for m1^{-1} mod m2 in signed 128-bit.
  __int128 old_r = static_cast<__int128>(m1 % m2), r = m2;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 quot = old_r / r;
    __int128 t = old_r - quot * r;
    old_r = r;
    r = t;
    t = old_s - quot * s;
    old_s = s;
    s = t;
  }
  __int128 inv = old_s % static_cast<__int128>(m2);
  if (inv < 0) inv += m2;
  const __int128 diff = (static_cast<__int128>(r2) - static_cast<__int128>(r1 % m2)) % m2;
  __int128 k = (diff < 0 ? diff + m2 : diff) * inv % m2;
  return static_cast<std::uint64_t>(r1 + k * m1);
}

std::vector<WitnessRow> witness_table(const FactoredInteger& n, std::uint64_t p) {
  std::vector<WitnessRow> rows;
  for (const auto& d : divisors(n)) {
    rows.push_back({*d.value_u64(), ell_star<std::uint64_t>(p, d), carmichael_lambda<std::uint64_t>(d)});
  }
  return rows;
}

}  // namespace

WitnessResult lambda_witness(const FactoredInteger& n, std::uint64_t search_cap) {
  const auto modulus = n.value_u64();
  if (!modulus || *modulus > std::numeric_limits<std::uint64_t>::max() / 2)
    throw std::invalid_argument("lambda_witness: n must fit in 63 bits");

  std::uint64_t residue = 0, built = 1;
  for (const auto& pp : n.factors()) {
    const std::uint64_t m = checked_prime_power(pp.prime, pp.exponent);
    const std::uint64_t a = pp.prime == 2 ? 3 % m : primitive_root(pp.prime, pp.exponent);
    residue = crt_pair(residue, built, a, m);
    built *= m;
  }

  WitnessResult result{n, 0, residue, {}};
  // n = 1 imposes no congruence, so every prime is in the progression.
  const std::uint64_t step = *modulus == 1 ? 1 : *modulus;
  for (std::uint64_t candidate = *modulus == 1 ? 2 : residue; candidate <= search_cap; candidate += step) {
    if (!is_prime(candidate)) continue;
    result.p = candidate;
    result.table = witness_table(n, candidate);
    for (const auto& row : result.table)
      if (row.ell_star != row.lambda)
        throw std::logic_error("lambda_witness: table check failed at d = " + std::to_string(row.divisor));
    return result;
  }
  throw CapExceeded("lambda_witness: no prime in " + std::to_string(residue) + " mod " + std::to_string(*modulus) +
                    " up to the search cap " + std::to_string(search_cap));
}

std::uint64_t one_mod_n_prime(const FactoredInteger& n, std::uint64_t search_cap) {
  const auto modulus = n.value_u64();
  if (!modulus) throw std::invalid_argument("one_mod_n_prime: n must fit in 64 bits");
  for (std::uint64_t candidate = 1 + *modulus; candidate <= search_cap; candidate += *modulus) {
    if (is_prime(candidate)) return candidate;
    if (candidate > std::numeric_limits<std::uint64_t>::max() - *modulus) break;
  }
  throw CapExceeded("one_mod_n_prime: no prime = 1 mod " + to_decimal(n.value()) + " up to the search cap " +
                    std::to_string(search_cap));
}

PrimePowerOrderTable::PrimePowerOrderTable(std::uint64_t a, const SmallestPrimeFactorSieve& sieve)
    : base_(a), order_(sieve.limit() + 1, 0) {
  if (a == 0) throw std::invalid_argument("PrimePowerOrderTable: base must be positive");
  const std::uint64_t limit = sieve.limit();
  for (std::uint64_t q = 2; q <= limit; ++q) {
    if (!sieve.is_prime(static_cast<std::uint32_t>(q)) || a % q == 0) continue;
    std::uint64_t m = q;
    for (unsigned e = 1; m <= limit; ++e) {
      const auto lambda = lambda_of_prime_power<std::uint64_t>(q, e);
      const FactoredInteger lf = sieve.factor(static_cast<std::uint32_t>(lambda));
      order_[m] = static_cast<std::uint32_t>(descend_order(a, m, lambda, lf));
      if (m > limit / q) break;
      m *= q;
    }
  }
}

std::uint32_t PrimePowerOrderTable::ell_star(std::uint64_t q, unsigned e) const {
  if (base_ % q == 0 || e == 0) return 1;
  std::uint64_t m = 1;
  for (unsigned i = 0; i < e; ++i) m *= q;
  if (m >= order_.size()) throw std::out_of_range("PrimePowerOrderTable: prime power beyond table");
  return order_[m];
}

}  // namespace divdeg
