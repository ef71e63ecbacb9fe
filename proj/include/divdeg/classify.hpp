#pragma once

// Membership predicates for the practical-number families.
//
// Every predicate takes a FactoredInteger and is templated on the integer
// type used for the degree arithmetic. BigInt is always safe; std::uint64_t is
// valid whenever the integer itself fits in 62 bits (every partial sum is
// bounded by sigma(n) < 4n there) and is what the census sweeps use.

#include <cstdint>
#include <utility>
#include <vector>

#include "divdeg/degsets.hpp"
#include "divdeg/factorint.hpp"
#include "divdeg/orders.hpp"

namespace divdeg {

/// Stewart's criterion: 2 | n and each next prime p_{i+1} <= sigma(prefix) + 1.
template <class Int = BigInt>
bool is_practical(const FactoredInteger& n) {
  Int prefix_sigma = 1;
  for (const auto& pp : n.factors()) {
    if (Int(pp.prime) > prefix_sigma + 1) return false;
    Int term = 1, power = 1;
    for (unsigned i = 0; i < pp.exponent; ++i) {
      power *= Int(pp.prime);
      term += power;
    }
    prefix_sigma *= term;
  }
  return true;
}

template <class Int = BigInt>
bool is_phi_practical(const FactoredInteger& n) {
  return covers_all_fast(phi_multiset<Int>(n));
}

template <class Int = BigInt>
bool is_lambda_practical(const FactoredInteger& n) {
  return covers_all_fast(lambda_multiset<Int>(n));
}

template <class Int = BigInt>
bool is_p_practical(const FactoredInteger& n, std::uint64_t p) {
  return covers_all_fast(p_multiset<Int>(n, p));
}

/// With m_0 = 1 and m_i the ascending prime-power prefix products, every next
/// prime satisfies p_{i+1} <= m_i + 2.
template <class Int = BigInt>
bool is_weakly_phi_practical(const FactoredInteger& n) {
  Int prefix = 1;
  for (const auto& pp : n.factors()) {
    if (Int(pp.prime) > prefix + 2) return false;
    prefix *= int_pow(Int(pp.prime), pp.exponent);
  }
  return true;
}

/// Squarefree with every consecutive divisor ratio d_{i+1}/d_i <= 2.
bool is_2_dense(const FactoredInteger& n);

/// 2-dense, and d_{i+1}/d_i < 2 for the interior indices 1 < i < tau(n) - 1
/// (1-based), so the first ratio and the last two are exempt.
bool is_strictly_2_dense(const FactoredInteger& n);

struct ClassificationRecord {
  FactoredInteger n;
  bool practical = false;
  bool phi_practical = false;
  bool lambda_practical = false;
  bool weakly_phi_practical = false;
  bool two_dense = false;
  bool strictly_two_dense = false;
  std::vector<std::pair<std::uint64_t, bool>> p_practical;

  friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

/// Raised when a record contradicts one of the family inclusions; that is a
/// defect in the predicates, never a property of the input.
class InclusionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// All seven verdicts plus one p-practical flag per requested prime. The
/// inclusion chain is checked before returning.
ClassificationRecord classify(const FactoredInteger& n, const std::vector<std::uint64_t>& primes);

}  // namespace divdeg
