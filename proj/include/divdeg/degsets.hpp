#pragma once

// Degree multisets of the irreducible factors of x^n - 1 (over Z, over F_p,
// and the lambda surrogate), and two independent coverage deciders.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "divdeg/factorint.hpp"
#include "divdeg/orders.hpp"

namespace divdeg {

template <class Int>
struct DegreeCount {
  Int degree;
  Int multiplicity;

  friend bool operator==(const DegreeCount&, const DegreeCount&) = default;
};

/// Multiset of (degree, multiplicity) with distinct degrees in increasing order.
template <class Int>
class BasicDegreeMultiset {
 public:
  BasicDegreeMultiset() = default;

  /// Sorts and merges arbitrary (degree, multiplicity) contributions.
  static BasicDegreeMultiset from_contributions(std::vector<DegreeCount<Int>> parts) {
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.degree < b.degree; });
    BasicDegreeMultiset ms;
    for (auto& part : parts) {
      if (part.degree <= 0 || part.multiplicity <= 0)
        throw std::invalid_argument("degree multiset entries must be positive");
      ms.total_ += part.degree * part.multiplicity;
      if (!ms.entries_.empty() && ms.entries_.back().degree == part.degree)
        ms.entries_.back().multiplicity += part.multiplicity;
      else
        ms.entries_.push_back(std::move(part));
    }
    return ms;
  }

  const std::vector<DegreeCount<Int>>& entries() const noexcept { return entries_; }
  const Int& total() const noexcept { return total_; }

  template <class Other>
  BasicDegreeMultiset<Other> cast() const {
    std::vector<DegreeCount<Other>> parts;
    parts.reserve(entries_.size());
    for (const auto& e : entries_) parts.push_back({Other(e.degree), Other(e.multiplicity)});
    return BasicDegreeMultiset<Other>::from_contributions(std::move(parts));
  }

  friend bool operator==(const BasicDegreeMultiset& a, const BasicDegreeMultiset& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<DegreeCount<Int>> entries_;
  Int total_ = 0;
};

using DegreeMultiset = BasicDegreeMultiset<BigInt>;
using SmallDegreeMultiset = BasicDegreeMultiset<std::uint64_t>;

/// "{1:2, 4:2}".
template <class Int>
std::string to_string(const BasicDegreeMultiset<Int>& ms) {
  std::string out = "{";
  for (std::size_t i = 0; i < ms.entries().size(); ++i) {
    if (i > 0) out += ", ";
    const auto& e = ms.entries()[i];
    out += to_decimal(e.degree) + ":" + to_decimal(e.multiplicity);
  }
  return out + "}";
}

namespace detail {

// One (degree, phi) pair per exponent 0..e of a single prime.
template <class Int>
struct PrimeLadder {
  std::vector<Int> degree;
  std::vector<Int> phi;
};

enum class Combine { kProduct, kLcm };

// Folds the primes in one at a time, keeping (degree, sum of phi(d)) over all
// divisors d built so far that share a degree. Since phi is multiplicative and
// the degree composes by product or lcm, the final multiplicity of a degree g
// is (sum of phi(d) over d with deg(d) = g) / g. The working set stays at the
// number of distinct degrees instead of tau(n).
template <class Int>
BasicDegreeMultiset<Int> build_from_ladders(const std::vector<PrimeLadder<Int>>& ladders, Combine combine) {
  std::vector<DegreeCount<Int>> groups{{Int(1), Int(1)}};  // multiplicity holds the phi sum here
  std::vector<DegreeCount<Int>> next;
  for (const auto& l : ladders) {
    next.clear();
    next.reserve(groups.size() * l.degree.size());
    for (const auto& g : groups) {
      for (std::size_t f = 0; f < l.degree.size(); ++f) {
        Int deg = combine == Combine::kProduct ? Int(g.degree * l.degree[f]) : int_lcm(g.degree, l.degree[f]);
        next.push_back({std::move(deg), g.multiplicity * l.phi[f]});
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.degree < b.degree; });
    groups.clear();
    for (auto& e : next) {
      if (!groups.empty() && groups.back().degree == e.degree)
        groups.back().multiplicity += e.multiplicity;
      else
        groups.push_back(std::move(e));
    }
  }
  for (auto& g : groups) {
    if (g.multiplicity % g.degree != 0) throw std::logic_error("degree does not divide its phi sum");
    g.multiplicity /= g.degree;
  }
  return BasicDegreeMultiset<Int>::from_contributions(std::move(groups));
}

template <class Int, class DegreeOf>
std::vector<PrimeLadder<Int>> make_ladders(const FactoredInteger& n, DegreeOf degree_of) {
  std::vector<PrimeLadder<Int>> ladders;
  ladders.reserve(n.num_distinct_primes());
  for (const auto& pp : n.factors()) {
    PrimeLadder<Int> l;
    for (unsigned f = 0; f <= pp.exponent; ++f) {
      l.degree.push_back(degree_of(pp.prime, f));
      l.phi.push_back(phi_of_prime_power<Int>(pp.prime, f));
    }
    ladders.push_back(std::move(l));
  }
  return ladders;
}

}  // namespace detail

/// One (phi(d), 1) per divisor d of n: the cyclotomic factor degrees over Z.
template <class Int = BigInt>
BasicDegreeMultiset<Int> phi_multiset(const FactoredInteger& n) {
  auto ladders = detail::make_ladders<Int>(n, [](std::uint64_t q, unsigned f) { return phi_of_prime_power<Int>(q, f); });
  return detail::build_from_ladders(ladders, detail::Combine::kProduct);
}

/// (lambda(d), phi(d)/lambda(d)) per divisor d of n.
template <class Int = BigInt>
BasicDegreeMultiset<Int> lambda_multiset(const FactoredInteger& n) {
  auto ladders =
      detail::make_ladders<Int>(n, [](std::uint64_t q, unsigned f) { return lambda_of_prime_power<Int>(q, f); });
  return detail::build_from_ladders(ladders, detail::Combine::kLcm);
}

/// (ell*_p(d), phi(d)/ell*_p(d)) per divisor d of n: factor degrees of x^n - 1 over F_p.
template <class Int = BigInt>
BasicDegreeMultiset<Int> p_multiset(const FactoredInteger& n, std::uint64_t p) {
  auto ladders = detail::make_ladders<Int>(n, [p](std::uint64_t q, unsigned f) {
    if (f == 0 || p % q == 0) return Int(1);
    return Int(order_mod_prime_power(p, q, f));
  });
  return detail::build_from_ladders(ladders, detail::Combine::kLcm);
}

/// Same as p_multiset, reading prime-power orders from a precomputed table.
template <class Int = std::uint64_t>
BasicDegreeMultiset<Int> p_multiset(const FactoredInteger& n, const PrimePowerOrderTable& orders) {
  auto ladders = detail::make_ladders<Int>(n, [&orders](std::uint64_t q, unsigned f) {
    return Int(orders.ell_star(q, f));
  });
  return detail::build_from_ladders(ladders, detail::Combine::kLcm);
}

/// Complete-sequence prefix walk: true iff every integer in [1, total] is a
/// bounded subset sum. Fails as soon as a degree exceeds the running reach + 1.
template <class Int>
bool covers_all_fast(const BasicDegreeMultiset<Int>& ms) {
  Int reach = 0;
  for (const auto& e : ms.entries()) {
    if (e.degree > reach + 1) return false;
    reach += e.degree * e.multiplicity;
  }
  return true;
}

class OracleBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultOracleBound = 1'000'000;

/// Bit vector of reachable sums over [0, size).
class ReachabilityBitset {
 public:
  explicit ReachabilityBitset(std::uint64_t size) : size_(size), words_((size + 63) / 64, 0) {}

  void set(std::uint64_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::uint64_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::uint64_t size() const noexcept { return size_; }

  /// this |= this << shift, bits past size() dropped.
  void or_shifted(std::uint64_t shift);
  /// True iff bits [lo, hi] are all set.
  bool all_set(std::uint64_t lo, std::uint64_t hi) const;

 private:
  std::uint64_t size_;
  std::vector<std::uint64_t> words_;
};

bool covers_all_bitset_u64(const std::vector<DegreeCount<std::uint64_t>>& entries, std::uint64_t total,
                           std::uint64_t bound);

/// Exact reachability oracle: shift-OR per entry with the multiplicity split
/// into power-of-two chunks. Throws OracleBoundExceeded when total > bound.
template <class Int>
bool covers_all_bitset(const BasicDegreeMultiset<Int>& ms, std::uint64_t bound = kDefaultOracleBound) {
  if (ms.total() > Int(bound)) throw OracleBoundExceeded("oracle bound exceeded: total " + to_decimal(ms.total()));
  std::vector<DegreeCount<std::uint64_t>> entries;
  for (const auto& e : ms.entries())
    entries.push_back({static_cast<std::uint64_t>(e.degree), static_cast<std::uint64_t>(e.multiplicity)});
  return covers_all_bitset_u64(entries, static_cast<std::uint64_t>(ms.total()), bound);
}

}  // namespace divdeg
