#include <doctest.h>

#include <map>
#include <numeric>

#include "divdeg/degsets.hpp"

using namespace divdeg;

namespace {

using Entries = std::vector<DegreeCount<std::uint64_t>>;

std::uint64_t naive_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  std::uint64_t x = a % n, k = 1;
  while (x != 1) {
    x = x * a % n;
    ++k;
  }
  return k;
}

std::uint64_t naive_phi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

// Builds a multiset by walking every divisor, with the degree function given as a lambda.
template <class DegreeOf>
SmallDegreeMultiset by_divisors(std::uint64_t n, DegreeOf degree_of) {
  std::map<std::uint64_t, std::uint64_t> acc;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    auto phi = naive_phi(d);
    auto g = degree_of(d, phi);
    acc[g] += phi / g;
  }
  Entries parts;
  for (auto [g, c] : acc) parts.push_back({g, c});
  return SmallDegreeMultiset::from_contributions(parts);
}

// Bounded knapsack by unrolled 0/1 items; no binary splitting, no shifting.
bool naive_covers(const SmallDegreeMultiset& ms) {
  std::vector<char> reach(ms.total() + 1, 0);
  reach[0] = 1;
  for (const auto& e : ms.entries())
    for (std::uint64_t c = 0; c < e.multiplicity; ++c)
      for (std::uint64_t s = ms.total(); s >= e.degree; --s)
        if (reach[s - e.degree]) reach[s] = 1;
  for (std::uint64_t s = 1; s <= ms.total(); ++s)
    if (!reach[s]) return false;
  return true;
}

SmallDegreeMultiset ms(Entries e) { return SmallDegreeMultiset::from_contributions(std::move(e)); }

}  // namespace

TEST_CASE("phi multiset examples") {
  CHECK(phi_multiset<std::uint64_t>(FactoredInteger()) == ms({{1, 1}}));
  CHECK(phi_multiset<std::uint64_t>(factorize(std::uint64_t{10})) == ms({{1, 2}, {4, 2}}));
  CHECK(phi_multiset<std::uint64_t>(factorize(std::uint64_t{12})) == ms({{1, 2}, {2, 3}, {4, 1}}));
  CHECK(to_string(phi_multiset(factorize(std::uint64_t{10}))) == "{1:2, 4:2}");
}

TEST_CASE("lambda multiset examples") {
  CHECK(lambda_multiset<std::uint64_t>(FactoredInteger()) == ms({{1, 1}}));
  CHECK(lambda_multiset<std::uint64_t>(factorize(std::uint64_t{9})) == ms({{1, 1}, {2, 1}, {6, 1}}));
  CHECK(lambda_multiset<std::uint64_t>(factorize(std::uint64_t{45})) ==
        ms({{1, 1}, {2, 1}, {4, 3}, {6, 1}, {12, 2}}));
}

TEST_CASE("p multiset examples") {
  for (std::uint64_t p : {2, 3, 5, 7})
    for (unsigned k = 1; k <= 8; ++k)
      CHECK(p_multiset<std::uint64_t>(FactoredInteger({{p, k}}), p) == ms({{1, int_pow<std::uint64_t>(p, k)}}));
  CHECK(p_multiset<std::uint64_t>(factorize(std::uint64_t{21}), 2) == ms({{1, 1}, {2, 1}, {3, 2}, {6, 2}}));
  CHECK(p_multiset<std::uint64_t>(factorize(std::uint64_t{5}), 19) == ms({{1, 1}, {2, 2}}));
  CHECK(p_multiset<std::uint64_t>(factorize(std::uint64_t{26}), 3) == ms({{1, 2}, {3, 8}}));
}

TEST_CASE("builders match divisor enumeration") {
  SmallestPrimeFactorSieve sieve(3000);
  PrimePowerOrderTable table2(2, sieve);
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    auto f = sieve.factor(static_cast<std::uint32_t>(n));
    REQUIRE(phi_multiset<std::uint64_t>(f) == by_divisors(n, [](std::uint64_t, std::uint64_t phi) { return phi; }));
    REQUIRE(lambda_multiset<std::uint64_t>(f) == by_divisors(n, [](std::uint64_t d, std::uint64_t) {
              std::uint64_t lam = 1;
              for (std::uint64_t a = 1; a <= d; ++a)
                if (std::gcd(a, d) == 1) lam = std::lcm(lam, naive_order(a, d));
              return lam;
            }));
    for (std::uint64_t p : {2, 3, 13}) {
      auto expected = by_divisors(n, [p](std::uint64_t d, std::uint64_t) {
        while (std::gcd(d, p) > 1) d /= p;
        return naive_order(p, d);
      });
      REQUIRE(p_multiset<std::uint64_t>(f, p) == expected);
      if (p == 2) REQUIRE(p_multiset<std::uint64_t>(f, table2) == expected);
    }
  }
}

TEST_CASE("totals equal n and degrees dominate pointwise") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    auto f = factorize(n);
    REQUIRE(phi_multiset<std::uint64_t>(f).total() == n);
    REQUIRE(lambda_multiset<std::uint64_t>(f).total() == n);
    for (std::uint64_t p : {2, 3, 5, 7, 13}) REQUIRE(p_multiset<std::uint64_t>(f, p).total() == n);
  }
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    for (const auto& d : divisors(factorize(n))) {
      auto phi = euler_phi<std::uint64_t>(d);
      auto lam = carmichael_lambda<std::uint64_t>(d);
      REQUIRE(lam <= phi);
      for (std::uint64_t p : {2, 3, 5, 7, 13}) REQUIRE(ell_star<std::uint64_t>(p, d) <= lam);
    }
  }
}

TEST_CASE("coverage examples") {
  CHECK(covers_all_fast(ms({{1, 17}})));
  CHECK(covers_all_bitset(ms({{1, 17}})));
  CHECK_FALSE(covers_all_fast(phi_multiset(factorize(std::uint64_t{10}))));
  CHECK_FALSE(covers_all_bitset(phi_multiset(factorize(std::uint64_t{10}))));
  CHECK(covers_all_fast(lambda_multiset(factorize(std::uint64_t{45}))));
  CHECK(covers_all_bitset(ms({{1, 1}})));
  CHECK_FALSE(covers_all_bitset(ms({{1, 1}, {2, 1}, {6, 1}})));
  CHECK(covers_all_bitset(p_multiset(factorize(std::uint64_t{26}), 3)));
  CHECK_THROWS_AS(covers_all_bitset(ms({{1, 2000}}), 1000), OracleBoundExceeded);
  CHECK_THROWS_AS(ms({{0, 1}}), std::invalid_argument);
}

TEST_CASE("bitset oracle matches a naive knapsack") {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    auto f = factorize(n);
    for (const auto& m : {phi_multiset<std::uint64_t>(f), lambda_multiset<std::uint64_t>(f),
                          p_multiset<std::uint64_t>(f, 2), p_multiset<std::uint64_t>(f, 3)})
      REQUIRE(covers_all_bitset(m) == naive_covers(m));
  }
  // Word-boundary shapes with a gap placed right past each boundary.
  for (std::uint64_t total : {63, 64, 65, 127, 128, 129, 191, 1000}) {
    REQUIRE(covers_all_bitset(ms({{1, total}})));
    auto gapped = ms({{1, 1}, {3, total / 3}});
    REQUIRE(covers_all_bitset(gapped) == naive_covers(gapped));
  }
}

TEST_CASE("fast criterion equals bitset oracle for all builders up to 1e4") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    auto f = factorize(n);
    for (const auto& m : {phi_multiset<std::uint64_t>(f), lambda_multiset<std::uint64_t>(f),
                          p_multiset<std::uint64_t>(f, 2), p_multiset<std::uint64_t>(f, 5)})
      REQUIRE(covers_all_fast(m) == covers_all_bitset(m));
  }
}

TEST_CASE("lambda coverage implies p coverage") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    auto f = factorize(n);
    if (!covers_all_fast(lambda_multiset<std::uint64_t>(f))) continue;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 101}) REQUIRE(covers_all_fast(p_multiset<std::uint64_t>(f, p)));
  }
}

TEST_CASE("big integer multisets") {
  FactoredInteger n({{3, 2}, {5, 1}, {17, 1}, {257, 1}, {65537, 1}, {2147483647, 1}});
  auto phi = phi_multiset(n);
  CHECK(phi.total() == n.value());
  CHECK(lambda_multiset(n).total() == n.value());
  CHECK(p_multiset(n, 2).total() == n.value());
  CHECK(phi_multiset<std::uint64_t>(factorize(std::uint64_t{999999})).cast<BigInt>() ==
        phi_multiset(factorize(std::uint64_t{999999})));
}
