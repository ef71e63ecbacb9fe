#include <doctest.h>

#include <numeric>

#include "divdeg/orders.hpp"

using namespace divdeg;

namespace {

std::uint64_t naive_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  std::uint64_t x = a % n, k = 1;
  while (x != 1) {
    x = x * a % n;
    ++k;
  }
  return k;
}

std::uint64_t coprime_part(std::uint64_t n, std::uint64_t a) {
  for (std::uint64_t g = std::gcd(n, a); g > 1; g = std::gcd(n, a)) n /= g;
  return n;
}

}  // namespace

TEST_CASE("mult_order examples") {
  CHECK(mult_order(17, FactoredInteger()) == 1);
  CHECK(mult_order(2, factorize(std::uint64_t{7})) == 3);
  CHECK(mult_order(3, factorize(std::uint64_t{13})) == 3);
  CHECK_THROWS_AS(mult_order(0, factorize(std::uint64_t{7})), std::invalid_argument);
  CHECK_THROWS_AS(mult_order(6, factorize(std::uint64_t{9})), std::invalid_argument);
}

TEST_CASE("ell_star examples") {
  CHECK(ell_star(3, factorize(std::uint64_t{9})) == 1);
  CHECK(ell_star(2, factorize(std::uint64_t{12})) == 2);
  CHECK(ell_star(2, factorize(std::uint64_t{21})) == 6);
  CHECK_THROWS_AS(ell_star(0, factorize(std::uint64_t{21})), std::invalid_argument);
}

TEST_CASE("orders against repeated multiplication") {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    auto f = factorize(n);
    for (std::uint64_t a = 1; a <= 30; ++a) {
      REQUIRE(ell_star<std::uint64_t>(a, f) == naive_order(a, coprime_part(n, a)));
      if (std::gcd(a, n) == 1) REQUIRE(mult_order<std::uint64_t>(a, f) == ell_star<std::uint64_t>(a, f));
    }
  }
}

TEST_CASE("order divides lambda") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    auto f = factorize(n);
    auto lam = carmichael_lambda<std::uint64_t>(f);
    for (std::uint64_t a = 1; a <= 50; ++a)
      if (std::gcd(a, n) == 1) REQUIRE(lam % mult_order<std::uint64_t>(a, f) == 0);
  }
}

TEST_CASE("order modulo large prime powers") {
  const std::uint64_t q = 1000003;
  CHECK(order_mod_prime_power(2, q, 1) == naive_order(2, q));
  CHECK(order_mod_prime_power(2, q, 2) == naive_order(2, q) * q);  // 2 is not a Wieferich base for q
  CHECK_THROWS_AS(order_mod_prime_power(5, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(order_mod_prime_power(2, 3, 41), std::overflow_error);
}

TEST_CASE("primitive roots") {
  CHECK(primitive_root(3, 1) == 2);
  CHECK(primitive_root(7, 1) == 3);
  CHECK(primitive_root(7, 2) == 3);
  CHECK(primitive_root(41, 1) == 6);
  for (std::uint64_t q : {3, 5, 7, 11, 13, 29, 31, 37, 1009}) {
    for (unsigned e = 1; e <= 3; ++e) {
      auto g = primitive_root(q, e);
      auto qe = int_pow<std::uint64_t>(q, e);
      REQUIRE(order_mod_prime_power(g, q, e) == phi_of_prime_power<std::uint64_t>(q, e));
      for (std::uint64_t smaller = 2; smaller < g; ++smaller)
        if (smaller % q != 0) REQUIRE(naive_order(smaller, qe) < phi_of_prime_power<std::uint64_t>(q, e));
    }
  }
}

TEST_CASE("lambda witness examples") {
  for (unsigned e = 1; e <= 12; ++e) CHECK(lambda_witness(FactoredInteger({{2, e}})).p == 3);
  auto w9 = lambda_witness(factorize(std::uint64_t{9}));
  CHECK(w9.p == 2);
  REQUIRE(w9.table.size() == 3);
  CHECK(w9.table[1].divisor == 3);
  CHECK(w9.table[1].ell_star == 2);
  CHECK(w9.table[2].divisor == 9);
  CHECK(w9.table[2].ell_star == 6);
  CHECK(lambda_witness(factorize(std::uint64_t{15})).p == 2);
  CHECK(lambda_witness(FactoredInteger()).p == 2);
}

TEST_CASE("lambda witness tables verify independently") {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    auto w = lambda_witness(factorize(n));
    REQUIRE(is_prime(w.p));
    REQUIRE(w.table.size() == factorize(n).tau());
    for (const auto& row : w.table) {
      REQUIRE(row.ell_star == naive_order(w.p, coprime_part(row.divisor, w.p)));
      REQUIRE(row.lambda == carmichael_lambda<std::uint64_t>(factorize(row.divisor)));
      REQUIRE(row.ell_star == row.lambda);
    }
  }
}

TEST_CASE("lambda witness cap") {
  CHECK_THROWS_AS(lambda_witness(factorize(std::uint64_t{1000}), 50), CapExceeded);
}

TEST_CASE("one mod n primes") {
  CHECK(one_mod_n_prime(FactoredInteger()) == 2);
  CHECK(one_mod_n_prime(factorize(std::uint64_t{7})) == 29);
  CHECK(one_mod_n_prime(factorize(std::uint64_t{5})) == 11);
  for (std::uint64_t n = 2; n <= 300; ++n) {
    auto p = one_mod_n_prime(factorize(n));
    REQUIRE(p % n == 1);
    REQUIRE(is_prime(p));
    for (std::uint64_t smaller = 1 + n; smaller < p; smaller += n) REQUIRE_FALSE(is_prime(smaller));
  }
  CHECK_THROWS_AS(one_mod_n_prime(factorize(std::uint64_t{7}), 28), CapExceeded);
}

TEST_CASE("prime power order table") {
  SmallestPrimeFactorSieve sieve(5000);
  for (std::uint64_t a : {2, 3, 5, 13}) {
    PrimePowerOrderTable table(a, sieve);
    CHECK(table.base() == a);
    for (std::uint64_t q : primes_up_to(5000)) {
      std::uint64_t qe = q;
      for (unsigned e = 1; qe <= 5000; ++e, qe *= q)
        REQUIRE(table.ell_star(q, e) == (a % q == 0 ? 1 : naive_order(a, qe)));
    }
  }
}
