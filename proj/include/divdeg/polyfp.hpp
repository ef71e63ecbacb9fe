#pragma once

// Dense polynomials over F_p and a distinct-degree factorization of x^n - 1.
// This is the independent checker for the order-based degree multisets, so it
// uses nothing from the cyclotomic theory beyond x^{p^k} - 1 = (x - 1)^{p^k}.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "divdeg/degsets.hpp"

namespace divdeg {

class PolynomialModP {
 public:
  /// Residues lowest degree first; reduced mod p and trimmed.
  PolynomialModP(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static PolynomialModP zero(std::uint64_t p) { return PolynomialModP(p, {}); }
  static PolynomialModP one(std::uint64_t p) { return PolynomialModP(p, {1}); }
  /// x^k.
  static PolynomialModP monomial(std::uint64_t p, std::size_t k);
  /// x^n - 1.
  static PolynomialModP x_pow_minus_one(std::uint64_t p, std::size_t n);

  std::uint64_t modulus() const noexcept { return p_; }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::uint64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  PolynomialModP monic() const;

  friend bool operator==(const PolynomialModP&, const PolynomialModP&) = default;

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> coeffs_;
};

std::string to_string(const PolynomialModP& f);

PolynomialModP operator+(const PolynomialModP& a, const PolynomialModP& b);
PolynomialModP operator-(const PolynomialModP& a, const PolynomialModP& b);
PolynomialModP operator*(const PolynomialModP& a, const PolynomialModP& b);

struct PolyDivision {
  PolynomialModP quotient;
  PolynomialModP remainder;
};

/// Long division; throws std::domain_error on a zero divisor.
PolyDivision divmod(const PolynomialModP& a, const PolynomialModP& b);

/// (a * b) mod m. Requires equal moduli and deg m >= 1.
PolynomialModP poly_mul_mod(const PolynomialModP& a, const PolynomialModP& b, const PolynomialModP& m);

/// base^exponent mod m by square-and-multiply.
PolynomialModP poly_pow_mod(const PolynomialModP& base, std::uint64_t exponent, const PolynomialModP& m);

/// x^{p^e} mod m, by e successive p-th powers.
PolynomialModP poly_powmod_xq(const PolynomialModP& m, unsigned e);

/// Monic gcd. Throws std::invalid_argument on mismatched moduli or two zeros.
PolynomialModP poly_gcd(const PolynomialModP& a, const PolynomialModP& b);

inline constexpr std::uint64_t kDefaultPolyOracleBound = 2048;

/// Degrees of the irreducible factors of x^n - 1 over F_p, with multiplicity.
/// Strips n = n0 p^k, runs distinct-degree factorization on the squarefree
/// x^{n0} - 1, then scales every multiplicity by p^k. Throws
/// OracleBoundExceeded when n > bound.
SmallDegreeMultiset factor_degrees(std::uint64_t n, std::uint64_t p,
                                   std::uint64_t bound = kDefaultPolyOracleBound);

/// Distinct-degree factorization of a squarefree monic f: (degree, count) pairs.
std::vector<DegreeCount<std::uint64_t>> distinct_degree_factorization(const PolynomialModP& f);

}  // namespace divdeg
