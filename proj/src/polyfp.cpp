#include "divdeg/polyfp.hpp"

#include <algorithm>

namespace divdeg {

namespace {

void require_same_field(const PolynomialModP& a, const PolynomialModP& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("polynomial moduli differ: " + std::to_string(a.modulus()) + " vs " +
                                std::to_string(b.modulus()));
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

void trim(std::vector<std::uint64_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

PolynomialModP::PolynomialModP(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (p < 2 || p > (std::uint64_t{1} << 31)) throw std::invalid_argument("polynomial modulus must be in [2, 2^31]");
  for (auto& c : coeffs_) c %= p_;
  trim(coeffs_);
}

PolynomialModP PolynomialModP::monomial(std::uint64_t p, std::size_t k) {
  std::vector<std::uint64_t> c(k + 1, 0);
  c[k] = 1;
  return PolynomialModP(p, std::move(c));
}

PolynomialModP PolynomialModP::x_pow_minus_one(std::uint64_t p, std::size_t n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[n] = 1;
  c[0] = (c[0] + p - 1) % p;
  return PolynomialModP(p, std::move(c));
}

PolynomialModP PolynomialModP::monic() const {
  if (is_zero()) return *this;
  const std::uint64_t inv = inverse_mod(leading(), p_);
  std::vector<std::uint64_t> c = coeffs_;
  for (auto& v : c) v = v * inv % p_;
  return PolynomialModP(p_, std::move(c));
}

std::string to_string(const PolynomialModP& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (long i = f.degree(); i >= 0; --i) {
    const std::uint64_t c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || i == 0) out += std::to_string(c);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

PolynomialModP operator+(const PolynomialModP& a, const PolynomialModP& b) {
  require_same_field(a, b);
  const std::uint64_t p = a.modulus();
  std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] = a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] = (c[i] + b.coeffs()[i]) % p;
  return PolynomialModP(p, std::move(c));
}

PolynomialModP operator-(const PolynomialModP& a, const PolynomialModP& b) {
  require_same_field(a, b);
  const std::uint64_t p = a.modulus();
  std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] = a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] = (c[i] + p - b.coeffs()[i]) % p;
  return PolynomialModP(p, std::move(c));
}

PolynomialModP operator*(const PolynomialModP& a, const PolynomialModP& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return PolynomialModP::zero(a.modulus());
  const std::uint64_t p = a.modulus();
  std::vector<std::uint64_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const std::uint64_t ai = a.coeffs()[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] = (c[i + j] + ai * b.coeffs()[j]) % p;
  }
  return PolynomialModP(p, std::move(c));
}

PolyDivision divmod(const PolynomialModP& a, const PolynomialModP& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::uint64_t p = a.modulus();
  if (a.degree() < b.degree()) return {PolynomialModP::zero(p), a};
  std::vector<std::uint64_t> r = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  const std::uint64_t inv = inverse_mod(b.leading(), p);
  std::vector<std::uint64_t> q(r.size() - db, 0);
  for (std::size_t k = r.size(); k-- > db;) {
    const std::uint64_t coef = r[k] * inv % p;
    q[k - db] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = (r[k - db + j] + (p - coef) * d[j]) % p;
  }
  r.resize(db);
  return {PolynomialModP(p, std::move(q)), PolynomialModP(p, std::move(r))};
}

PolynomialModP poly_mul_mod(const PolynomialModP& a, const PolynomialModP& b, const PolynomialModP& m) {
  require_same_field(a, b);
  require_same_field(a, m);
  if (m.degree() < 1) throw std::domain_error("poly_mul_mod: modulus must have degree >= 1");
  return divmod(a * b, m).remainder;
}

PolynomialModP poly_pow_mod(const PolynomialModP& base, std::uint64_t exponent, const PolynomialModP& m) {
  PolynomialModP result = divmod(PolynomialModP::one(m.modulus()), m).remainder;
  PolynomialModP b = divmod(base, m).remainder;
  while (exponent != 0) {
    if (exponent & 1U) result = poly_mul_mod(result, b, m);
    exponent >>= 1U;
    if (exponent != 0) b = poly_mul_mod(b, b, m);
  }
  return result;
}

PolynomialModP poly_powmod_xq(const PolynomialModP& m, unsigned e) {
  if (m.degree() < 1) throw std::domain_error("poly_powmod_xq: modulus must have degree >= 1");
  PolynomialModP h = divmod(PolynomialModP::monomial(m.modulus(), 1), m).remainder;
  for (unsigned i = 0; i < e; ++i) h = poly_pow_mod(h, m.modulus(), m);
  return h;
}

PolynomialModP poly_gcd(const PolynomialModP& a, const PolynomialModP& b) {
  require_same_field(a, b);
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd of two zero polynomials");
  PolynomialModP x = a, y = b;
  while (!y.is_zero()) {
    PolynomialModP r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

// Rows x^{p j} mod f for j < deg f, so that h(x)^p mod f = sum_j h_j row_j
// (coefficients of F_p are fixed by Frobenius).
class FrobeniusMatrix {
 public:
  explicit FrobeniusMatrix(const PolynomialModP& f) : p_(f.modulus()), d_(static_cast<std::size_t>(f.degree())) {
    const auto& fc = f.coeffs();  // monic
    rows_.assign(d_ * d_, 0);
    std::vector<std::uint64_t> v(d_, 0);
    v[0] = 1;
    const bool shift = p_ <= 64;
    const PolynomialModP xp = shift ? f : poly_powmod_xq(f, 1);
    for (std::size_t j = 0; j < d_; ++j) {
      std::copy(v.begin(), v.end(), rows_.begin() + static_cast<std::ptrdiff_t>(j * d_));
      if (!shift) {
        v = poly_mul_mod(PolynomialModP(p_, v), xp, f).coeffs();
        v.resize(d_, 0);
        continue;
      }
      for (std::uint64_t s = 0; s < p_; ++s) {  // v <- v * x mod f
        const std::uint64_t top = v[d_ - 1];
        for (std::size_t k = d_ - 1; k > 0; --k) v[k] = (v[k - 1] + (p_ - top) * fc[k]) % p_;
        v[0] = (p_ - top) * fc[0] % p_;
      }
    }
  }

  std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& h) const {
    std::vector<std::uint64_t> acc(d_, 0);
    const bool lazy = (p_ - 1) * (p_ - 1) <= (std::uint64_t{1} << 40);
    for (std::size_t j = 0; j < h.size() && j < d_; ++j) {
      const std::uint64_t c = h[j];
      if (c == 0) continue;
      const std::uint64_t* row = rows_.data() + j * d_;
      for (std::size_t k = 0; k < d_; ++k) acc[k] += c * row[k];
      if (!lazy)
        for (auto& a : acc) a %= p_;
    }
    for (auto& a : acc) a %= p_;
    return acc;
  }

 private:
  std::uint64_t p_;
  std::size_t d_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace

std::vector<DegreeCount<std::uint64_t>> distinct_degree_factorization(const PolynomialModP& input) {
  const std::uint64_t p = input.modulus();
  std::vector<DegreeCount<std::uint64_t>> out;
  PolynomialModP f = input.monic();
  if (f.degree() < 1) return out;
  const PolynomialModP x = PolynomialModP::monomial(p, 1);
  PolynomialModP h = divmod(x, f).remainder;
  FrobeniusMatrix frob(f);
  for (std::uint64_t i = 1; 2 * i <= static_cast<std::uint64_t>(f.degree()); ++i) {
    h = PolynomialModP(p, frob.apply(h.coeffs()));  // x^{p^i} mod f
    const PolynomialModP g = poly_gcd(h - x, f);
    if (g.degree() >= 1) {
      out.push_back({i, static_cast<std::uint64_t>(g.degree()) / i});
      f = divmod(f, g).quotient;
      if (f.degree() < 1) break;
      h = divmod(h, f).remainder;
      frob = FrobeniusMatrix(f);
    }
  }
  if (f.degree() >= 1) out.push_back({static_cast<std::uint64_t>(f.degree()), 1});
  return out;
}

SmallDegreeMultiset factor_degrees(std::uint64_t n, std::uint64_t p, std::uint64_t bound) {
  if (n < 1) throw std::invalid_argument("factor_degrees requires n >= 1");
  if (n > bound) throw OracleBoundExceeded("polynomial oracle bound exceeded: n = " + std::to_string(n));
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  std::uint64_t n0 = n, pk = 1;
  while (n0 % p == 0) {
    n0 /= p;
    pk *= p;
  }
  auto parts = distinct_degree_factorization(PolynomialModP::x_pow_minus_one(p, n0));
  for (auto& part : parts) part.multiplicity *= pk;
  auto ms = SmallDegreeMultiset::from_contributions(std::move(parts));
  if (ms.total() != n) throw std::logic_error("factor_degrees: degrees do not sum to n");
  return ms;
}

}  // namespace divdeg
