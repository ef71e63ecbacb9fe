#include "divdeg/factorint.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

namespace divdeg {

std::optional<BigInt> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  BigInt v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

// ---------------------------------------------------------------------------
// FactoredInteger

namespace {

BigInt product_of(const std::vector<PrimePower>& factors) {
  BigInt v = 1;
  for (const auto& pp : factors) v *= int_pow(BigInt(pp.prime), pp.exponent);
  return v;
}

void check_shape(const std::vector<PrimePower>& factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].exponent == 0) throw std::invalid_argument("zero exponent in factorization");
    if (factors[i].prime < 2) throw std::invalid_argument("factor below 2 in factorization");
    if (i > 0 && factors[i - 1].prime >= factors[i].prime)
      throw std::invalid_argument("primes in factorization must be strictly increasing");
  }
}

}  // namespace

FactoredInteger::FactoredInteger(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
  check_shape(factors_);
  for (const auto& pp : factors_)
    if (!is_prime(pp.prime)) throw std::invalid_argument(std::to_string(pp.prime) + " is not prime");
  value_ = product_of(factors_);
}

FactoredInteger::FactoredInteger(std::vector<PrimePower> factors, Trusted) : factors_(std::move(factors)) {
  check_shape(factors_);
  value_ = product_of(factors_);
}

std::uint64_t FactoredInteger::tau() const noexcept {
  std::uint64_t t = 1;
  for (const auto& pp : factors_) t *= pp.exponent + 1;
  return t;
}

unsigned FactoredInteger::big_omega() const noexcept {
  unsigned k = 0;
  for (const auto& pp : factors_) k += pp.exponent;
  return k;
}

bool FactoredInteger::is_squarefree() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

unsigned FactoredInteger::exponent_of(std::uint64_t prime) const noexcept {
  for (const auto& pp : factors_)
    if (pp.prime == prime) return pp.exponent;
  return 0;
}

FactoredInteger FactoredInteger::operator*(const FactoredInteger& other) const {
  std::vector<PrimePower> merged;
  merged.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->prime < b->prime)) {
      merged.push_back(*a++);
    } else if (a == factors_.end() || b->prime < a->prime) {
      merged.push_back(*b++);
    } else {
      merged.push_back({a->prime, a->exponent + b->exponent});
      ++a;
      ++b;
    }
  }
  return FactoredInteger(std::move(merged), Trusted{});
}

FactoredInteger FactoredInteger::coprime_part(std::uint64_t a) const {
  std::vector<PrimePower> kept;
  for (const auto& pp : factors_)
    if (a % pp.prime != 0) kept.push_back(pp);
  return FactoredInteger(std::move(kept), Trusted{});
}

std::string to_string(const FactoredInteger& f) {
  if (f.is_one()) return "1";
  std::string out;
  for (const auto& pp : f.factors()) {
    if (!out.empty()) out += " * ";
    out += std::to_string(pp.prime);
    if (pp.exponent > 1) out += "^" + std::to_string(pp.exponent);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Primality

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  if (((a | b) >> 32) == 0) return a * b % m;
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exponent != 0) {
    if (exponent & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exponent >>= 1U;
  }
  return result;
}

namespace {

constexpr std::array<std::uint64_t, 24> kWitnessBases = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                                         41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

// Strong probable prime test to a single base for odd n > 2.
template <class Int, class MulMod>
bool strong_probable_prime(const Int& n, const Int& base, MulMod mul) {
  Int d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Int x = 1, b = base % n, e = d;
  while (e != 0) {
    if ((e & 1) != 0) x = mul(x, b);
    b = mul(b, b);
    e >>= 1;
  }
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mul(x, x);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnessBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 89 * 89) return true;
  auto mul = [n](std::uint64_t a, std::uint64_t b) { return mulmod(a, b, n); };
  // The first twelve prime bases are exact for n < 3.3 * 10^24.
  for (std::size_t i = 0; i < 12; ++i)
    if (!strong_probable_prime<std::uint64_t>(n, kWitnessBases[i], mul)) return false;
  return true;
}

bool is_prime(const BigInt& n) {
  if (auto small = to_u64(n)) return is_prime(*small);
  if (n < 2) return false;
  for (std::uint64_t p : kWitnessBases)
    if (n % p == 0) return false;
  auto mul = [&n](const BigInt& a, const BigInt& b) -> BigInt { return a * b % n; };
  for (std::uint64_t p : kWitnessBases)
    if (!strong_probable_prime<BigInt>(n, BigInt(p), mul)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Factorization

namespace {

const std::vector<std::uint64_t>& trial_primes() {
  static const std::vector<std::uint64_t> primes = primes_up_to(kTrialDivisionBound);
  return primes;
}

// Brent's variant of Pollard rho with f(x) = x^2 + c. Returns a nontrivial
// factor of the odd composite n, cycling through c = 1, 2, ... deterministically.
template <class Int, class MulMod>
Int brent_rho(const Int& n, MulMod mul) {
  auto absdiff = [](const Int& a, const Int& b) { return a > b ? Int(a - b) : Int(b - a); };
  for (Int c = 1;; ++c) {
    Int y = 2, x = 2, ys = 2, q = 1, g = 1;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    auto step = [&](const Int& v) {
      Int t = mul(v, v);
      return t >= n - c ? Int(t - (n - c)) : Int(t + c);
    };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = step(y);
          q = mul(q, absdiff(x, y));
        }
        g = int_gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = int_gcd(absdiff(x, ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_u64(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  auto mul = [n](std::uint64_t a, std::uint64_t b) { return mulmod(a, b, n); };
  std::uint64_t d = brent_rho<std::uint64_t>(n, mul);
  split_u64(d, out);
  split_u64(n / d, out);
}

void split_big(const BigInt& n, std::map<std::uint64_t, unsigned>& out) {
  if (auto small = to_u64(n)) return split_u64(*small, out);
  if (is_prime(n)) throw std::domain_error("prime factor exceeds 64 bits: " + n.str());
  auto mul = [&n](const BigInt& a, const BigInt& b) -> BigInt { return a * b % n; };
  BigInt d = brent_rho<BigInt>(n, mul);
  split_big(d, out);
  split_big(n / d, out);
}

}  // namespace

FactoredInteger factorize(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
  std::map<std::uint64_t, unsigned> found;
  BigInt rest = n;
  for (std::uint64_t p : trial_primes()) {
    if (BigInt(p) * p > rest) break;
    while (rest % p == 0) {
      rest /= p;
      ++found[p];
    }
  }
  if (rest > 1) split_big(rest, found);
  std::vector<PrimePower> factors;
  factors.reserve(found.size());
  for (const auto& [p, e] : found) factors.push_back({p, e});
  return FactoredInteger(std::move(factors), FactoredInteger::Trusted{});
}

FactoredInteger factorize(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
  std::map<std::uint64_t, unsigned> found;
  for (std::uint64_t p : trial_primes()) {
    if (p * p > n) break;
    while (n % p == 0) {
      n /= p;
      ++found[p];
    }
  }
  split_u64(n, found);
  std::vector<PrimePower> factors;
  factors.reserve(found.size());
  for (const auto& [p, e] : found) factors.push_back({p, e});
  return FactoredInteger(std::move(factors), FactoredInteger::Trusted{});
}

// ---------------------------------------------------------------------------
// Divisors

std::vector<FactoredInteger> divisors(const FactoredInteger& f) {
  const auto pps = f.factors();
  std::vector<unsigned> exps(pps.size(), 0);
  std::vector<FactoredInteger> out;
  out.reserve(f.tau());
  while (true) {
    std::vector<PrimePower> d;
    for (std::size_t i = 0; i < pps.size(); ++i)
      if (exps[i] > 0) d.push_back({pps[i].prime, exps[i]});
    out.emplace_back(std::move(d), FactoredInteger::Trusted{});
    std::size_t i = 0;
    while (i < pps.size() && exps[i] == pps[i].exponent) exps[i++] = 0;
    if (i == pps.size()) break;
    ++exps[i];
  }
  std::sort(out.begin(), out.end(),
            [](const FactoredInteger& a, const FactoredInteger& b) { return a.value() < b.value(); });
  return out;
}

std::vector<std::uint64_t> divisor_values_u64(const FactoredInteger& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& pp : f.factors()) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Sieves

SmallestPrimeFactorSieve::SmallestPrimeFactorSieve(std::uint32_t limit) : limit_(limit), spf_(limit + 1, 0) {
  if (limit >= 1) spf_[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t j = i * i; j <= limit; j += i)
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
  }
}

FactoredInteger SmallestPrimeFactorSieve::factor(std::uint32_t n) const {
  if (n < 1 || n > limit_) throw std::out_of_range("sieve factor outside table: " + std::to_string(n));
  std::vector<PrimePower> factors;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.push_back({p, e});
  }
  return FactoredInteger(std::move(factors), FactoredInteger::Trusted{});
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace divdeg
