#include "divdeg/classify.hpp"

#include <string>

namespace divdeg {

namespace {

bool dense_u64(const std::vector<std::uint64_t>& ds, bool strict) {
  const std::size_t tau = ds.size();
  for (std::size_t i = 0; i + 1 < tau; ++i) {
    const std::size_t index = i + 1;  // 1-based index of the lower divisor
    if (ds[i + 1] > 2 * ds[i]) return false;
    if (strict && index > 1 && index + 1 < tau && ds[i + 1] == 2 * ds[i]) return false;
  }
  return true;
}

bool dense(const FactoredInteger& n, bool strict) {
  if (!n.is_squarefree()) return false;
  if (n.is_one()) return true;
  if (n.value_u64() && *n.value_u64() < (std::uint64_t{1} << 62)) return dense_u64(divisor_values_u64(n), strict);
  const auto ds = divisors(n);
  const std::size_t tau = ds.size();
  for (std::size_t i = 0; i + 1 < tau; ++i) {
    const BigInt& lo = ds[i].value();
    const BigInt& hi = ds[i + 1].value();
    if (hi > 2 * lo) return false;
    if (strict && i + 1 > 1 && i + 2 < tau && hi == 2 * lo) return false;
  }
  return true;
}

}  // namespace

bool is_2_dense(const FactoredInteger& n) { return dense(n, false); }

bool is_strictly_2_dense(const FactoredInteger& n) { return dense(n, true); }

ClassificationRecord classify(const FactoredInteger& n, const std::vector<std::uint64_t>& primes) {
  ClassificationRecord r;
  r.n = n;
  const bool small = n.value_u64() && *n.value_u64() < (std::uint64_t{1} << 62);
  if (small) {
    r.practical = is_practical<std::uint64_t>(n);
    r.phi_practical = is_phi_practical<std::uint64_t>(n);
    r.lambda_practical = is_lambda_practical<std::uint64_t>(n);
    r.weakly_phi_practical = is_weakly_phi_practical<std::uint64_t>(n);
  } else {
    r.practical = is_practical(n);
    r.phi_practical = is_phi_practical(n);
    r.lambda_practical = is_lambda_practical(n);
    r.weakly_phi_practical = is_weakly_phi_practical(n);
  }
  r.two_dense = is_2_dense(n);
  r.strictly_two_dense = is_strictly_2_dense(n);
  for (std::uint64_t p : primes)
    r.p_practical.emplace_back(p, small ? is_p_practical<std::uint64_t>(n, p) : is_p_practical(n, p));

  const auto where = [&] { return " at n = " + to_decimal(n.value()); };
  if (r.phi_practical && !r.lambda_practical) throw InclusionViolation("phi-practical but not lambda-practical" + where());
  for (const auto& [p, flag] : r.p_practical)
    if (r.lambda_practical && !flag)
      throw InclusionViolation("lambda-practical but not " + std::to_string(p) + "-practical" + where());
  if (r.lambda_practical && !r.weakly_phi_practical)
    throw InclusionViolation("lambda-practical but not weakly phi-practical" + where());
  if (r.strictly_two_dense && !r.two_dense) throw InclusionViolation("strictly 2-dense but not 2-dense" + where());
  if (r.two_dense && !r.practical) throw InclusionViolation("2-dense but not practical" + where());
  return r;
}

}  // namespace divdeg
