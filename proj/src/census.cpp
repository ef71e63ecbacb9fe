#include "divdeg/census.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <map>
#include <memory>
#include <ostream>
#include <thread>

namespace divdeg {

// ---------------------------------------------------------------------------
// Class names

ClassName ClassName::parse(std::string_view text) {
  static const std::map<std::string_view, Family> kNames = {
      {"practical", Family::kPractical}, {"phi", Family::kPhi},           {"lambda", Family::kLambda},
      {"weak", Family::kWeak},           {"2dense", Family::kTwoDense}, {"strict2dense", Family::kStrictTwoDense}};
  if (auto it = kNames.find(text); it != kNames.end()) return {it->second, 0};
  if (text.starts_with("p:")) {
    const std::string_view digits = text.substr(2);
    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw UnknownClass("malformed class name: " + std::string(text));
    if (!is_prime(p)) throw UnknownClass(std::to_string(p) + " is not prime");
    return {Family::kPPractical, p};
  }
  throw UnknownClass("unknown class name: " + std::string(text));
}

std::string ClassName::str() const {
  switch (family) {
    case Family::kPractical: return "practical";
    case Family::kPhi: return "phi";
    case Family::kLambda: return "lambda";
    case Family::kWeak: return "weak";
    case Family::kTwoDense: return "2dense";
    case Family::kStrictTwoDense: return "strict2dense";
    case Family::kPPractical: return "p:" + std::to_string(prime);
  }
  return "?";
}

const std::vector<std::uint64_t>& CountTable::column(const ClassName& c) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == c) return counts[i];
  throw UnknownClass("class not in table: " + c.str());
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t max) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 10; x <= max; x *= 10) {
    out.push_back(x);
    if (x > max / 10) break;
  }
  if (out.empty() || out.back() != max) out.push_back(max);
  return out;
}

// ---------------------------------------------------------------------------
// Membership

bool is_member(const FactoredInteger& n, const ClassName& c, const PrimePowerOrderTable* orders) {
  switch (c.family) {
    case Family::kPractical: return is_practical<std::uint64_t>(n);
    case Family::kPhi: return is_phi_practical<std::uint64_t>(n);
    case Family::kLambda: return is_lambda_practical<std::uint64_t>(n);
    case Family::kWeak: return is_weakly_phi_practical<std::uint64_t>(n);
    case Family::kTwoDense: return is_2_dense(n);
    case Family::kStrictTwoDense: return is_strictly_2_dense(n);
    case Family::kPPractical:
      if (orders != nullptr && orders->base() == c.prime) return covers_all_fast(p_multiset<std::uint64_t>(n, *orders));
      return is_p_practical<std::uint64_t>(n, c.prime);
  }
  return false;
}

namespace {

struct SweepContext {
  std::unique_ptr<SmallestPrimeFactorSieve> sieve;
  std::vector<std::unique_ptr<PrimePowerOrderTable>> orders;  // aligned with classes; null when unused
};

SweepContext make_context(std::uint64_t max, const std::vector<ClassName>& classes) {
  SweepContext ctx;
  ctx.sieve = std::make_unique<SmallestPrimeFactorSieve>(static_cast<std::uint32_t>(max));
  for (const auto& c : classes) {
    if (c.family != Family::kPPractical) {
      ctx.orders.emplace_back();
      continue;
    }
    ctx.orders.push_back(std::make_unique<PrimePowerOrderTable>(c.prime, *ctx.sieve));
  }
  return ctx;
}

void check_range(std::uint64_t max, const CensusOptions& options) {
  if (max < 1) throw RangeBoundExceeded("range must be at least 1");
  if (max > options.range_bound || max > std::numeric_limits<std::uint32_t>::max())
    throw RangeBoundExceeded("range bound exceeded: " + std::to_string(max) + " > " +
                             std::to_string(options.range_bound));
  if (options.chunk_size == 0) throw std::invalid_argument("chunk size must be positive");
}

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs body(chunk_index, lo, hi) over [1, max] split into chunks; results are
// written by index so the merge order never depends on scheduling.
template <class Body>
void for_each_chunk(std::uint64_t max, const CensusOptions& options, Body body) {
  const std::uint64_t chunks = (max + options.chunk_size - 1) / options.chunk_size;
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < chunks; i = next++) {
      const std::uint64_t lo = 1 + i * options.chunk_size;
      const std::uint64_t hi = std::min(max, lo + options.chunk_size - 1);
      body(i, lo, hi);
    }
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(options.workers), chunks));
  if (workers <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
}

}  // namespace

CountTable count_classes(std::uint64_t max, const std::vector<ClassName>& classes,
                         const std::vector<std::uint64_t>& checkpoints, const CensusOptions& options) {
  check_range(max, options);
  if (checkpoints.empty()) throw std::invalid_argument("at least one checkpoint required");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1 || checkpoints[i] > max) throw std::invalid_argument("checkpoint outside [1, max]");
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) throw std::invalid_argument("checkpoints must ascend");
  }
  const std::uint64_t top = checkpoints.back();
  const SweepContext ctx = make_context(top, classes);
  const std::uint64_t chunks = (top + options.chunk_size - 1) / options.chunk_size;

  // per_chunk[i][c][k]: members of class c in chunk i falling in bucket k.
  std::vector<std::vector<std::vector<std::uint64_t>>> per_chunk(chunks);
  for_each_chunk(top, options, [&](std::uint64_t i, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::vector<std::uint64_t>> local(classes.size(), std::vector<std::uint64_t>(checkpoints.size(), 0));
    std::size_t bucket = std::lower_bound(checkpoints.begin(), checkpoints.end(), lo) - checkpoints.begin();
    for (std::uint64_t n = lo; n <= hi; ++n) {
      while (checkpoints[bucket] < n) ++bucket;
      const FactoredInteger f = ctx.sieve->factor(static_cast<std::uint32_t>(n));
      for (std::size_t c = 0; c < classes.size(); ++c)
        if (is_member(f, classes[c], ctx.orders[c].get())) ++local[c][bucket];
    }
    per_chunk[i] = std::move(local);
  });

  CountTable table{checkpoints, classes, std::vector<std::vector<std::uint64_t>>(classes.size())};
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::uint64_t running = 0;
    for (std::size_t k = 0; k < checkpoints.size(); ++k) {
      for (const auto& chunk : per_chunk) running += chunk[c][k];
      table.counts[c].push_back(running);
    }
  }
  return table;
}

DiffResult diff_count(std::uint64_t max, const ClassName& a, const ClassName& b, const CensusOptions& options,
                      std::size_t member_cap) {
  check_range(max, options);
  const std::vector<ClassName> classes{a, b};
  const SweepContext ctx = make_context(max, classes);
  const std::uint64_t chunks = (max + options.chunk_size - 1) / options.chunk_size;
  std::vector<std::vector<std::uint64_t>> per_chunk(chunks);
  for_each_chunk(max, options, [&](std::uint64_t i, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> local;
    for (std::uint64_t n = lo; n <= hi; ++n) {
      const FactoredInteger f = ctx.sieve->factor(static_cast<std::uint32_t>(n));
      if (is_member(f, a, ctx.orders[0].get()) && !is_member(f, b, ctx.orders[1].get())) local.push_back(n);
    }
    per_chunk[i] = std::move(local);
  });
  DiffResult result;
  for (const auto& chunk : per_chunk) result.count += chunk.size();
  if (result.count <= member_cap) {
    std::vector<std::uint64_t> members;
    members.reserve(result.count);
    for (const auto& chunk : per_chunk) members.insert(members.end(), chunk.begin(), chunk.end());
    result.members = std::move(members);
  }
  return result;
}

void write_csv(std::ostream& out, const CountTable& table) {
  out << "X";
  for (const auto& c : table.classes) out << ',' << c.str();
  out << '\n';
  for (std::size_t k = 0; k < table.checkpoints.size(); ++k) {
    out << table.checkpoints[k];
    for (const auto& column : table.counts) out << ',' << column[k];
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Families

FamilyKind parse_family_kind(std::string_view text) {
  if (text == "prop46") return FamilyKind::kProp46;
  if (text == "prop62_p2") return FamilyKind::kProp62P2;
  if (text == "prop62_p3") return FamilyKind::kProp62P3;
  if (text == "prop62_podd") return FamilyKind::kProp62POdd;
  if (text == "lemma63") return FamilyKind::kLemma63;
  throw std::invalid_argument("unknown family kind: " + std::string(text));
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kProp46: return "prop46";
    case FamilyKind::kProp62P2: return "prop62_p2";
    case FamilyKind::kProp62P3: return "prop62_p3";
    case FamilyKind::kProp62POdd: return "prop62_podd";
    case FamilyKind::kLemma63: return "lemma63";
  }
  return "?";
}

bool FamilyMember::agrees() const {
  return std::all_of(flags.begin(), flags.end(), [](const FlagCheck& f) { return f.expected == f.verified; });
}

std::uint64_t find_q0(std::uint64_t p) {
  if (p < 3) throw std::invalid_argument("find_q0 requires p >= 3");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p > (std::uint64_t{1} << 31)) throw std::invalid_argument("find_q0: p too large");
  const FactoredInteger v = factorize(p * p + p + 1);
  for (const auto& pp : v.factors())
    if (pp.prime != 3) return pp.prime;
  throw std::logic_error("p^2 + p + 1 is a power of 3 for p = " + std::to_string(p));
}

namespace {

// base, base * q1, base * q1 * q2, ... over the primes lower < q <= limit.
std::vector<FactoredInteger> prime_chain(const FactoredInteger& base, std::uint64_t lower, std::uint64_t limit) {
  std::vector<FactoredInteger> chain{base};
  for (std::uint64_t q : primes_up_to(limit)) {
    if (q <= lower) continue;
    chain.push_back(chain.back() * FactoredInteger({{q, 1}}, FactoredInteger::Trusted{}));
  }
  return chain;
}

FamilyMember lambda_not_phi(FactoredInteger n) {
  FamilyMember m{std::move(n), {}};
  m.flags.push_back({"lambda_practical", true, covers_all_fast(lambda_multiset(m.n))});
  m.flags.push_back({"phi_practical", false, covers_all_fast(phi_multiset(m.n))});
  return m;
}

FamilyMember p_not_lambda(FactoredInteger n, std::uint64_t p) {
  FamilyMember m{std::move(n), {}};
  m.flags.push_back({"p_practical:" + std::to_string(p), true, covers_all_fast(p_multiset(m.n, p))});
  m.flags.push_back({"lambda_practical", false, covers_all_fast(lambda_multiset(m.n))});
  return m;
}

FamilyMember q0_member(std::uint64_t p) {
  const std::uint64_t q0 = find_q0(p);
  FamilyMember m = p_not_lambda(FactoredInteger({{2, 1}, {q0, 1}}), p);
  const std::uint64_t order = order_mod_prime_power(p, q0, 1);
  m.flags.push_back({"q0_not_3", true, q0 != 3});
  m.flags.push_back({"order_p_mod_q0_le_3", true, order <= 3});
  return m;
}

}  // namespace

std::vector<FamilyMember> construct_family(const FamilySpec& spec) {
  std::vector<FamilyMember> out;
  switch (spec.kind) {
    case FamilyKind::kProp46:
      for (auto& n : prime_chain(FactoredInteger({{3, 2}, {5, 1}}), 23, spec.limit)) out.push_back(lambda_not_phi(n));
      break;
    case FamilyKind::kProp62P2:
      for (auto& n : prime_chain(FactoredInteger({{3, 1}, {7, 1}}), 7, spec.limit)) out.push_back(p_not_lambda(n, 2));
      break;
    case FamilyKind::kProp62P3:
      // The bare 2 * 13^4 is not 3-practical; members carry at least one prime above 13.
      for (auto& n : prime_chain(FactoredInteger({{2, 1}, {13, 4}}), 13, spec.limit))
        if (n.num_distinct_primes() > 2) out.push_back(p_not_lambda(n, 3));
      break;
    case FamilyKind::kProp62POdd:
      if (spec.prime) {
        out.push_back(q0_member(*spec.prime));
      } else {
        for (std::uint64_t p : primes_up_to(spec.limit))
          if (p >= 3) out.push_back(q0_member(p));
      }
      break;
    case FamilyKind::kLemma63: {
      if (!spec.prime) throw std::invalid_argument("lemma63 needs a prime");
      const std::uint64_t p = *spec.prime;
      if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
      for (unsigned k = 0; k <= spec.limit; ++k) {
        FactoredInteger n = k == 0 ? FactoredInteger() : FactoredInteger({{p, k}});
        FamilyMember m{n, {}};
        m.flags.push_back({"p_practical:" + std::to_string(p), true, covers_all_fast(p_multiset(n, p))});
        out.push_back(std::move(m));
      }
      break;
    }
  }
  return out;
}

}  // namespace divdeg
