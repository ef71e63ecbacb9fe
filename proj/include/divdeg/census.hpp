#pragma once

// Bulk counting over [1, X], class differences, and verification of the
// explicit construction families.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "divdeg/classify.hpp"
#include "divdeg/factorint.hpp"

namespace divdeg {

enum class Family { kPractical, kPhi, kLambda, kWeak, kTwoDense, kStrictTwoDense, kPPractical };

/// A countable class. Textual forms: practical, phi, lambda, weak, 2dense,
/// strict2dense, p:<prime>.
struct ClassName {
  Family family = Family::kPhi;
  std::uint64_t prime = 0;  // only for kPPractical

  static ClassName parse(std::string_view text);
  std::string str() const;

  friend auto operator<=>(const ClassName&, const ClassName&) = default;
};

class UnknownClass : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RangeBoundExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultRangeBound = 10'000'000;
inline constexpr std::size_t kDefaultMemberCap = 100'000;

struct CensusOptions {
  std::uint64_t chunk_size = 10'000;
  unsigned workers = 0;  // 0: hardware concurrency
  std::uint64_t range_bound = kDefaultRangeBound;
};

struct CountTable {
  std::vector<std::uint64_t> checkpoints;
  std::vector<ClassName> classes;
  /// counts[c][k] = #{n <= checkpoints[k] : n in classes[c]}.
  std::vector<std::vector<std::uint64_t>> counts;

  const std::vector<std::uint64_t>& column(const ClassName& c) const;
  friend bool operator==(const CountTable&, const CountTable&) = default;
};

/// Powers of ten up to max, with max itself appended when it is not one.
std::vector<std::uint64_t> default_checkpoints(std::uint64_t max);

/// Fast membership test used by the sweeps. Pass the order table when the
/// class is p-practical and n lies inside the table; otherwise orders are
/// computed directly.
bool is_member(const FactoredInteger& n, const ClassName& c, const PrimePowerOrderTable* orders = nullptr);

/// Exact cumulative counts; identical for every chunk size and worker count.
CountTable count_classes(std::uint64_t max, const std::vector<ClassName>& classes,
                         const std::vector<std::uint64_t>& checkpoints, const CensusOptions& options = {});

struct DiffResult {
  std::uint64_t count = 0;
  /// Present when the member count is at most the cap.
  std::optional<std::vector<std::uint64_t>> members;
};

/// #{n <= max : n in a, n not in b}.
DiffResult diff_count(std::uint64_t max, const ClassName& a, const ClassName& b, const CensusOptions& options = {},
                      std::size_t member_cap = kDefaultMemberCap);

void write_csv(std::ostream& out, const CountTable& table);

// ---------------------------------------------------------------------------
// Construction families

enum class FamilyKind { kProp46, kProp62P2, kProp62P3, kProp62POdd, kLemma63 };

FamilyKind parse_family_kind(std::string_view text);
std::string to_string(FamilyKind kind);

struct FamilySpec {
  FamilyKind kind = FamilyKind::kProp46;
  /// Prime bound X for the product families, exponent bound for lemma63,
  /// prime bound for prop62_podd when no single prime is given.
  std::uint64_t limit = 100;
  std::optional<std::uint64_t> prime;
};

struct FlagCheck {
  std::string name;
  bool expected = false;
  bool verified = false;
};

struct FamilyMember {
  FactoredInteger n;
  std::vector<FlagCheck> flags;

  bool agrees() const;
};

/// Generates the family members in factored form and verifies each flag with
/// the prefix criterion on the relevant degree multiset.
///   prop46       45 * prod_{23 < q <= X} q           lambda, not phi
///   prop62_p2    21 * prod_{7 < q <= X} q            2-practical, not lambda
///   prop62_p3    2 * 13^4 * prod_{13 < q <= X} q     3-practical, not lambda (X >= 17)
///   prop62_podd  2 q0 with q0 = find_q0(p)           p-practical, not lambda
///   lemma63      p^k, 0 <= k <= limit                p-practical
std::vector<FamilyMember> construct_family(const FamilySpec& spec);

/// Smallest prime divisor of p^2 + p + 1 other than 3. Requires prime p >= 3.
std::uint64_t find_q0(std::uint64_t p);

}  // namespace divdeg
