#pragma once

// Command-line front end: argument parsing into a RunConfig and dispatch.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "divdeg/census.hpp"
#include "divdeg/classify.hpp"
#include "divdeg/orders.hpp"
#include "divdeg/polyfp.hpp"

namespace divdeg::cli {

enum class Subcommand { kClassify, kCount, kDiff, kWitness, kOracle, kConstruct };
enum class OutputFormat { kCsv, kJson, kText };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

struct RunConfig {
  Subcommand subcommand = Subcommand::kClassify;
  BigInt n = 1;                        // classify, witness
  std::uint64_t max = 0;               // count, diff, oracle
  std::vector<std::uint64_t> primes;   // classify, oracle
  std::vector<ClassName> classes;      // count
  std::vector<std::uint64_t> checkpoints;
  std::optional<std::string> out_path;
  OutputFormat format = OutputFormat::kText;
  std::uint64_t oracle_bound = kDefaultPolyOracleBound;
  std::uint64_t search_cap = kDefaultSearchCap;
  ClassName diff_a{Family::kLambda, 0};
  ClassName diff_b{Family::kPhi, 0};
  bool list = false;
  FamilySpec family;
  CensusOptions census;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; what() holds the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer with optional exponent suffix ("1000000", "1e6"). Throws UsageError
/// naming the flag on malformed input.
std::uint64_t parse_count(const std::string& text, const std::string& flag);

/// argv[0] is the program name. Environment variables DIVDEG_ORACLE_BOUND and
/// DIVDEG_SEARCH_CAP replace the defaults; explicit flags win over both.
RunConfig parse_args(const std::vector<std::string>& argv);

/// Executes the config; returns kExitOk, kExitUsage or kExitMismatch.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

nlohmann::json record_to_json(const ClassificationRecord& record);
/// Inverse of record_to_json. Throws std::invalid_argument when the factors do
/// not multiply to n.
ClassificationRecord record_from_json(const nlohmann::json& j);

}  // namespace divdeg::cli
