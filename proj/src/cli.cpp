#include "divdeg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace divdeg::cli {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

std::vector<std::uint64_t> parse_primes(const std::string& text, const std::string& flag) {
  std::vector<std::uint64_t> primes;
  for (const auto& part : split_commas(text)) {
    const std::uint64_t p = parse_count(part, flag);
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    primes.push_back(p);
  }
  if (primes.empty()) throw UsageError(flag + ": empty prime list");
  return primes;
}

std::optional<std::uint64_t> env_count(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  return parse_count(raw, name);
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  if (text == "text") return OutputFormat::kText;
  throw UsageError("--format: expected csv, json or text, got '" + text + "'");
}

}  // namespace

std::uint64_t parse_count(const std::string& text, const std::string& flag) {
  const auto bad = [&] { return UsageError(flag + ": malformed number '" + text + "'"); };
  const auto e = text.find_first_of("eE");
  const auto mantissa = parse_decimal(text.substr(0, e));
  if (!mantissa) throw bad();
  BigInt value = *mantissa;
  if (e != std::string::npos) {
    const auto exponent = parse_decimal(text.substr(e + 1));
    if (!exponent || *exponent > 19) throw bad();
    value *= int_pow(BigInt(10), static_cast<unsigned>(*exponent));
  }
  const auto small = to_u64(value);
  if (!small) throw UsageError(flag + ": number out of range '" + text + "'");
  return *small;
}

RunConfig parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"Decide and count integers n for which x^n - 1 has a divisor of every degree."};
  app.require_subcommand(1);

  std::string n_text, primes_text, classes_text, checkpoints_text, max_text, a_text = "lambda", b_text = "phi";
  std::string out_path, format_text, cap_text, oracle_bound_text, limit_text = "100", p_text, kind_text;
  std::string chunk_text, threads_text;
  bool list = false;

  auto* classify = app.add_subcommand("classify", "Classify one integer; prints a JSON record");
  classify->add_option("n", n_text, "Positive integer (decimal)")->required();
  classify->add_option("--primes", primes_text, "Comma-separated primes for the p-practical flags (default 2,3,5)");

  auto* count = app.add_subcommand("count", "Cumulative class counts over [1, X]");
  count->add_option("--max", max_text, "Upper end X of the range (1e6 style accepted)")->required();
  count->add_option("--classes", classes_text,
                    "Classes: phi,lambda,practical,weak,2dense,strict2dense,p:<prime> (default phi,lambda,practical)");
  count->add_option("--checkpoints", checkpoints_text, "Ascending X values to report (default powers of 10)");
  count->add_option("--out", out_path, "Write the table here instead of stdout");

  auto* diff = app.add_subcommand("diff", "Count n <= X in class a but not in class b");
  diff->add_option("--max", max_text, "Upper end X of the range")->required();
  diff->add_option("--a", a_text, "Class a (default lambda)");
  diff->add_option("--b", b_text, "Class b (default phi)");
  diff->add_flag("--list", list, "Also print the members");

  auto* witness = app.add_subcommand("witness", "Prime p with ell*_p(d) = lambda(d) for all d | n");
  witness->add_option("n", n_text, "Positive integer")->required();
  witness->add_option("--cap", cap_text, "Largest prime to try (default 1e7, env DIVDEG_SEARCH_CAP)");

  auto* oracle = app.add_subcommand("oracle", "Compare polynomial factorization of x^n - 1 with the order multisets");
  oracle->add_option("--max", max_text, "Largest n to check")->required();
  oracle->add_option("--primes", primes_text, "Comma-separated primes (default 2,3,5,7,13)");
  oracle->add_option("--bound", oracle_bound_text, "Largest n the oracle accepts (default 2048, env DIVDEG_ORACLE_BOUND)");

  auto* construct = app.add_subcommand("construct", "Generate and verify a construction family");
  construct->add_option("kind", kind_text, "prop46, prop62_p2, prop62_p3, prop62_podd or lemma63")->required();
  construct->add_option("--limit", limit_text, "Prime bound, or exponent bound for lemma63 (default 100)");
  construct->add_option("--p", p_text, "Prime for prop62_podd and lemma63");

  for (auto* sub : {count, diff}) {
    sub->add_option("--chunk", chunk_text, "Integers per work unit (default 10000)");
    sub->add_option("--threads", threads_text, "Worker threads (default: all cores)");
  }
  for (auto* sub : {classify, count, diff, witness, oracle, construct})
    sub->add_option("--format", format_text, "csv, json or text");

  std::vector<const char*> raw;
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    for (auto* sub : app.get_subcommands()) throw HelpRequested(sub->help());
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig cfg;
  if (auto v = env_count("DIVDEG_ORACLE_BOUND")) cfg.oracle_bound = *v;
  if (auto v = env_count("DIVDEG_SEARCH_CAP")) cfg.search_cap = *v;
  if (!oracle_bound_text.empty()) cfg.oracle_bound = parse_count(oracle_bound_text, "--bound");
  if (!cap_text.empty()) cfg.search_cap = parse_count(cap_text, "--cap");
  if (!chunk_text.empty()) cfg.census.chunk_size = parse_count(chunk_text, "--chunk");
  if (!threads_text.empty()) cfg.census.workers = static_cast<unsigned>(parse_count(threads_text, "--threads"));
  if (cfg.census.chunk_size == 0) throw UsageError("--chunk: must be positive");

  const auto parse_n = [&] {
    const auto n = parse_decimal(n_text);
    if (!n || *n < 1) throw UsageError("n: expected a positive decimal integer, got '" + n_text + "'");
    return *n;
  };
  const auto parse_max = [&] {
    const std::uint64_t m = parse_count(max_text, "--max");
    if (m < 1) throw UsageError("--max: must be positive");
    return m;
  };
  const auto class_of = [](const std::string& text, const std::string& flag) {
    try {
      return ClassName::parse(text);
    } catch (const UnknownClass& e) {
      throw UsageError(flag + ": " + e.what());
    }
  };

  if (classify->parsed()) {
    cfg.subcommand = Subcommand::kClassify;
    cfg.format = OutputFormat::kJson;
    cfg.n = parse_n();
    cfg.primes = primes_text.empty() ? std::vector<std::uint64_t>{2, 3, 5} : parse_primes(primes_text, "--primes");
  } else if (count->parsed()) {
    cfg.subcommand = Subcommand::kCount;
    cfg.format = OutputFormat::kCsv;
    cfg.max = parse_max();
    for (const auto& c : split_commas(classes_text.empty() ? "phi,lambda,practical" : classes_text))
      cfg.classes.push_back(class_of(c, "--classes"));
    if (checkpoints_text.empty()) {
      cfg.checkpoints = default_checkpoints(cfg.max);
    } else {
      for (const auto& c : split_commas(checkpoints_text)) cfg.checkpoints.push_back(parse_count(c, "--checkpoints"));
      for (std::size_t i = 0; i < cfg.checkpoints.size(); ++i) {
        if (cfg.checkpoints[i] < 1 || cfg.checkpoints[i] > cfg.max)
          throw UsageError("--checkpoints: " + std::to_string(cfg.checkpoints[i]) + " is outside [1, --max]");
        if (i > 0 && cfg.checkpoints[i] <= cfg.checkpoints[i - 1])
          throw UsageError("--checkpoints: values must be strictly ascending");
      }
    }
    if (!out_path.empty()) cfg.out_path = out_path;
  } else if (diff->parsed()) {
    cfg.subcommand = Subcommand::kDiff;
    cfg.max = parse_max();
    cfg.diff_a = class_of(a_text, "--a");
    cfg.diff_b = class_of(b_text, "--b");
    cfg.list = list;
  } else if (witness->parsed()) {
    cfg.subcommand = Subcommand::kWitness;
    cfg.n = parse_n();
  } else if (oracle->parsed()) {
    cfg.subcommand = Subcommand::kOracle;
    cfg.max = parse_max();
    cfg.primes = primes_text.empty() ? std::vector<std::uint64_t>{2, 3, 5, 7, 13} : parse_primes(primes_text, "--primes");
    if (cfg.max > cfg.oracle_bound)
      throw UsageError("--max: " + std::to_string(cfg.max) + " exceeds the oracle bound " +
                       std::to_string(cfg.oracle_bound));
  } else {
    cfg.subcommand = Subcommand::kConstruct;
    try {
      cfg.family.kind = parse_family_kind(kind_text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("kind: ") + e.what());
    }
    cfg.family.limit = parse_count(limit_text, "--limit");
    if (!p_text.empty()) {
      const std::uint64_t p = parse_count(p_text, "--p");
      if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
      cfg.family.prime = p;
    }
    if (cfg.family.kind == FamilyKind::kLemma63 && !cfg.family.prime) throw UsageError("--p: required for lemma63");
    if (cfg.family.kind == FamilyKind::kProp62POdd && cfg.family.prime && *cfg.family.prime < 3)
      throw UsageError("--p: prop62_podd needs p >= 3");
  }
  if (!format_text.empty()) cfg.format = parse_format(format_text);
  return cfg;
}

// ---------------------------------------------------------------------------
// JSON records

nlohmann::json record_to_json(const ClassificationRecord& r) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& pp : r.n.factors()) factors.push_back({pp.prime, pp.exponent});
  nlohmann::json pflags = nlohmann::json::object();
  for (const auto& [p, flag] : r.p_practical) pflags[std::to_string(p)] = flag;
  return {{"n", to_decimal(r.n.value())},
          {"factors", factors},
          {"practical", r.practical},
          {"phi_practical", r.phi_practical},
          {"lambda_practical", r.lambda_practical},
          {"weakly_phi_practical", r.weakly_phi_practical},
          {"two_dense", r.two_dense},
          {"strictly_two_dense", r.strictly_two_dense},
          {"p_practical", pflags}};
}

ClassificationRecord record_from_json(const nlohmann::json& j) {
  std::vector<PrimePower> factors;
  for (const auto& f : j.at("factors")) factors.push_back({f.at(0).get<std::uint64_t>(), f.at(1).get<unsigned>()});
  ClassificationRecord r;
  r.n = FactoredInteger(std::move(factors));
  const auto n = parse_decimal(j.at("n").get<std::string>());
  if (!n || *n != r.n.value()) throw std::invalid_argument("record factors do not multiply to n");
  r.practical = j.at("practical").get<bool>();
  r.phi_practical = j.at("phi_practical").get<bool>();
  r.lambda_practical = j.at("lambda_practical").get<bool>();
  r.weakly_phi_practical = j.at("weakly_phi_practical").get<bool>();
  r.two_dense = j.at("two_dense").get<bool>();
  r.strictly_two_dense = j.at("strictly_two_dense").get<bool>();
  for (const auto& [key, value] : j.at("p_practical").items())
    r.p_practical.emplace_back(std::stoull(key), value.get<bool>());
  std::sort(r.p_practical.begin(), r.p_practical.end());
  return r;
}

// ---------------------------------------------------------------------------
// Dispatch

namespace {

int run_classify(const RunConfig& cfg, std::ostream& out) {
  const ClassificationRecord r = classify(factorize(cfg.n), cfg.primes);
  const auto j = record_to_json(r);
  if (cfg.format == OutputFormat::kJson) {
    out << j.dump() << '\n';
  } else {
    for (const auto& [key, value] : j.items()) out << key << ": " << value.dump() << '\n';
  }
  return kExitOk;
}

int run_count(const RunConfig& cfg, std::ostream& out) {
  const CountTable table = count_classes(cfg.max, cfg.classes, cfg.checkpoints, cfg.census);
  std::ofstream file;
  if (cfg.out_path) {
    file.open(*cfg.out_path);
    if (!file) throw std::runtime_error("cannot open " + *cfg.out_path);
  }
  std::ostream& sink = cfg.out_path ? static_cast<std::ostream&>(file) : out;
  if (cfg.format == OutputFormat::kJson) {
    nlohmann::json counts = nlohmann::json::object();
    for (std::size_t c = 0; c < table.classes.size(); ++c) counts[table.classes[c].str()] = table.counts[c];
    sink << nlohmann::json{{"checkpoints", table.checkpoints}, {"counts", counts}}.dump() << '\n';
  } else {
    write_csv(sink, table);
  }
  return kExitOk;
}

int run_diff(const RunConfig& cfg, std::ostream& out) {
  const DiffResult r = diff_count(cfg.max, cfg.diff_a, cfg.diff_b, cfg.census);
  if (cfg.format == OutputFormat::kJson) {
    nlohmann::json j{{"max", cfg.max}, {"a", cfg.diff_a.str()}, {"b", cfg.diff_b.str()}, {"count", r.count}};
    if (cfg.list && r.members) j["members"] = *r.members;
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << cfg.diff_a.str() << " \\ " << cfg.diff_b.str() << " up to " << cfg.max << ": " << r.count << '\n';
  if (cfg.list) {
    if (r.members) {
      for (std::uint64_t n : *r.members) out << n << '\n';
    } else {
      out << "(member list suppressed: more than " << kDefaultMemberCap << " members)\n";
    }
  }
  return kExitOk;
}

int run_witness(const RunConfig& cfg, std::ostream& out) {
  const WitnessResult w = lambda_witness(factorize(cfg.n), cfg.search_cap);
  if (cfg.format == OutputFormat::kJson) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : w.table) rows.push_back({{"d", row.divisor}, {"ell_star", row.ell_star}, {"lambda", row.lambda}});
    out << nlohmann::json{{"n", to_decimal(w.n.value())}, {"p", w.p}, {"residue", w.residue}, {"table", rows}}.dump()
        << '\n';
    return kExitOk;
  }
  out << "n = " << w.n.value() << " (" << to_string(w.n) << ")\n";
  out << "p = " << w.p << "  (p = " << w.residue << " mod " << w.n.value() << ")\n";
  out << "d\tell*_p(d)\tlambda(d)\n";
  for (const auto& row : w.table) out << row.divisor << '\t' << row.ell_star << '\t' << row.lambda << '\n';
  return kExitOk;
}

int run_oracle(const RunConfig& cfg, std::ostream& out) {
  std::uint64_t checked = 0;
  std::vector<std::string> mismatches;
  for (std::uint64_t n = 1; n <= cfg.max; ++n) {
    const FactoredInteger f = factorize(n);
    for (std::uint64_t p : cfg.primes) {
      ++checked;
      const SmallDegreeMultiset direct = factor_degrees(n, p, cfg.oracle_bound);
      const SmallDegreeMultiset predicted = p_multiset<std::uint64_t>(f, p);
      if (!(direct == predicted)) {
        mismatches.push_back("n=" + std::to_string(n) + " p=" + std::to_string(p) + ": factored " +
                             to_string(direct) + " predicted " + to_string(predicted));
      }
      if (covers_all_bitset(direct) != is_p_practical<std::uint64_t>(f, p))
        mismatches.push_back("n=" + std::to_string(n) + " p=" + std::to_string(p) + ": coverage verdicts differ");
    }
  }
  if (cfg.format == OutputFormat::kJson) {
    out << nlohmann::json{{"checked", checked}, {"mismatches", mismatches}, {"pass", mismatches.empty()}}.dump()
        << '\n';
  } else {
    for (const auto& m : mismatches) out << "MISMATCH " << m << '\n';
    out << (mismatches.empty() ? "PASS" : "FAIL") << ": " << checked << " (n, p) pairs, " << mismatches.size()
        << " mismatches\n";
  }
  return mismatches.empty() ? kExitOk : kExitMismatch;
}

int run_construct(const RunConfig& cfg, std::ostream& out) {
  const auto members = construct_family(cfg.family);
  bool all_agree = true;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& m : members) {
    all_agree = all_agree && m.agrees();
    if (cfg.format == OutputFormat::kJson) {
      nlohmann::json flags = nlohmann::json::object();
      for (const auto& f : m.flags) flags[f.name] = {{"expected", f.expected}, {"verified", f.verified}};
      nlohmann::json factors = nlohmann::json::array();
      for (const auto& pp : m.n.factors()) factors.push_back({pp.prime, pp.exponent});
      rows.push_back({{"factors", factors}, {"flags", flags}, {"agrees", m.agrees()}});
      continue;
    }
    out << to_string(m.n);
    if (auto v = m.n.value_u64()) out << " = " << *v;
    for (const auto& f : m.flags)
      out << "  " << f.name << '=' << (f.verified ? "true" : "false") << (f.expected == f.verified ? "" : "(!)");
    out << '\n';
  }
  if (cfg.format == OutputFormat::kJson) {
    out << nlohmann::json{{"kind", to_string(cfg.family.kind)}, {"members", rows}, {"pass", all_agree}}.dump() << '\n';
  } else {
    out << (all_agree ? "PASS" : "FAIL") << ": " << members.size() << " members of " << to_string(cfg.family.kind)
        << '\n';
  }
  return all_agree ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.subcommand) {
      case Subcommand::kClassify: return run_classify(cfg, out);
      case Subcommand::kCount: return run_count(cfg, out);
      case Subcommand::kDiff: return run_diff(cfg, out);
      case Subcommand::kWitness: return run_witness(cfg, out);
      case Subcommand::kOracle: return run_oracle(cfg, out);
      case Subcommand::kConstruct: return run_construct(cfg, out);
    }
  } catch (const InclusionViolation& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace divdeg::cli
