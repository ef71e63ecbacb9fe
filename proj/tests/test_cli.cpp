#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "divdeg/cli.hpp"

using namespace divdeg;
using namespace divdeg::cli;

namespace {

RunConfig parse(std::vector<std::string> args) {
  args.insert(args.begin(), "divdeg");
  return parse_args(args);
}

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output execute(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(parse(std::move(args)), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse examples") {
  auto c = parse({"classify", "45", "--primes", "2,3"});
  CHECK(c.subcommand == Subcommand::kClassify);
  CHECK(c.n == 45);
  CHECK(c.primes == std::vector<std::uint64_t>{2, 3});
  CHECK(c.format == OutputFormat::kJson);

  auto k = parse({"count", "--max", "1e6", "--classes", "phi,lambda"});
  CHECK(k.max == 1000000);
  CHECK(k.checkpoints == std::vector<std::uint64_t>{10, 100, 1000, 10000, 100000, 1000000});
  CHECK(k.classes.size() == 2);
  CHECK(k.format == OutputFormat::kCsv);

  try {
    parse({"classify", "10", "--primes", "2,9"});
    FAIL("expected a usage error");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("9 is not prime") != std::string::npos);
  }
}

TEST_CASE("parse errors name the flag") {
  auto message = [](std::vector<std::string> args) {
    try {
      parse(std::move(args));
    } catch (const UsageError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message({"count", "--max", "12x"}).find("--max") != std::string::npos);
  CHECK(message({"count", "--max", "100", "--checkpoints", "50,10"}).find("--checkpoints") != std::string::npos);
  CHECK(message({"count", "--max", "100", "--checkpoints", "1000"}).find("--checkpoints") != std::string::npos);
  CHECK(message({"count", "--max", "100", "--classes", "phi,mu"}).find("--classes") != std::string::npos);
  CHECK(message({"count", "--max", "100", "--bogus"}) != "no error");
  CHECK(message({"classify", "0"}).find("n") != std::string::npos);
  CHECK(message({"construct", "lemma63"}).find("--p") != std::string::npos);
  CHECK(message({"oracle", "--max", "5000"}).find("oracle bound") != std::string::npos);
  CHECK(message({}) != "no error");
  CHECK_THROWS_AS(parse({"--help"}), HelpRequested);
  CHECK_THROWS_AS(parse({"count", "--help"}), HelpRequested);
}

TEST_CASE("parse_count") {
  CHECK(parse_count("1e6", "--max") == 1000000);
  CHECK(parse_count("25", "--max") == 25);
  CHECK(parse_count("3E2", "--max") == 300);
  CHECK_THROWS_AS(parse_count("", "--max"), UsageError);
  CHECK_THROWS_AS(parse_count("1e", "--max"), UsageError);
  CHECK_THROWS_AS(parse_count("1e30", "--max"), UsageError);
  CHECK_THROWS_AS(parse_count("-4", "--max"), UsageError);
}

TEST_CASE("environment overrides and flag precedence") {
  ::setenv("DIVDEG_SEARCH_CAP", "12345", 1);
  ::setenv("DIVDEG_ORACLE_BOUND", "4096", 1);
  auto env_only = parse({"witness", "9"});
  CHECK(env_only.search_cap == 12345);
  CHECK(env_only.oracle_bound == 4096);
  CHECK(parse({"witness", "9", "--cap", "99"}).search_cap == 99);
  CHECK(parse({"oracle", "--max", "3000"}).max == 3000);
  ::unsetenv("DIVDEG_SEARCH_CAP");
  ::unsetenv("DIVDEG_ORACLE_BOUND");
  CHECK(parse({"witness", "9"}).search_cap == kDefaultSearchCap);
}

TEST_CASE("classify output") {
  auto r = execute({"classify", "9"});
  CHECK(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == "9");
  CHECK(j["lambda_practical"] == false);
  CHECK(j["weakly_phi_practical"] == true);
  CHECK(j["factors"] == nlohmann::json::parse("[[3,2]]"));
  CHECK(j["p_practical"].contains("2"));
  for (const char* key : {"practical", "phi_practical", "two_dense", "strictly_two_dense"}) CHECK(j.contains(key));

  auto big = execute({"classify", "1305"});
  CHECK(nlohmann::json::parse(big.out)["lambda_practical"] == true);
}

TEST_CASE("json records round trip") {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    auto rec = classify(factorize(n), {2, 3, 7});
    auto j = record_to_json(rec);
    REQUIRE(record_from_json(nlohmann::json::parse(j.dump())) == rec);
  }
  FactoredInteger six({{3, 2}, {5, 1}, {17, 1}, {257, 1}, {65537, 1}, {2147483647, 1}});
  auto rec = classify(six, {2});
  CHECK(record_from_json(record_to_json(rec)) == rec);
  auto broken = record_to_json(rec);
  broken["n"] = "12";
  CHECK_THROWS_AS(record_from_json(broken), std::invalid_argument);
}

TEST_CASE("count output is identical across runs and thread counts") {
  auto a = execute({"count", "--max", "20000", "--classes", "phi,lambda,p:2", "--threads", "1"});
  auto b = execute({"count", "--max", "20000", "--classes", "phi,lambda,p:2", "--threads", "4", "--chunk", "999"});
  auto c = execute({"count", "--max", "20000", "--classes", "phi,lambda,p:2", "--threads", "1"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out.rfind("X,phi,lambda,p:2\n10,6,6,6\n100,28,29,34\n", 0) == 0);
}

TEST_CASE("other subcommands") {
  auto d = execute({"diff", "--max", "50", "--list"});
  CHECK(d.code == kExitOk);
  CHECK(d.out == "lambda \\ phi up to 50: 1\n45\n");

  auto w = execute({"witness", "9"});
  CHECK(w.code == kExitOk);
  CHECK(w.out.find("p = 2") != std::string::npos);
  CHECK(w.out.find("3\t2\t2\n") != std::string::npos);
  CHECK(w.out.find("9\t6\t6\n") != std::string::npos);

  auto o = execute({"oracle", "--max", "64", "--primes", "2,3"});
  CHECK(o.code == kExitOk);
  CHECK(o.out.find("PASS") != std::string::npos);

  auto k = execute({"construct", "prop62_podd", "--p", "3", "--format", "json"});
  CHECK(k.code == kExitOk);
  CHECK(nlohmann::json::parse(k.out)["pass"] == true);

  auto capped = execute({"witness", "1000", "--cap", "10"});
  CHECK(capped.code == kExitUsage);
  CHECK(capped.err.find("cap") != std::string::npos);
}
