#ifndef WORDMAP_CLI_COMMANDS_HPP
#define WORDMAP_CLI_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"
#include "wordmap/numtheory.hpp"
#include "wordmap/oracle.hpp"

namespace wordmap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitBudget = 3;

/// Bad flag combinations; reported with exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  Schema schema;
  std::vector<ReportRecord> records;
  int exit_code = kExitOk;
};

struct DecomposeArgs {
  Sign eps = Sign::plus();
  unsigned n = 2;
  std::uint64_t q = 2;
  std::string partition;
  bool projective = false;
  bool oracle = false;
};

CommandResult run_decompose(const DecomposeArgs& args);

struct BoundArgs {
  std::string theorem;  // 1torus, th1, th2, main, ss
  Sign eps = Sign::plus();
  std::optional<unsigned> n;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> p;
  unsigned l = 1;
  std::optional<std::uint64_t> M;
  bool projective = false;
  bool exact = false;
  EnumerationBudget budget;
};

CommandResult run_bound(const BoundArgs& args);

/// Names accepted by run_verify, in documentation order.
const std::vector<std::string>& verify_suites();

CommandResult run_verify(const std::string& suite, const EnumerationBudget& budget);

struct ScanArgs {
  std::string theorem;  // th2, 1torus, example
  Sign eps = Sign::plus();
  bool projective = false;
  bool exact = false;
  std::vector<unsigned> n;
  std::vector<std::uint64_t> q;
  std::vector<std::uint64_t> M;
  std::vector<std::string> c;
  EnumerationBudget budget;
};

CommandResult run_scan(const ScanArgs& args);

}  // namespace wordmap::cli

#endif  // WORDMAP_CLI_COMMANDS_HPP
