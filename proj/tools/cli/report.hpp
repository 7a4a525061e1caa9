#ifndef WORDMAP_CLI_REPORT_HPP
#define WORDMAP_CLI_REPORT_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace wordmap::cli {

enum class Status { Ok, Vacuous, Mismatch, BudgetExceeded };

std::string to_string(Status s);

/// Ordered key/value pairs; every value is an exact decimal or "num/den" string, except
/// keys ending in "_approx".
using Fields = std::vector<std::pair<std::string, std::string>>;

struct ReportRecord {
  std::string command;
  Fields inputs;
  Fields outputs;
  Status status = Status::Ok;
  std::string timestamp;  // empty when suppressed
};

/// Column layout shared by every record of one emission.
struct Schema {
  std::string command;
  std::vector<std::string> input_keys;
  std::vector<std::string> output_keys;
};

enum class Format { Json, Csv };

struct EmitOptions {
  Format format = Format::Json;
  bool timestamp = true;
};

/// JSON: one object per line. CSV: a header row, then one row per record; columns are
/// command, inputs, outputs, status and (unless suppressed) timestamp.
void emit(std::ostream& out, const Schema& schema, const std::vector<ReportRecord>& records,
          const EmitOptions& options);

std::string json_line(const ReportRecord& record);
std::string csv_header(const Schema& schema, bool timestamp);
std::string csv_row(const Schema& schema, const ReportRecord& record, bool timestamp);

/// UTC, ISO 8601 to the second.
std::string utc_timestamp();

}  // namespace wordmap::cli

#endif  // WORDMAP_CLI_REPORT_HPP
