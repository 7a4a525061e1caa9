#include "report.hpp"

#include <chrono>
#include <ctime>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace wordmap::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Vacuous: return "vacuous";
    case Status::Mismatch: return "mismatch";
    case Status::BudgetExceeded: return "budget-exceeded";
  }
  return "ok";
}

namespace {

const std::string* find(const Fields& fields, const std::string& key) {
  for (const auto& [k, v] : fields) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string csv_escape(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string json_line(const ReportRecord& record) {
  // ordered_json keeps insertion order so identical runs give identical bytes.
  nlohmann::ordered_json j;
  j["command"] = record.command;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : record.inputs) j["inputs"][k] = v;
  j["outputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : record.outputs) j["outputs"][k] = v;
  j["status"] = to_string(record.status);
  if (!record.timestamp.empty()) j["timestamp"] = record.timestamp;
  return j.dump();
}

std::string csv_header(const Schema& schema, bool timestamp) {
  std::string line = "command";
  for (const auto& k : schema.input_keys) line += "," + k;
  for (const auto& k : schema.output_keys) line += "," + k;
  line += ",status";
  if (timestamp) line += ",timestamp";
  return line;
}

std::string csv_row(const Schema& schema, const ReportRecord& record, bool timestamp) {
  std::string line = csv_escape(record.command);
  for (const auto& k : schema.input_keys) {
    const auto* v = find(record.inputs, k);
    line += "," + (v ? csv_escape(*v) : std::string());
  }
  for (const auto& k : schema.output_keys) {
    const auto* v = find(record.outputs, k);
    line += "," + (v ? csv_escape(*v) : std::string());
  }
  line += "," + to_string(record.status);
  if (timestamp) line += "," + record.timestamp;
  return line;
}

void emit(std::ostream& out, const Schema& schema, const std::vector<ReportRecord>& records,
          const EmitOptions& options) {
  if (options.format == Format::Csv) {
    out << csv_header(schema, options.timestamp) << '\n';
    for (const auto& r : records) out << csv_row(schema, r, options.timestamp) << '\n';
  } else {
    for (const auto& r : records) out << json_line(r) << '\n';
  }
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace wordmap::cli
