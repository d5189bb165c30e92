#pragma once

// Append-only results ledger: one tab-separated record per solver verdict.
// Columns: timestamp, red, blue, N, verdict, seconds, conflicts, witness,
// version, backend, seed. A witness of "-" means none was stored.

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace ordram::cli {

struct LedgerRecord {
  std::string timestamp;  // UTC, ISO 8601
  std::string red;
  std::string blue;
  int n = 0;
  std::string verdict;
  double seconds = 0.0;
  std::uint64_t conflicts = 0;
  std::string witness = "-";
  std::string version;
  std::string backend;
  std::uint64_t seed = 0;
};

std::string format_record(const LedgerRecord& r);
/// Throws std::invalid_argument on a malformed line.
LedgerRecord parse_record(std::string_view line);

std::string utc_timestamp();

class ResultsLedger {
 public:
  explicit ResultsLedger(std::filesystem::path path) : path_(std::move(path)) {}

  const std::filesystem::path& path() const { return path_; }
  void append(const LedgerRecord& r);
  std::vector<LedgerRecord> read() const;

 private:
  std::filesystem::path path_;
  std::mutex mu_;
};

}  // namespace ordram::cli
