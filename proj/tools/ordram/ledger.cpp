#include "ledger.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ordram::cli {

namespace {

constexpr std::size_t kColumns = 11;

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  while (true) {
    const auto tab = line.find('\t');
    out.push_back(line.substr(0, tab));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }
  return out;
}

template <class T>
T parse_number(std::string_view s, const char* column) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string("bad ") + column + " field '" + std::string(s) + "'");
  }
  return value;
}

std::string clean(std::string s) {
  for (char& c : s) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace

std::string format_record(const LedgerRecord& r) {
  std::ostringstream os;
  os << clean(r.timestamp) << '\t' << clean(r.red) << '\t' << clean(r.blue) << '\t' << r.n
     << '\t' << clean(r.verdict) << '\t' << r.seconds << '\t' << r.conflicts << '\t'
     << clean(r.witness) << '\t' << clean(r.version) << '\t' << clean(r.backend) << '\t'
     << r.seed;
  return os.str();
}

LedgerRecord parse_record(std::string_view line) {
  const auto f = split_tabs(line);
  if (f.size() != kColumns) {
    throw std::invalid_argument("expected " + std::to_string(kColumns) + " columns, found " +
                                std::to_string(f.size()));
  }
  LedgerRecord r;
  r.timestamp = f[0];
  r.red = f[1];
  r.blue = f[2];
  r.n = parse_number<int>(f[3], "N");
  r.verdict = f[4];
  r.seconds = std::stod(std::string(f[5]));
  r.conflicts = parse_number<std::uint64_t>(f[6], "conflicts");
  r.witness = f[7];
  r.version = f[8];
  r.backend = f[9];
  r.seed = parse_number<std::uint64_t>(f[10], "seed");
  return r;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void ResultsLedger::append(const LedgerRecord& r) {
  std::lock_guard lock(mu_);
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  if (!out) throw std::runtime_error("cannot open ledger " + path_.string());
  out << format_record(r) << '\n';
}

std::vector<LedgerRecord> ResultsLedger::read() const {
  std::vector<LedgerRecord> out;
  std::ifstream in(path_, std::ios::binary);
  if (!in) return out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    try {
      out.push_back(parse_record(line));
    } catch (const std::exception& e) {
      throw std::invalid_argument(path_.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace ordram::cli
