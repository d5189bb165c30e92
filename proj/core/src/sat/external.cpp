#include "ordram/sat/external.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace ordram::sat {

namespace {

std::filesystem::path unique_temp(const std::string& suffix) {
  static std::atomic<unsigned> counter{0};
  const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
  return std::filesystem::temp_directory_path() /
         ("ordram-" + std::to_string(::getpid()) + "-" + std::to_string(stamp) + "-" +
          std::to_string(counter++) + suffix);
}

std::vector<std::string> split_command(const std::string& command) {
  std::istringstream in(command);
  std::vector<std::string> parts;
  std::string token;
  while (in >> token) parts.push_back(token);
  return parts;
}

struct TempFiles {
  std::filesystem::path cnf;
  std::filesystem::path out;
  ~TempFiles() {
    std::error_code ec;
    std::filesystem::remove(cnf, ec);
    std::filesystem::remove(out, ec);
  }
};

}  // namespace

ExternalResult run_external_solver(const std::string& command, const Cnf& cnf,
                                   const Budget& budget) {
  ExternalResult result;
  const auto args = split_command(command);
  if (args.empty()) {
    result.diagnostic = "empty external solver command";
    return result;
  }
  TempFiles files{unique_temp(".cnf"), unique_temp(".out")};
  {
    std::ofstream f(files.cnf, std::ios::binary);
    f << write_dimacs(cnf);
    if (!f) {
      result.diagnostic = "cannot write " + files.cnf.string();
      return result;
    }
  }

  const auto started = std::chrono::steady_clock::now();
  const pid_t pid = ::fork();
  if (pid < 0) {
    result.diagnostic = "fork failed";
    return result;
  }
  if (pid == 0) {
    const int fd = ::open(files.out.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
    if (fd < 0) ::_exit(127);
    ::dup2(fd, STDOUT_FILENO);
    ::close(fd);
    std::vector<char*> argv;
    for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
    std::string cnf_path = files.cnf.string();
    argv.push_back(cnf_path.data());
    argv.push_back(nullptr);
    ::execvp(argv[0], argv.data());
    ::_exit(127);
  }

  int status = 0;
  bool timed_out = false;
  while (true) {
    const pid_t r = ::waitpid(pid, &status, WNOHANG);
    if (r == pid) break;
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    if (elapsed.count() > budget.seconds) {
      ::kill(pid, SIGKILL);
      ::waitpid(pid, &status, 0);
      timed_out = true;
      break;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
  result.seconds = elapsed.count();
  if (timed_out) {
    result.diagnostic = "external solver exceeded " + std::to_string(budget.seconds) + " s";
    return result;
  }
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (result.exit_code == 127) {
    result.diagnostic = "cannot execute '" + args[0] + "'";
    return result;
  }

  std::ifstream in(files.out, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  auto parsed = parse_solver_output(text.str(), cnf.variable_count);
  result.status = parsed.status;
  result.model = std::move(parsed.model);
  if (result.status == Status::Unknown) {
    result.diagnostic = "no decisive 's' line (exit code " + std::to_string(result.exit_code) + ")";
  }
  return result;
}

std::optional<std::string> external_solver_from_env() {
  const char* v = std::getenv(kExternalSolverEnv);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

}  // namespace ordram::sat
