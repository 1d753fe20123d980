#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lensurf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Format { Json, Csv, Pretty };

struct RunConfig {
  std::string command;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> q;
  std::int64_t kappa = 2;
  std::optional<int> n;
  std::optional<std::pair<int, int>> n_range;
  int max_n = 8;  // verify-theorem refuses larger n
  std::optional<std::string> input;   // "-" reads stdin
  std::optional<std::string> output;
  std::uint64_t budget = 100'000'000;
  std::string coords = "haken";
  Format format = Format::Json;
};

/// "a..b" with 1 <= a <= b. Returns nullopt for anything else.
std::optional<std::pair<int, int>> parse_range(const std::string& text);

/// Worker cap from LENSURF_THREADS, else the hardware concurrency; at least 1.
unsigned worker_limit();

/// Parses argv-style arguments (without the program name) into a config.
/// Throws nothing; usage problems come back as kExitUsage with a message on
/// `err`, and --help output goes to `out` with kExitOk.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes an already-parsed config.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace lensurf::cli
