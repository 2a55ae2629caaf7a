#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mukai::cli {

enum ExitCode : int {
  kOk = 0,
  kInputViolation = 2,
  kCertificationFailure = 3,
  kSearchExhausted = 4,
};

enum class OutputFormat { kDefault, kJson, kCsv };

struct RunConfig {
  std::string subcommand;

  // input paths (or inline JSON)
  std::string gram_path;
  std::string lattice;
  std::string v;
  std::string w;
  std::string s;
  std::string matrix;

  // numeric flags
  std::optional<long> d;
  long d_min = 1;
  long d_max = 1;
  long i = 1;
  long k = 1;
  long n_max = 10;
  long bound = 10;
  long spherical_dim = 2;
  std::string complement = "yes";
  std::string t_min = "-1";
  std::string t_max = "1";
  std::string step = "1";
  bool full = false;

  OutputFormat format = OutputFormat::kDefault;
  double tolerance = 1e-9;
};

/// Default tolerance, overridden by MUKAI_ENTROPY_TOL when set.
double default_tolerance();

/// Parses argv-style arguments (without the program name). Returns nullopt
/// after printing help or a usage error; `exit_code` then holds the status.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out,
                                    std::ostream& err, int& exit_code);

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + dispatch.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mukai::cli
