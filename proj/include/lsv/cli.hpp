#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lsv/oracle.hpp"
#include "lsv/params.hpp"

namespace lsv::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kNoBoundState = 2,
  kUsage = 64,
};

enum class OutputFormat { csv, table };

struct RunConfig {
  Background background;
  Sector sector = Sector::coulomb;
  std::vector<int> n_values;
  std::vector<int> l_values;
  std::vector<int> s_values;
  std::optional<double> omega;
  int points = 4000;                  ///< oracle cells
  std::optional<double> rho_max;      ///< oracle / wavefunction extent override
  int rows = 1000;                    ///< wavefunction samples
  bool normalize = false;
  std::string output;                 ///< empty: stdout
  OutputFormat format = OutputFormat::csv;
};

/// Thrown for malformed flags or selections; maps to exit code 64.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comma-separated integers and inclusive ranges "a:b", e.g. "-1:1,4".
/// Throws UsageError on empty or malformed input.
std::vector<int> parse_int_list(std::string_view text);
/// Like parse_int_list but only "+1" / "-1" (or "1") entries.
std::vector<int> parse_spin_list(std::string_view text);

/// Shortest round-trip-safe rendering with 17 significant digits, '.' as
/// decimal point, independent of the global locale.
std::string format_real(double value);

/// Row-oriented result table written as RFC-4180 CSV (LF endings) or as an
/// aligned plain-text table.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& os, OutputFormat format) const;
};

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_wavefunction(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: `lsv-spectra <spectrum|verify|wavefunction> [flags]`.
/// `args` excludes the program name. Output goes to `out` unless --output is set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsv::cli
