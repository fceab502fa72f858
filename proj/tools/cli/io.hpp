#pragma once

#include <chrono>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fracdyn::cli {

/// Malformed or unreadable input; `line` is 1-based, 0 when not line-specific.
class InputError : public std::runtime_error {
 public:
  InputError(std::string source, std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Shortest decimal text that parses back to the same double.
std::string format_real(double value);

std::optional<double> parse_real(std::string_view text) noexcept;

/// Reads one numeric column. A first line that does not parse as numbers is
/// a header; the column is then `column`, else "x", else the only column.
/// Headerless files use the first field of each line. Blank lines are skipped.
std::vector<double> read_series(std::istream& in, const std::optional<std::string>& column,
                                const std::string& source);

std::vector<double> read_series_file(const std::string& path,
                                     const std::optional<std::string>& column);

/// key=value lines describing how an output was produced.
struct RunManifest {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::chrono::duration<double> wall_clock{0.0};

  void write(std::ostream& out) const;
  void write_file(const std::string& path) const;
};

std::string_view tool_version() noexcept;

}  // namespace fracdyn::cli
