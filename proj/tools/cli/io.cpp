#include "cli/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#ifndef FRACDYN_VERSION
#define FRACDYN_VERSION "0.0.0"
#endif

namespace fracdyn::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

InputError::InputError(std::string source, std::size_t line, const std::string& message)
    : std::runtime_error(line ? source + ":" + std::to_string(line) + ": " + message
                              : source + ": " + message),
      line_(line) {}

std::string format_real(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return ec == std::errc{} ? std::string(buf.data(), ptr) : std::string("nan");
}

std::optional<double> parse_real(std::string_view text) noexcept {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::vector<double> read_series(std::istream& in, const std::optional<std::string>& column,
                                const std::string& source) {
  std::vector<double> series;
  std::optional<std::size_t> index;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    const auto fields = split_fields(text);

    if (!index) {
      bool numeric = true;
      for (auto f : fields) numeric = numeric && parse_real(f).has_value();
      if (numeric) {
        if (column) throw InputError(source, line_no, "--column given but the file has no header");
        index = 0;
      } else {
        const std::string wanted = column.value_or("x");
        for (std::size_t i = 0; i < fields.size(); ++i) {
          if (fields[i] == wanted) index = i;
        }
        if (!index && !column && fields.size() == 1) index = 0;
        if (!index) throw InputError(source, line_no, "no column named '" + wanted + "'");
        continue;
      }
    }

    if (*index >= fields.size()) {
      throw InputError(source, line_no, "expected at least " + std::to_string(*index + 1) + " fields");
    }
    const auto value = parse_real(fields[*index]);
    if (!value) {
      throw InputError(source, line_no, "not a finite number: '" + std::string(fields[*index]) + "'");
    }
    series.push_back(*value);
  }
  if (in.bad()) throw InputError(source, 0, "read failure");
  return series;
}

std::vector<double> read_series_file(const std::string& path,
                                     const std::optional<std::string>& column) {
  std::ifstream in(path);
  if (!in) throw InputError(path, 0, "cannot open file");
  return read_series(in, column, path);
}

void RunManifest::write(std::ostream& out) const {
  out << "subcommand=" << subcommand << '\n';
  out << "version=" << tool_version() << '\n';
  for (const auto& [key, value] : parameters) out << "param." << key << '=' << value << '\n';
  for (const auto& path : inputs) out << "input=" << path << '\n';
  for (const auto& path : outputs) out << "output=" << path << '\n';
  out << "wall_clock_seconds=" << format_real(wall_clock.count()) << '\n';
}

void RunManifest::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw InputError(path, 0, "cannot write manifest");
  write(out);
}

std::string_view tool_version() noexcept { return FRACDYN_VERSION; }

}  // namespace fracdyn::cli
