#include "ordinal/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include <fmt/format.h>

namespace ordinal {

namespace {

std::string quote_field(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (const char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

// RFC 4180 fields of one physical line (no embedded newlines supported).
std::vector<std::string> split_fields(const std::string& line, std::size_t row) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"' && cur.empty()) {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) {
    throw DatasetError(fmt::format("row {}: unterminated quoted field", row));
  }
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace

std::string write_dataset_csv(std::span<const SampleSet> samples, int decimals) {
  std::size_t n = samples.empty() ? 0 : samples.front().values.size();
  for (const auto& s : samples) {
    if (s.values.size() != n) {
      throw std::invalid_argument("write_dataset_csv: themes have different lengths");
    }
  }
  std::string csv = "ID";
  for (const auto& s : samples) {
    csv += ',';
    csv += quote_field(s.theme);
  }
  csv += '\n';
  auto out = std::back_inserter(csv);
  for (std::size_t i = 0; i < n; ++i) {
    fmt::format_to(out, "{}", i);
    for (const auto& s : samples) {
      fmt::format_to(out, ",{:.{}f}", s.values[i] + 0.0, decimals);
    }
    csv += '\n';
  }
  return csv;
}

std::vector<SampleSet> read_dataset_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw DatasetError("row 0 (header): file is empty");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_fields(line, 0);
  if (header.size() < 2 || header[0] != "ID") {
    throw DatasetError("row 0 (header): expected 'ID,<theme>,...'");
  }
  std::vector<SampleSet> samples;
  for (std::size_t c = 1; c < header.size(); ++c) {
    samples.push_back({header[c], {}});
  }
  std::size_t row = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line, row);
    if (fields.size() != header.size()) {
      throw DatasetError(fmt::format("line {} (row {}): expected {} columns, found {}", line_no, row,
                                     header.size(), fields.size()));
    }
    for (std::size_t c = 1; c < fields.size(); ++c) {
      const std::string& f = fields[c];
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc() || ptr != f.data() + f.size() || f.empty() || !std::isfinite(v)) {
        throw DatasetError(fmt::format("line {} (row {}), column '{}': '{}' is not a finite number",
                                       line_no, row, header[c], f));
      }
      samples[c - 1].values.push_back(v);
    }
    ++row;
  }
  return samples;
}

std::vector<SampleSet> read_dataset_csv(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) {
    throw std::system_error(std::make_error_code(std::errc::no_such_file_or_directory),
                            "cannot open dataset '" + path.string() + "'");
  }
  return read_dataset_csv(file);
}

std::string format_head(std::span<const SampleSet> samples, std::size_t rows, int decimals) {
  std::string text = "ID";
  for (const auto& s : samples) {
    text += '\t';
    text += s.theme;
  }
  text += '\n';
  std::size_t n = 0;
  for (const auto& s : samples) n = std::max(n, s.values.size());
  auto out = std::back_inserter(text);
  for (std::size_t i = 0; i < std::min(rows, n); ++i) {
    fmt::format_to(out, "{}", i);
    for (const auto& s : samples) {
      if (i < s.values.size()) {
        fmt::format_to(out, "\t{:.{}f}", s.values[i] + 0.0, decimals);
      } else {
        text += "\t";
      }
    }
    text += '\n';
  }
  return text;
}

}  // namespace ordinal
