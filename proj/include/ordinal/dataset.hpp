#pragma once

#include <filesystem>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordinal/simulate.hpp"

namespace ordinal {

/// Raised for malformed dataset files; the message names the row and column.
class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `ID,<theme1>,<theme2>,...` then rows 0..n-1 with fixed `decimals` places.
/// All samples must have the same length.
std::string write_dataset_csv(std::span<const SampleSet> samples, int decimals = 4);

std::vector<SampleSet> read_dataset_csv(std::istream& in);
std::vector<SampleSet> read_dataset_csv(const std::filesystem::path& path);

/// Tab-separated preview of the first `rows` rows.
std::string format_head(std::span<const SampleSet> samples, std::size_t rows, int decimals = 4);

}  // namespace ordinal
