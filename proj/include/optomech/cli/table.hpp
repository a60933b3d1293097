#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace optomech::cli {

/// Named numeric columns of equal length plus the run metadata.
class ResultTable {
public:
  ResultTable(std::string name, std::vector<std::string> columns);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& column_names() const { return names_; }
  std::size_t rows() const { return data_.empty() ? 0 : data_.front().size(); }
  std::size_t cols() const { return names_.size(); }

  void add_row(const std::vector<double>& row);
  const std::vector<double>& column(std::string_view name) const;
  const std::vector<double>& column(std::size_t index) const { return data_.at(index); }

  nlohmann::json metadata;

private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<std::vector<double>> data_;
};

/// Shortest text that is exactly 17 significant digits, '.' decimal point.
std::string format_number(double value);

/// Writes `path` as CSV (header row, '\n' endings) and the metadata as a
/// JSON document next to it (same stem, .json extension).
/// Throws IoError naming the path on failure.
void emit_csv(const ResultTable& table, const std::filesystem::path& path);

/// CSV text without touching the filesystem.
std::string to_csv(const ResultTable& table);

} // namespace optomech::cli
