#include "optomech/cli/table.hpp"

#include "optomech/cli/run_spec.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace optomech::cli {

ResultTable::ResultTable(std::string name, std::vector<std::string> columns)
    : name_(std::move(name)), names_(std::move(columns)), data_(names_.size()) {}

void ResultTable::add_row(const std::vector<double>& row) {
  if (row.size() != names_.size()) {
    throw std::invalid_argument("row width does not match column count of table " + name_);
  }
  for (std::size_t i = 0; i < row.size(); ++i) data_[i].push_back(row[i]);
}

const std::vector<double>& ResultTable::column(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::out_of_range("no column " + std::string(name) + " in " + name_);
  return data_[static_cast<std::size_t>(it - names_.begin())];
}

std::string format_number(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, result.ptr);
}

std::string to_csv(const ResultTable& table) {
  std::string out;
  const auto& names = table.column_names();
  for (std::size_t c = 0; c < names.size(); ++c) {
    if (c) out += ',';
    out += names[c];
  }
  out += '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.cols(); ++c) {
      if (c) out += ',';
      out += format_number(table.column(c)[r]);
    }
    out += '\n';
  }
  return out;
}

void emit_csv(const ResultTable& table, const std::filesystem::path& path) {
  const auto write = [](const std::filesystem::path& target, const std::string& text) {
    std::ofstream out(target, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + target.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing " + target.string());
  };
  write(path, to_csv(table));
  auto sidecar = path;
  sidecar.replace_extension(".json");
  write(sidecar, table.metadata.dump(2) + "\n");
}

} // namespace optomech::cli
