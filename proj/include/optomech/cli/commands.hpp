#pragma once

#include "optomech/cli/run_spec.hpp"
#include "optomech/cli/table.hpp"

#include <filesystem>
#include <vector>

namespace optomech::cli {

/// Executes a run. The first table is the command's primary output; some
/// commands add auxiliary tables (window edges, equilibria, steady state).
/// Library errors are rethrown with the failing grid cell in the message.
std::vector<ResultTable> run_command(const RunSpec& spec);

/// Emits every table into `dir` as <table name>.csv plus <table name>.json.
/// Returns the CSV paths written.
std::vector<std::filesystem::path> write_results(const std::vector<ResultTable>& tables,
                                                 const std::filesystem::path& dir);

} // namespace optomech::cli
