// Command-line driver: runs one configured computation and writes its
// CSV tables plus JSON metadata sidecars.
//
// Exit codes: 0 success, 1 config error, 2 numerical failure, 3 I/O error.

#include "optomech/cli/commands.hpp"
#include "optomech/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Driven optomechanical cavity simulations"};
  std::string config_path;
  std::string output_dir;
  bool quiet = false;
  app.add_option("config", config_path, "JSON run configuration")->required();
  app.add_option("--output-dir", output_dir, "Override the output_dir of the config");
  app.add_flag("--quiet", quiet, "Suppress the summary of written files");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  using namespace optomech;
  try {
    cli::RunSpec spec = cli::load_config(config_path);
    if (!output_dir.empty()) spec.output_dir = output_dir;
    const auto tables = cli::run_command(spec);
    const auto written = cli::write_results(tables, spec.output_dir);
    if (!quiet) {
      for (std::size_t i = 0; i < written.size(); ++i) {
        std::cout << written[i].string() << " (" << tables[i].rows() << " rows)\n";
      }
    }
    return 0;
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const ParameterError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const cli::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 3;
  }
}
