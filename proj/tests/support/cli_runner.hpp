// Helper for tests that drive the command-line binary. The binary path is
// injected at compile time through S3GAS_CLI_PATH.

#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace s3gas::testing {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline CliResult run_cli(const std::string& args) {
  namespace fs = std::filesystem;
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path();
  const fs::path out_path =
      dir / ("s3gas_test_out_" + std::to_string(++counter) + ".txt");
  const fs::path err_path =
      dir / ("s3gas_test_err_" + std::to_string(counter) + ".txt");

  const std::string command = std::string(S3GAS_CLI_PATH) + " " + args + " > " +
                              out_path.string() + " 2> " + err_path.string();
  const int raw = std::system(command.c_str());
  CliResult result;
  result.exit_code = (raw == -1) ? -1 : WEXITSTATUS(raw);
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  fs::remove(out_path);
  fs::remove(err_path);
  return result;
}

}  // namespace s3gas::testing
