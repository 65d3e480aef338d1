#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pyrolace/errors.hpp"

namespace pyrolace::cli {

/// Bad flags, missing files and other problems detected before computing.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Verb { burn, lazy, force, spectrum, product, cospectral, verify, fixtures };

struct Command {
  Verb verb = Verb::fixtures;
  std::optional<std::filesystem::path> graph;
  std::optional<std::filesystem::path> hypergraph;
  std::optional<std::filesystem::path> with;  // second product factor
  std::vector<std::filesystem::path> pair;
  std::string mode;  // empty: the verb's default
  std::string kind = "strong";
  std::optional<std::size_t> n;
  std::uint64_t seed = 0;
  std::size_t max_order = 8;
  std::size_t sweeps = 200;
  std::optional<double> tol;  // empty: the verb's default
  int max_sweeps = 100;
  std::optional<std::filesystem::path> report;
  unsigned threads = 1;
  std::vector<std::string> sequence;
  std::vector<std::string> set;
  std::vector<std::size_t> sizes;
  std::string claim;
  bool all = false;
  bool redundant = false;
  bool timing = true;
  std::string name;
};

/// PYROLACE_FIXTURE_DIR if set, else the directory compiled in.
std::filesystem::path fixture_dir();

/// The path as given if it exists, else the same name under fixture_dir().
/// Throws UsageError when neither exists.
std::filesystem::path resolve_input(const std::filesystem::path& path);

/// Validates argv into a Command. Throws UsageError; help requests print to
/// `out` and return nullopt.
std::optional<Command> parse_args(int argc, const char* const* argv, std::ostream& out);

/// 0 success or holds, 1 violated, 2 usage or input error, 3 solver error.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args then run, mapping every failure to its exit code.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pyrolace::cli
