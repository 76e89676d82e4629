#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace spiraldet::cli {

enum class Command { Gen, Det, Verify, Reduce, Seq, Funceq, Bench };
enum class Format { Json, Csv, Latex, Text };

struct CliConfig {
  Command command = Command::Gen;
  std::size_t n = 4;
  std::size_t n_max = 6;
  std::string family = "additive";
  int theorem = 1;
  std::string seq = "inward";
  std::string relation;  // empty: all relations
  std::string kind = "power";
  double alpha = 1.0;
  bool imaginary = false;
  double c1 = 1.0;
  double c2 = -1.0;
  std::size_t trials = 20;
  bool trials_set = false;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  Format format = Format::Json;
  std::string out_path;
};

/// Flag grammar printed on usage errors.
std::string usage();

/// Parses argv, runs the command and writes its report to `out` (or to
/// --out). Returns 0 when every check passed, 1 on a verification failure
/// and 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace spiraldet::cli
