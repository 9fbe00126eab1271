#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hspsim {

/// Parsed command-line configuration. Every run is fully determined by its
/// canonical string (reparsing it yields the same configuration), which is
/// embedded in each output record for reproducibility.
struct RunConfig {
  std::string command;
  std::string group = "Z2xZ2";
  std::string subgroup;          // generator spec; empty = trivial subgroup
  int q = 0;                     // alphabet size; 0 derives it from [G:H]
  std::string labeling;          // comma-separated labels; empty = identity
  int character = 1;
  std::string unitary = "group-qft";  // group-qft | cyclic-qft | random
  std::string oracle = "phase";       // phase | shift
  std::uint64_t seed = 0;
  int samples = 1;
  bool exact = false;
  std::string out_path;
  std::string secret;   // bv: bit string
  int n = 0;            // bv: dimension
  bool exhaustive = false;
  std::string perturb;  // report: deliberately broken fixture injection
};

RunConfig parse_cli_config(const std::vector<std::string>& args);
std::string canonical_config(const RunConfig& cfg);

/// Exit codes: 0 success, 1 usage or invalid input, 2 promise violation,
/// 3 report mismatch against the expected summary values.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hspsim
