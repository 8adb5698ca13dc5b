#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nldg::harness {

struct RunConfig {
  std::string command;  // steady | evolve | verify | ac-study
  std::string example = "1";
  std::string scheme = "nip";
  int k = 1;
  std::optional<double> alpha;
  std::string delta;  // literal, "pi/6", "2.5h", "sqrt_h"; empty = example default
  std::vector<int> Ns;
  std::optional<double> mu;  // penalty constant c
  std::optional<double> cfl;
  std::string flux;
  std::optional<double> sigma;
  std::string output;  // empty = stdout
  std::uint64_t seed = 1;
  std::string quantity = "all";
  std::vector<double> times;
  std::string errors_output;
  std::optional<int> ref_N;
  std::string tableau = "cfn64";
  int trials = 1000;
};

// Parsed forms of the string-valued fields.
double parse_real(const std::string& s);
std::vector<int> parse_int_list(const std::string& s);
std::vector<double> parse_real_list(const std::string& s);

// Throws std::invalid_argument on any precondition violation.
void validate(const RunConfig& cfg);

struct Outputs {
  std::string main;    // written to cfg.output or stdout
  std::string errors;  // evolve only, written to cfg.errors_output
};

Outputs run_command(const RunConfig& cfg);

// Validate, compute, write files atomically; returns the process exit status.
int run(const RunConfig& cfg);

}  // namespace nldg::harness
