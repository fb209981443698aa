#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "tzero/quadfield.hpp"

namespace tzero {

struct RunConfig {
  std::string command;
  std::optional<unsigned long> p;
  int precision = 32;
  std::optional<long> disc;
  std::optional<long> d;
  std::optional<std::vector<long>> curve;
  std::optional<long> ap;
  std::string psi = "trivial";
  std::optional<long> level;
  std::optional<int> n;
  std::optional<int> k;
  int branch = 0;
  long at = 0;
  int order = 2;
  std::optional<int> nodes;
  std::optional<int> target;
  SqrtLift lift = SqrtLift::least_residue;
  std::optional<std::string> out;
  std::optional<std::string> cache;
};

/// A config, or the exit code to return right away (help, parse errors).
std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv, std::ostream& out,
                                                std::ostream& err);

/// 0 on PASS/success, 1 on a failed verification, 2 on configuration errors.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tzero
