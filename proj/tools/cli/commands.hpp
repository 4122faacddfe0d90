#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cocycle/gauss_rat.hpp"
#include "cocycle/scalar.hpp"
#include "report.hpp"

namespace cocycle::cli {

struct RunConfig {
  std::string command;
  RingTag ring = RingTag::ratfun;
  bool ring_given = false;
  std::optional<GaussRat> specialize;  // value of A
  Report::Format format = Report::Format::text;

  // infiltrate / check-d2d1
  std::string idl;
  std::string identity;
  bool check_d2d1 = false;
  std::string model = "bracket";
  int trials = 10;
  unsigned seed = 1;

  std::string pair = "bracket";  // a pair config path or the builtin name "bracket"
  std::string cocycle;
  int degree = 2;
  int max_n = 5;

  std::vector<std::string> braids;
  int strands = 0;  // 0: one more than the largest generator index
  bool deformed = false;
  bool compare_oracle = false;
  bool raw = false;
};

/// Parses "A=<scalar>" into the value of A.
GaussRat parse_specialization(const std::string& text);

/// Validates the configuration, runs the command and returns the exit code:
/// 0 when every verification passes, 1 when one fails, 2 on bad input.
int run(RunConfig cfg, std::ostream& out, std::ostream& err);

}  // namespace cocycle::cli
