#pragma once

// The `rzr` command line: configuration, dispatch, and document rendering.

#include <string>

#include "rzr/kernel_solver.hpp"

namespace rzr::cli {

enum class Command { Basis, Matrix, Series, Aux, Verify, Check };
enum class OutputFormat { Json, Text, Latex };

struct RunConfig {
  Command command = Command::Basis;
  /// "dump" for matrix; "lemma54", "fib8" or "closedforms" for check.
  std::string subcommand;
  int m = 1;
  long precision = 60;
  std::string sequence = "fibonacci";
  OutputFormat format = OutputFormat::Text;
  RelationStyle style = RelationStyle::PhiPsi;
  /// Include the k^2-coefficient expansion in `matrix dump`.
  bool scalar = false;
  std::string out_path;
};

struct RunResult {
  /// 0 success, 1 verification failure, 2 usage error.
  int exit_code = 0;
  std::string document;
  std::string diagnostics;
};

RunResult run(const RunConfig& config);

/// Parses argv, runs, and writes the document to stdout or --out.
int main_entry(int argc, char** argv);

}  // namespace rzr::cli
