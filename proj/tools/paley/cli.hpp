#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "paley/io.hpp"
#include "paley/strong.hpp"

namespace paley::cli {

enum class Command { lebesgue, fine, counterexample, divergence, hardy, kernel_dump, verify };

struct Caps {
  unsigned grid_2d = 12;           // max resolution of a materialized 2D grid
  unsigned grid_1d = 24;           // max resolution of a 1D grid or table
  std::uint64_t lebesgue = 4096;   // max n for the grid-based Lebesgue sweep
  unsigned divergence = kDivergenceCap;
};

struct RunConfig {
  Command command = Command::verify;
  std::optional<OutputFormat> format;  // per-command default when unset
  std::optional<std::string> output_path;
  std::optional<int> threads;
  Caps caps;

  // lebesgue
  std::uint64_t lebesgue_max = 4096;
  // fine
  std::uint64_t fine_max_n = std::uint64_t{1} << 20;
  FineVariant fine_variant = FineVariant::variation;
  // counterexample / hardy
  unsigned n = 0;
  std::string dump = "summary";  // summary | grid | spectrum
  unsigned identity_max_n = 6;
  std::string family = "counterexample";
  std::optional<double> hardy_p;
  // divergence
  unsigned n_min = 1;
  unsigned n_max = 10;
  std::string phi = "log";
  double alpha = 0.5;
  LogBase log_base = LogBase::natural;
  bool oracle = false;
  // kernel-dump
  std::uint64_t kernel_n = 1;
  std::optional<unsigned> resolution;
  std::string construction = "recursive";
  bool spectrum = false;
  // verify
  std::string suite = "all";
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitCapRefused = 2;

struct ParseOutcome {
  std::optional<RunConfig> config;  // empty when parsing ended the run (help or error)
  int exit_code = kExitOk;
};

/// Parses argv. Help text and diagnostics go to out / err.
ParseOutcome parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs a parsed configuration, writing the table to out (or output_path).
/// Returns 0 on success, 1 on validation failure, 2 on a cap refusal.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_command_line + thread setup + run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace paley::cli
