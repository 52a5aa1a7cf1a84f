#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "paley/bitops.hpp"
#include "paley/errors.hpp"
#include "paley/hardy.hpp"
#include "paley/kernels.hpp"
#include "paley/parallel.hpp"
#include "paley/verify.hpp"
#include "paley/walsh.hpp"

namespace paley::cli {
namespace {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OutputFormat format_or(const RunConfig& config, OutputFormat fallback) { return config.format.value_or(fallback); }

void refuse(bool exceeded, const std::string& what) {
  if (exceeded) throw ResourceCapError(what);
}

WeightFunction make_weight(const RunConfig& config) {
  if (config.phi == "one") return WeightFunction::one();
  if (config.phi == "log") return WeightFunction::log();
  if (config.phi == "loglog") return WeightFunction::loglog();
  if (config.phi == "power") return WeightFunction::power(config.alpha);
  throw ValidationError("unknown --phi " + config.phi);
}

int run_lebesgue(const RunConfig& config, std::ostream& out) {
  if (config.lebesgue_max == 0) throw ValidationError("--max must be positive");
  refuse(config.lebesgue_max > config.caps.lebesgue,
         fmt::format("--max {} exceeds the Lebesgue sweep cap {} (raise --cap-lebesgue)", config.lebesgue_max,
                     config.caps.lebesgue));
  const auto sweep = lebesgue_sweep(config.lebesgue_max);
  TableWriter table(out, format_or(config, OutputFormat::csv),
                    {"n", "V", "norm_num", "norm_exp", "norm_float", "lower_ok", "upper_ok"});
  for (const auto& r : sweep.records) {
    table.row({r.n, static_cast<std::uint64_t>(r.variation), r.constant.numerator(), r.constant.exponent(),
               r.constant_float, r.lower_ok, r.upper_ok});
  }
  return kExitOk;
}

int run_fine(const RunConfig& config, std::ostream& out) {
  if (config.fine_max_n < 2) throw ValidationError("--max-n must be at least 2");
  refuse(ceil_log2(config.fine_max_n) > config.caps.grid_1d,
         fmt::format("--max-n {} exceeds the 1D cap 2^{}", config.fine_max_n, config.caps.grid_1d));
  const auto checkpoints = fine_ratios(config.fine_max_n, config.fine_variant);
  TableWriter table(out, format_or(config, OutputFormat::csv), {"n", "sum_num", "sum_exp", "sum_float", "ratio"});
  for (const auto& cp : checkpoints) {
    table.row({cp.n, cp.total.numerator(), cp.total.exponent(), cp.total.to_double(), cp.ratio});
  }
  return kExitOk;
}

int run_counterexample(const RunConfig& config, std::ostream& out) {
  refuse(config.n + 1 > config.caps.grid_2d,
         fmt::format("n = {} needs a 2D grid at resolution {}, above the cap {}", config.n, config.n + 1,
                     config.caps.grid_2d));
  const Grid2D f = counterexample(config.n, config.caps.grid_2d);
  const OutputFormat format = format_or(config, OutputFormat::csv);
  if (config.dump == "grid") {
    write_grid(out, f, format);
    return kExitOk;
  }
  const Spectrum2D spectrum = analyze(f);
  if (config.dump == "spectrum") {
    write_spectrum(out, spectrum, format);
    return kExitOk;
  }
  if (config.dump != "summary") throw ValidationError("unknown --dump " + config.dump);

  const std::uint64_t low = std::uint64_t{1} << config.n;
  bool pattern = true;
  for (std::size_t i = 0; i < spectrum.side(); ++i) {
    for (std::size_t j = 0; j < spectrum.side(); ++j) {
      const bool inside = i >= low && i < 2 * low && j >= low && j < 2 * low;
      pattern = pattern && spectrum.at(i, j) == DyadicRational(inside ? 1 : 0);
    }
  }
  const auto report = h1_norm(f);

  const bool identity_checked = config.n <= config.identity_max_n;
  bool identity = identity_checked;
  if (identity_checked) {
    for (std::uint64_t k = low + 1; k <= 2 * low; ++k) {
      const Grid2D fast = partial_sum_from(spectrum, k, k);
      identity = identity && fast == closed_form_partial_sum(config.n, k) && l1_norm(fast) == snn_norm(config.n, k);
    }
  }
  const LebesgueTable lebesgue(config.n);
  bool lower_bound = true;
  for (std::uint64_t i = 1; i <= low; ++i) {
    const DyadicRational norm = lebesgue[i] * lebesgue[i];
    const std::int64_t v = variation(i);
    lower_bound = lower_bound && norm.times_pow2(6) >= DyadicRational(v * v);
  }

  TableWriter table(out, format, {"n", "resolution", "spectrum_ok", "l1", "l1_float", "h1", "h1_float",
                                  "identity_checked", "identity_ok", "lower_bound_ok"});
  table.row({static_cast<std::uint64_t>(config.n), static_cast<std::uint64_t>(f.resolution()), pattern,
             report.l1.to_string(), report.l1.to_double(), report.h1.to_string(), report.h1.to_double(),
             identity_checked, identity, lower_bound});
  return kExitOk;
}

int run_divergence(const RunConfig& config, std::ostream& out) {
  if (config.n_min > config.n_max) throw ValidationError("--n-min must not exceed --n-max");
  const WeightFunction phi = make_weight(config);
  const NormPath path = config.oracle ? NormPath::oracle : NormPath::shortcut;
  if (config.oracle) {
    refuse(config.n_max > kOracleCap || config.n_max + 1 > config.caps.grid_2d,
           fmt::format("--oracle builds 2D grids; --n-max {} exceeds the oracle cap {}", config.n_max,
                       std::min(kOracleCap, config.caps.grid_2d - 1)));
  }
  refuse(config.n_max > config.caps.divergence,
         fmt::format("--n-max {} exceeds the divergence cap {}", config.n_max, config.caps.divergence));
  if (!phi.validate(std::uint64_t{2} << config.n_max)) {
    throw ValidationError("weight function is not nondecreasing with values >= 1 on the sweep range");
  }
  const auto records = divergence_sweep(config.n_min, config.n_max, phi, config.log_base, path, config.caps.divergence);
  TableWriter table(out, format_or(config, OutputFormat::csv), {"n", "block_sum", "phi_at_block", "ratio", "path"});
  for (const auto& r : records) {
    table.row({static_cast<std::uint64_t>(r.n), r.block_sum, r.phi_at_block, r.ratio, to_string(r.path)});
  }
  return kExitOk;
}

template <GridType G>
void emit_hardy(const RunConfig& config, const G& f, std::ostream& out) {
  const auto report = h1_norm(f);
  std::vector<std::string> columns{"family", "n", "dimension", "resolution", "l1", "l1_float", "h1", "h1_float"};
  std::vector<TableWriter::Cell> row{config.family,
                                     static_cast<std::uint64_t>(config.n),
                                     static_cast<std::int64_t>(G::dimension),
                                     static_cast<std::uint64_t>(f.resolution()),
                                     report.l1.to_string(),
                                     report.l1.to_double(),
                                     report.h1.to_string(),
                                     report.h1.to_double()};
  if (config.hardy_p) {
    columns.push_back("hp_float");
    row.push_back(lp_norm(report.maximal, *config.hardy_p));
  }
  TableWriter table(out, format_or(config, OutputFormat::json), columns);
  table.row(row);
}

int run_hardy(const RunConfig& config, std::ostream& out) {
  if (config.hardy_p && !(*config.hardy_p > 0.0)) throw ValidationError("--p must be positive");
  const std::string& family = config.family;
  const unsigned n = config.n;
  if (family == "counterexample" || family == "walsh2d" || family == "constant") {
    const unsigned resolution = family == "constant" ? n : n + 1;
    refuse(resolution > config.caps.grid_2d,
           fmt::format("{} needs a 2D grid at resolution {}, above the cap {}", family, resolution, config.caps.grid_2d));
    if (family == "counterexample") {
      emit_hardy(config, counterexample(n, config.caps.grid_2d), out);
    } else if (family == "walsh2d") {
      const Grid1D w = walsh_function(std::uint64_t{1} << n, n + 1);
      emit_hardy(config, tensor(w, w), out);
    } else {
      emit_hardy(config, constant_grid<Grid2D>(n, DyadicRational(1)), out);
    }
    return kExitOk;
  }
  if (family == "difference" || family == "walsh") {
    refuse(n + 1 > config.caps.grid_1d,
           fmt::format("{} needs a 1D grid at resolution {}, above the cap {}", family, n + 1, config.caps.grid_1d));
    emit_hardy(config, family == "difference" ? difference_kernel(n) : walsh_function(std::uint64_t{1} << n, n + 1), out);
    return kExitOk;
  }
  if (family == "dirichlet") {
    if (n == 0) throw ValidationError("dirichlet family needs n >= 1");
    refuse(ceil_log2(n) > config.caps.grid_1d, "dirichlet kernel above the 1D cap");
    emit_hardy(config, dirichlet_recursive(n, ceil_log2(n)), out);
    return kExitOk;
  }
  throw ValidationError("unknown --family " + family);
}

int run_kernel_dump(const RunConfig& config, std::ostream& out) {
  const unsigned minimal = ceil_log2(config.kernel_n);
  const unsigned resolution = config.resolution.value_or(minimal);
  if (resolution < minimal) throw ValidationError(fmt::format("--resolution must be at least {} for n = {}", minimal, config.kernel_n));
  refuse(resolution > config.caps.grid_1d,
         fmt::format("resolution {} exceeds the 1D cap {}", resolution, config.caps.grid_1d));
  Grid1D kernel;
  if (config.construction == "direct") {
    kernel = dirichlet_direct(config.kernel_n, resolution);
  } else if (config.construction == "recursive") {
    kernel = dirichlet_recursive(config.kernel_n, resolution);
  } else {
    throw ValidationError("unknown --construction " + config.construction);
  }
  const OutputFormat format = format_or(config, OutputFormat::csv);
  if (config.spectrum) {
    write_spectrum(out, analyze(kernel), format);
  } else {
    write_grid(out, kernel, format);
  }
  return kExitOk;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  const auto results = run_verify_suite(config.suite);
  write_verify_report(out, results);
  for (const auto& r : results)
    if (!r.passed) return kExitInvalid;
  return kExitOk;
}

int dispatch(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::lebesgue:
      return run_lebesgue(config, out);
    case Command::fine:
      return run_fine(config, out);
    case Command::counterexample:
      return run_counterexample(config, out);
    case Command::divergence:
      return run_divergence(config, out);
    case Command::hardy:
      return run_hardy(config, out);
    case Command::kernel_dump:
      return run_kernel_dump(config, out);
    case Command::verify:
      return run_verify(config, out);
  }
  return kExitInvalid;
}

}  // namespace

ParseOutcome parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact Walsh-Fourier analysis on the dyadic group", "paley"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name;
  app.add_option("--out", format_name, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", config.output_path, "Write the table to this file instead of stdout");
  app.add_option("--threads", config.threads, "Thread count (overrides PALEY_THREADS)")->check(CLI::PositiveNumber);
  app.add_option("--cap-2d", config.caps.grid_2d, "Largest 2D grid resolution")->check(CLI::Range(1U, 15U));
  app.add_option("--cap-1d", config.caps.grid_1d, "Largest 1D grid resolution")->check(CLI::Range(1U, 30U));
  app.add_option("--cap-lebesgue", config.caps.lebesgue, "Largest n for the Lebesgue sweep")->check(CLI::PositiveNumber);
  app.add_option("--cap-divergence", config.caps.divergence, "Largest block index for divergence")
      ->check(CLI::Range(1U, 30U));

  auto* lebesgue = app.add_subcommand("lebesgue", "Lebesgue constants and the two-sided variation bound");
  lebesgue->add_option("--max", config.lebesgue_max, "Largest n")->capture_default_str();

  auto* fine = app.add_subcommand("fine", "Averaged variation / Lebesgue constant ratios at checkpoints");
  fine->add_option("--max-n", config.fine_max_n, "Largest n")->capture_default_str();
  std::string variant = "variation";
  fine->add_option("--variant", variant)->check(CLI::IsMember({"variation", "lebesgue"}))->capture_default_str();

  auto* counter = app.add_subcommand("counterexample", "Checks on f_{n,n}");
  counter->add_option("--n", config.n, "Block index")->required();
  counter->add_option("--dump", config.dump, "summary | grid | spectrum")
      ->check(CLI::IsMember({"summary", "grid", "spectrum"}))
      ->capture_default_str();
  counter->add_option("--identity-max-n", config.identity_max_n, "Check every partial sum against the closed form up to this n")
      ->capture_default_str();

  auto* divergence = app.add_subcommand("divergence", "Weighted partial-sum norms of f_{n,n}, block by block");
  divergence->add_option("--n-min", config.n_min)->capture_default_str();
  divergence->add_option("--n-max", config.n_max)->capture_default_str();
  divergence->add_option("--phi", config.phi)->check(CLI::IsMember({"one", "log", "loglog", "power"}))->capture_default_str();
  divergence->add_option("--alpha", config.alpha, "Exponent for --phi power")->capture_default_str();
  std::string log_base = "e";
  divergence->add_option("--log-base", log_base)->check(CLI::IsMember({"e", "2"}))->capture_default_str();
  divergence->add_flag("--oracle", config.oracle, "Use full 2D partial sums (small n only)");

  auto* hardy = app.add_subcommand("hardy", "L1 and H1 norms of a built-in function");
  hardy->add_option("--family", config.family)
      ->check(CLI::IsMember({"counterexample", "walsh2d", "constant", "difference", "walsh", "dirichlet"}))
      ->capture_default_str();
  hardy->add_option("--n", config.n)->capture_default_str();
  hardy->add_option("--p", config.hardy_p, "Also report the float L_p norm of the maximal function");

  auto* dump = app.add_subcommand("kernel-dump", "Dirichlet kernel cells (or spectrum) as a table");
  dump->add_option("--n", config.kernel_n)->required();
  dump->add_option("--resolution", config.resolution);
  dump->add_option("--construction", config.construction)
      ->check(CLI::IsMember({"direct", "recursive"}))
      ->capture_default_str();
  dump->add_flag("--spectrum", config.spectrum);

  auto* verify = app.add_subcommand("verify", "Run the exact invariant suites");
  std::vector<std::string> suites = verify_suite_names();
  suites.push_back("all");
  verify->add_option("--suite", config.suite)->check(CLI::IsMember(suites))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {std::nullopt, kExitOk};
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return {std::nullopt, kExitOk};
    }
    err << "paley: error: " << e.what() << '\n';
    return {std::nullopt, kExitInvalid};
  }

  if (!format_name.empty()) config.format = format_name == "json" ? OutputFormat::json : OutputFormat::csv;
  config.fine_variant = variant == "lebesgue" ? FineVariant::lebesgue : FineVariant::variation;
  config.log_base = log_base == "2" ? LogBase::two : LogBase::natural;
  if (*lebesgue) config.command = Command::lebesgue;
  if (*fine) config.command = Command::fine;
  if (*counter) config.command = Command::counterexample;
  if (*divergence) config.command = Command::divergence;
  if (*hardy) config.command = Command::hardy;
  if (*dump) config.command = Command::kernel_dump;
  if (*verify) config.command = Command::verify;
  return {config, kExitOk};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.output_path) {
      std::ofstream file(*config.output_path, std::ios::binary);
      if (!file) throw ValidationError("cannot open " + *config.output_path);
      return dispatch(config, file);
    }
    return dispatch(config, out);
  } catch (const ResourceCapError& e) {
    err << "paley: refused: " << e.what() << '\n';
    return kExitCapRefused;
  } catch (const std::exception& e) {
    err << "paley: error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const ParseOutcome parsed = parse_command_line(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_code;
  const RunConfig& config = *parsed.config;
  try {
    if (config.threads) {
      set_thread_count(*config.threads);
    } else if (const char* env = std::getenv("PALEY_THREADS"); env != nullptr && *env != '\0') {
      set_thread_count(std::stoi(env));
    }
  } catch (const std::exception&) {
    err << "paley: error: invalid thread count\n";
    return kExitInvalid;
  }
  return run(config, out, err);
}

}  // namespace paley::cli
