#pragma once

// Declarative scenarios for the command-line front end.
//
// A scenario is one JSON object:
//
//   {
//     "kind": "damping" | "resonance" | "lattice",
//     "p": 0.5, "n_max": 40,                               // damping
//     "resonances": [{"energy": 1.0, "width": 0.5}],       // resonance
//     "variant": "hermitian",                              // resonance, optional
//     "grid": {"t_start": 0, "t_end": 5, "steps": 101},    // resonance
//     "observables": [ [[[re, im], ...], ...], ... ],      // square matrices
//     "eps": 1e-6,                                         // commutation threshold
//     "fit_window": 0.5                                    // optional, fraction in (0, 1]
//   }
//
// Damping scenarios take two 2×2 observables; resonance scenarios take two
// 2N×2N observables; lattice scenarios take three projectors a, b, c.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gamowlab/cmatrix.hpp"
#include "gamowlab/evolution.hpp"
#include "gamowlab/gamow.hpp"

namespace gamowlab::cli {

enum class ScenarioKind { damping, resonance, lattice };

struct TimeGrid {
  double t_start = 0.0;
  double t_end = 1.0;
  std::size_t steps = 2;

  /// steps points from t_start to t_end inclusive.
  std::vector<double> points() const;
};

struct Scenario {
  ScenarioKind kind = ScenarioKind::damping;
  double p = 0.0;
  std::size_t n_max = 0;
  std::vector<Resonance> resonances;
  EvolutionVariant variant = EvolutionVariant::hermitian;
  std::vector<ComplexMatrix> observables;
  TimeGrid grid;
  double eps = 1e-6;
  std::optional<double> fit_window;
};

/// Carries every diagnostic found while validating.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

/// Parses and validates scenario text. Throws ValidationError.
Scenario parse_scenario(const std::string& text);

/// Reads and parses a file. Unreadable files raise ValidationError too.
Scenario load_scenario(const std::filesystem::path& path);

/// Full schema and invariant check without running; empty means valid.
std::vector<std::string> validate(const std::filesystem::path& path);

enum ExitCode : int { kOk = 0, kValidation = 2, kRuntime = 3 };

/// Runs a scenario file, writing outputs into out_dir (created if needed).
/// One summary line per analysis goes to `log`, diagnostics to `err`.
int run(const std::filesystem::path& scenario_path, const std::filesystem::path& out_dir,
        std::ostream& log, std::ostream& err);

/// Writes damping.json, resonance.json and lattice.json into out_dir.
/// Returns the written paths.
std::vector<std::filesystem::path> write_demo(const std::filesystem::path& out_dir);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double x);

}  // namespace gamowlab::cli
