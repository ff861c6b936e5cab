#pragma once

// Tabular results and parameter sweeps.
//
// A sweep walks a rectangular grid over SpinParams fields and evaluates one
// quantity per grid point. Grid points run concurrently; rows come back in
// lexicographic order of the grid indices (first axis slowest) no matter how
// the work was scheduled.

#include "geophase/core.hpp"

#include <string>
#include <utility>
#include <vector>

namespace geophase {

struct Column {
  std::string name;
  bool integer = false;  // printed without exponent, e.g. eigen labels
};

struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;
  /// Scalar results that do not fit the row layout (JSON output only).
  std::vector<std::pair<std::string, double>> summary;

  void add_row(std::vector<double> row);
};

/// printf "%.12e". Throws NumericError for NaN or infinity so corrupt values
/// never reach an output file.
std::string format_number(double value);

/// Header line plus one line per row, '\n' terminated.
std::string to_csv(const Table& table);

/// Field names accepted by axes and config keys: omega0 and gamma set both
/// sites; omega_a0, omega_b0, gamma_a, gamma_b, J, omega1 set one field.
bool is_param_name(const std::string& name);
void set_param(SpinParams& params, const std::string& name, double value);

struct SweepAxis {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  /// Evenly spaced, endpoints included; a single point sits at start.
  std::vector<double> values() const;
  void validate() const;
};

/// "name:start:stop:count".
SweepAxis parse_axis(const std::string& text);

enum class SweepQuantity { spectrum, berry, aa, twocycle_defect };

SweepQuantity parse_quantity(const std::string& text);
std::string to_string(SweepQuantity quantity);

struct SweepSpec {
  SpinParams base;
  std::vector<SweepAxis> axes;
  SweepQuantity quantity = SweepQuantity::spectrum;

  /// Throws ParameterError for bad or repeated axes.
  void validate() const;
  std::size_t point_count() const;
};

/// (n, E_n) for n = 1..4. Requires equal couplings.
Table spectrum_table(const SpinParams& params);

/// (n, total, dynamical, geometric) raw and principal; adiabatic phases or,
/// with `aa`, the cycling-state breakdown. Requires omega1 != 0.
Table phases_table(const SpinParams& params, bool aa);

/// ||U2 U1 - I||_max of the nonadiabatic two-cycle.
Table twocycle_defect_table(const SpinParams& params);

Table quantity_table(const SpinParams& params, SweepQuantity quantity);

/// Axis columns followed by the quantity columns. `threads` = 0 uses the
/// hardware concurrency. The first failing grid point (in grid order) has
/// its exception rethrown.
Table run_sweep(const SweepSpec& spec, unsigned threads = 0);

}  // namespace geophase
