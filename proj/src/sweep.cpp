#include "geophase/sweep.hpp"

#include "geophase/phases.hpp"
#include "geophase/spectral.hpp"
#include "geophase/twocycle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

namespace geophase {

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) throw NumericError("row width does not match the columns");
  rows.push_back(std::move(row));
}

std::string format_number(double value) {
  if (!std::isfinite(value)) throw NumericError("non-finite value in output");
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", value);
  return buf;
}

namespace {

std::string format_cell(const Column& column, double value) {
  if (column.integer) {
    if (!std::isfinite(value)) throw NumericError("non-finite value in output");
    return std::to_string(static_cast<long long>(value));
  }
  return format_number(value);
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string s;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) s += ',';
    s += table.columns[c].name;
  }
  s += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) s += ',';
      s += format_cell(table.columns[c], row[c]);
    }
    s += '\n';
  }
  return s;
}

bool is_param_name(const std::string& name) {
  static const std::set<std::string> names{"omega0",  "omega_a0", "omega_b0", "gamma",
                                           "gamma_a", "gamma_b",  "J",        "omega1"};
  return names.count(name) > 0;
}

void set_param(SpinParams& p, const std::string& name, double value) {
  if (name == "omega0") {
    p.omega_a0 = p.omega_b0 = value;
  } else if (name == "omega_a0") {
    p.omega_a0 = value;
  } else if (name == "omega_b0") {
    p.omega_b0 = value;
  } else if (name == "gamma") {
    p.gamma_a = p.gamma_b = value;
  } else if (name == "gamma_a") {
    p.gamma_a = value;
  } else if (name == "gamma_b") {
    p.gamma_b = value;
  } else if (name == "J") {
    p.J = value;
  } else if (name == "omega1") {
    p.omega1 = value;
  } else {
    throw ParameterError("unknown parameter name '" + name + "'");
  }
}

// ---------------------------------------------------------------------------

std::vector<double> SweepAxis::values() const {
  validate();
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i)
    v[i] = count == 1 ? start : start + (stop - start) * i / (count - 1);
  if (count > 1) v.back() = stop;
  return v;
}

void SweepAxis::validate() const {
  if (!is_param_name(name)) throw ParameterError("unknown sweep axis '" + name + "'");
  if (!std::isfinite(start) || !std::isfinite(stop))
    throw ParameterError("sweep axis bounds must be finite");
  if (count < 1) throw ParameterError("sweep axis count must be at least 1");
  if (start > stop) throw ParameterError("sweep axis needs start <= stop");
}

SweepAxis parse_axis(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 4)
    throw ParameterError("sweep axis must look like name:start:stop:count, got '" + text + "'");

  SweepAxis axis;
  axis.name = parts[0];
  try {
    std::size_t used = 0;
    axis.start = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("trailing");
    axis.stop = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("trailing");
    axis.count = std::stoi(parts[3], &used);
    if (used != parts[3].size()) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    throw ParameterError("malformed number in sweep axis '" + text + "'");
  }
  axis.validate();
  return axis;
}

SweepQuantity parse_quantity(const std::string& text) {
  if (text == "spectrum") return SweepQuantity::spectrum;
  if (text == "berry") return SweepQuantity::berry;
  if (text == "aa") return SweepQuantity::aa;
  if (text == "twocycle-defect") return SweepQuantity::twocycle_defect;
  throw ParameterError("unknown sweep quantity '" + text + "'");
}

std::string to_string(SweepQuantity q) {
  switch (q) {
    case SweepQuantity::spectrum:
      return "spectrum";
    case SweepQuantity::berry:
      return "berry";
    case SweepQuantity::aa:
      return "aa";
    case SweepQuantity::twocycle_defect:
      return "twocycle-defect";
  }
  return "";
}

void SweepSpec::validate() const {
  std::set<std::string> seen;
  for (const SweepAxis& axis : axes) {
    axis.validate();
    if (!seen.insert(axis.name).second)
      throw ParameterError("sweep axis '" + axis.name + "' given twice");
  }
}

std::size_t SweepSpec::point_count() const {
  std::size_t n = 1;
  for (const SweepAxis& axis : axes) n *= static_cast<std::size_t>(axis.count);
  return n;
}

// ---------------------------------------------------------------------------

Table spectrum_table(const SpinParams& params) {
  params.require_equal_couplings();
  Table t;
  t.columns = {{"n", true}, {"energy", false}};
  for (int n = 1; n <= 4; ++n)
    t.add_row({double(n), eigen_energy(params.omega0(), params.gamma(), params.J, n)});
  return t;
}

Table phases_table(const SpinParams& params, bool aa) {
  Table t;
  t.columns = {{"n", true},         {"total", false},           {"dynamical", false},
               {"geometric", false}, {"total_principal", false}, {"dynamical_principal", false},
               {"geometric_principal", false}};
  for (int n = 1; n <= 4; ++n) {
    const PhaseBreakdown raw = aa ? aa_breakdown(params, n) : adiabatic_phases(params, n);
    const PhaseBreakdown p = raw.principal();
    t.add_row({double(n), raw.total, raw.dynamical, raw.geometric, p.total, p.dynamical,
               p.geometric});
  }
  return t;
}

Table twocycle_defect_table(const SpinParams& params) {
  Table t;
  t.columns = {{"identity_defect", false}};
  t.add_row({run_aa_two_cycle(params, TwoSpinState()).identity_defect});
  return t;
}

Table quantity_table(const SpinParams& params, SweepQuantity quantity) {
  switch (quantity) {
    case SweepQuantity::spectrum:
      return spectrum_table(params);
    case SweepQuantity::berry:
      return phases_table(params, false);
    case SweepQuantity::aa:
      return phases_table(params, true);
    case SweepQuantity::twocycle_defect:
      return twocycle_defect_table(params);
  }
  throw ParameterError("unknown sweep quantity");
}

Table run_sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();
  std::vector<std::vector<double>> grid;
  for (const SweepAxis& axis : spec.axes) grid.push_back(axis.values());
  const std::size_t points = spec.point_count();

  // Grid index -> coordinates, last axis fastest.
  auto coordinates = [&](std::size_t index) {
    std::vector<double> coords(grid.size());
    for (std::size_t a = grid.size(); a-- > 0;) {
      coords[a] = grid[a][index % grid[a].size()];
      index /= grid[a].size();
    }
    return coords;
  };

  std::vector<Table> results(points);
  std::vector<std::exception_ptr> errors(points);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < points;) {
      try {
        SpinParams p = spec.base;
        const std::vector<double> coords = coordinates(i);
        for (std::size_t a = 0; a < coords.size(); ++a) set_param(p, spec.axes[a].name, coords[a]);
        results[i] = quantity_table(p, spec.quantity);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, points));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Table out;
  for (const SweepAxis& axis : spec.axes) out.columns.push_back({axis.name, false});
  for (const Column& c : results.front().columns) out.columns.push_back(c);
  for (std::size_t i = 0; i < points; ++i) {
    const std::vector<double> coords = coordinates(i);
    for (const auto& row : results[i].rows) {
      std::vector<double> full = coords;
      full.insert(full.end(), row.begin(), row.end());
      out.add_row(std::move(full));
    }
  }
  return out;
}

}  // namespace geophase
