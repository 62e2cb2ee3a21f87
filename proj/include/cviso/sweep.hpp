#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cviso/states.hpp"

namespace cviso {

/// One (r, p) grid point with every criterion and measure (entropies in nats).
struct SweepRecord {
  double r = 0.0;
  double p = 0.0;
  double nu = 1.0;
  double nu_tilde = 1.0;
  double purity = 1.0;
  double S = 0.0;
  double eof = 0.0;
  double discord = 0.0;
  double mutual_information = 0.0;
  bool ppt_entangled = false;
  bool steerable = false;
  bool ccnr_detects = false;
  bool eof_exceeds_half_mi = false;
};

/// Evenly spaced values min, ..., max (inclusive). steps == 1 yields {min}.
struct GridAxis {
  double min = 0.0;
  double max = 1.0;
  std::size_t steps = 101;

  /// Throws DomainError for steps == 0, min > max, or min == max with
  /// steps > 1 (rows would repeat).
  std::vector<double> values() const;
};

inline constexpr std::string_view kSweepCsvHeader =
    "r,p,nu,nu_tilde,purity,S,eof,discord,mutual_information,"
    "ppt_entangled,steerable,ccnr_detects,eof_exceeds_half_mi";

SweepRecord evaluate_point(const GIParams& params);

/// Evaluates the r x p grid on `threads` workers (0 = hardware concurrency).
/// Output is ordered by (r, p) ascending regardless of scheduling.
std::vector<SweepRecord> run_sweep(const GridAxis& r_axis, const GridAxis& p_axis,
                                   std::size_t threads = 0);

/// 9 significant digits, %g style.
std::string format_csv_float(double v);

void write_csv(const std::vector<SweepRecord>& rows, std::ostream& out);

}  // namespace cviso
