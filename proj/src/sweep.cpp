#include "cviso/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "cviso/criteria.hpp"
#include "cviso/errors.hpp"
#include "cviso/measures.hpp"

namespace cviso {

std::vector<double> GridAxis::values() const {
  if (steps == 0) throw DomainError("grid axis needs at least one step");
  if (!(min <= max)) throw DomainError("grid axis min must not exceed max");
  if (steps == 1) return {min};
  if (min == max) throw DomainError("grid axis with min == max must have exactly one step");
  std::vector<double> v(steps);
  const double span = max - min;
  for (std::size_t i = 0; i < steps; ++i) {
    v[i] = min + span * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  v.back() = max;
  return v;
}

SweepRecord evaluate_point(const GIParams& params) {
  const StateProperties props = properties(params);
  const CriteriaReport crit = evaluate_criteria(params);
  const MeasureReport meas = evaluate_measures(params);
  SweepRecord rec;
  rec.r = params.r();
  rec.p = params.p();
  rec.nu = props.nu;
  rec.nu_tilde = props.nu_tilde;
  rec.purity = props.purity;
  rec.S = props.von_neumann;
  rec.eof = meas.eof;
  rec.discord = meas.discord;
  rec.mutual_information = meas.mutual_information;
  rec.ppt_entangled = crit.ppt_entangled;
  rec.steerable = crit.steerable;
  rec.ccnr_detects = crit.ccnr_detects;
  rec.eof_exceeds_half_mi = eof_exceeds_half_mi(params);
  return rec;
}

std::vector<SweepRecord> run_sweep(const GridAxis& r_axis, const GridAxis& p_axis,
                                   std::size_t threads) {
  const std::vector<double> rs = r_axis.values();
  const std::vector<double> ps = p_axis.values();
  // Validate the corners up front so workers only see in-domain values.
  GIParams(rs.front(), ps.front());
  GIParams(rs.back(), ps.back());

  const std::size_t total = rs.size() * ps.size();
  std::vector<SweepRecord> rows(total);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(total, 1));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < total; i = next++) {
        rows[i] = evaluate_point(GIParams(rs[i / ps.size()], ps[i % ps.size()]));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = total;
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string format_csv_float(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_csv(const std::vector<SweepRecord>& rows, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const auto& rec : rows) {
    out << format_csv_float(rec.r) << ',' << format_csv_float(rec.p) << ','
        << format_csv_float(rec.nu) << ',' << format_csv_float(rec.nu_tilde) << ','
        << format_csv_float(rec.purity) << ',' << format_csv_float(rec.S) << ','
        << format_csv_float(rec.eof) << ',' << format_csv_float(rec.discord) << ','
        << format_csv_float(rec.mutual_information) << ',' << int(rec.ppt_entangled) << ','
        << int(rec.steerable) << ',' << int(rec.ccnr_detects) << ','
        << int(rec.eof_exceeds_half_mi) << '\n';
  }
}

}  // namespace cviso
