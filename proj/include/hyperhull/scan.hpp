// Asymptotic scan over a geometric grid of N.
#pragma once

#include <string>
#include <vector>

#include "hyperhull/lattice.hpp"

namespace hyperhull {

inline constexpr const char* kScanCsvHeader = "N,f0_H,f0_Q,strip_narrow,strip_lemma,A_N,ratio_f0,ratio_A,elapsed_ms";

struct ScanRecord {
  Int n = 0;
  Int f0_h = 0;
  Int f0_q = 0;
  Int strip_narrow = 0;  // lattice points with N <= xy <= N + floor(N^{1/3}/2)
  Int strip_lemma = 0;   // lattice points with N <= xy <= N + floor(2 N^{1/3})
  double a_n = 0.0;
  double ratio_f0 = 0.0;  // f0_h / (N^{1/3} ln N)
  double ratio_a = 0.0;   // a_n / (N^{1/3} ln N)
  double elapsed_ms = 0.0;
};

/// N^{1/3} ln N.
double scan_scale(Int n);

/// One row. elapsed_ms is only measured when `timing` is set, so that default
/// output is reproducible byte for byte.
ScanRecord scan_record(Int n, bool timing = false);

/// round(n_min (n_max / n_min)^{i / (points - 1)}) for i < points, deduplicated, ascending.
std::vector<Int> geometric_grid(Int n_min, Int n_max, int points);

/// Evaluates every N on `threads` workers pulling from a shared counter.
/// Rows come back sorted by N whatever the completion order.
std::vector<ScanRecord> run_scan(const std::vector<Int>& grid, int threads = 1, bool timing = false);

/// Fixed scientific notation with 9 significant digits, independent of locale.
std::string format_real(double v);

std::string to_csv(const std::vector<ScanRecord>& rows);
std::string to_json(const std::vector<ScanRecord>& rows);

/// A gnuplot script plotting ratio_f0 and ratio_A against log N from `csv_path`.
std::string gnuplot_script(const std::string& csv_path);

}  // namespace hyperhull
