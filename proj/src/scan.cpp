#include "hyperhull/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "hyperhull/area.hpp"
#include "hyperhull/hull.hpp"
#include "hyperhull/number_theory.hpp"

namespace hyperhull {

double scan_scale(Int n) {
  const double nd = static_cast<double>(n);
  return std::cbrt(nd) * std::log(nd);
}

ScanRecord scan_record(Int n, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  ScanRecord rec;
  rec.n = n;
  rec.f0_h = f0_h(n);
  rec.f0_q = f0_q(n);
  rec.strip_narrow = strip_count(strip_spec(n, StripWidth::narrow));
  rec.strip_lemma = strip_count(strip_spec(n, StripWidth::lemma));
  rec.a_n = missed_area_q(n).value;
  const double scale = scan_scale(n);
  rec.ratio_f0 = static_cast<double>(rec.f0_h) / scale;
  rec.ratio_a = rec.a_n / scale;
  if (timing) {
    const auto stop = std::chrono::steady_clock::now();
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  }
  return rec;
}

std::vector<Int> geometric_grid(Int n_min, Int n_max, int points) {
  if (n_min < 8) throw DomainError("scan needs n_min >= 8");
  if (n_max < n_min) throw DomainError("scan needs n_max >= n_min");
  if (points < 2) throw DomainError("scan needs at least 2 points");
  check_n(n_max);
  std::vector<Int> grid;
  const long double ratio = static_cast<long double>(n_max) / static_cast<long double>(n_min);
  for (int i = 0; i < points; ++i) {
    const long double e = static_cast<long double>(i) / static_cast<long double>(points - 1);
    grid.push_back(static_cast<Int>(std::llround(static_cast<long double>(n_min) * std::pow(ratio, e))));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::vector<ScanRecord> run_scan(const std::vector<Int>& grid, int threads, bool timing) {
  std::vector<ScanRecord> rows(grid.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        rows[i] = scan_record(grid[i], timing);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int workers = std::max(1, threads);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::sort(rows.begin(), rows.end(), [](const ScanRecord& a, const ScanRecord& b) { return a.n < b.n; });
  return rows;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.8e", v);
  return buf;
}

std::string to_csv(const std::vector<ScanRecord>& rows) {
  std::string out = kScanCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.f0_h) + ',' + std::to_string(r.f0_q) + ',' +
           std::to_string(r.strip_narrow) + ',' + std::to_string(r.strip_lemma) + ',' + format_real(r.a_n) + ',' +
           format_real(r.ratio_f0) + ',' + format_real(r.ratio_a) + ',' + format_real(r.elapsed_ms) + '\n';
  }
  return out;
}

std::string to_json(const std::vector<ScanRecord>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"f0_h", r.f0_h},
                   {"f0_q", r.f0_q},
                   {"strip_narrow", r.strip_narrow},
                   {"strip_lemma", r.strip_lemma},
                   {"a_n", r.a_n},
                   {"ratio_f0", r.ratio_f0},
                   {"ratio_a", r.ratio_a},
                   {"elapsed_ms", r.elapsed_ms}});
  }
  return arr.dump(2) + "\n";
}

std::string gnuplot_script(const std::string& csv_path) {
  std::ostringstream s;
  s << "set datafile separator ','\n"
    << "set key top left\n"
    << "set xlabel 'log N'\n"
    << "set ylabel 'ratio to N^{1/3} log N'\n"
    << "plot '" << csv_path << "' every ::1 using (log($1)):7 with linespoints title 'f0_H', \\\n"
    << "     '" << csv_path << "' every ::1 using (log($1)):8 with linespoints title 'A_N'\n";
  return s.str();
}

}  // namespace hyperhull
