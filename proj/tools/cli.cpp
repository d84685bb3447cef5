#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperhull/area.hpp"
#include "hyperhull/caps.hpp"
#include "hyperhull/hull.hpp"
#include "hyperhull/number_theory.hpp"
#include "hyperhull/oracle.hpp"
#include "hyperhull/scan.hpp"

namespace hyperhull::cli {

namespace {

using nlohmann::json;

struct Options {
  Int n = 0;
  Int n_min = 0;
  Int n_max = 0;
  int points = 0;
  Int m = 0;
  Int w = 0;
  std::string delta = "narrow";
  std::string format = "text";
  std::string out_path;
  std::string gnuplot_path;
  bool oracle = false;
  bool timings = false;
  int threads = 1;
  Int limit = -1;
  Int max_n = kMaxN;
};

std::string fixed(double v, int prec = 9) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
  return buf;
}

Int effective_max_n(const Options& opt, const Environment& env) {
  Int cap = kMaxN;
  if (env.max_n) {
    char* end = nullptr;
    const long long v = std::strtoll(env.max_n->c_str(), &end, 10);
    if (end != env.max_n->c_str() && *end == '\0' && v > 0) cap = std::min<Int>(cap, v);
  }
  // A command-line value wins over the environment but can only lower the bound.
  if (opt.max_n != kMaxN) cap = std::min<Int>(kMaxN, opt.max_n);
  return cap;
}

void require_n(Int n, Int cap) {
  if (n < 1) throw DomainError("--n must be a positive integer");
  if (n > cap) throw BoundError("N = " + std::to_string(n) + " exceeds the configured bound " + std::to_string(cap));
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw DomainError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

int cmd_hull(const Options& opt, Int cap, std::ostream& out) {
  require_n(opt.n, cap);
  const auto chain = chain_vertices(opt.n);
  const auto strip = validate_strip(chain);
  const bool has_q = opt.n >= 8;
  const Int fq = has_q ? f0_q(opt.n) : 0;
  Int max_excess = 0;
  for (const auto& e : strip.entries) max_excess = std::max(max_excess, e.excess);

  bool oracle_ok = true;
  if (opt.oracle) oracle_ok = oracle::brute_chain(opt.n).vertices == chain.vertices;

  const auto& v = chain.vertices;
  const std::size_t shown =
      opt.limit < 0 ? v.size() : std::min<std::size_t>(v.size(), static_cast<std::size_t>(opt.limit));
  Sink sink(opt.out_path, out);
  auto& os = sink.stream();
  if (opt.format == "json") {
    json j;
    j["n"] = opt.n;
    j["f0_h"] = static_cast<Int>(v.size());
    j["f0_q"] = has_q ? json(fq) : json(nullptr);
    j["strip_pass"] = strip.pass;
    j["strip_bound"] = strip.bound;
    j["max_excess"] = max_excess;
    auto verts = json::array();
    for (std::size_t i = 0; i < shown; ++i) verts.push_back({v[i].x, v[i].y});
    j["vertices"] = verts;
    j["truncated"] = shown < v.size();
    if (opt.oracle) j["oracle_agree"] = oracle_ok;
    os << j.dump() << "\n";
  } else if (opt.format == "csv") {
    os << "x,y,excess\n";
    for (std::size_t i = 0; i < shown; ++i) os << v[i].x << ',' << v[i].y << ',' << strip.entries[i].excess << '\n';
  } else {
    os << "N = " << opt.n << "\n";
    os << "f0_H = " << v.size() << "\n";
    if (has_q) os << "f0_Q = " << fq << "\n";
    os << "strip check: " << (strip.pass ? "pass" : "FAIL") << " (max xy - N = " << max_excess
       << ", bound 2N^(1/3) = " << fixed(strip.bound, 6) << ")\n";
    if (opt.oracle) os << "oracle chain: " << (oracle_ok ? "agree" : "DISAGREE") << "\n";
    os << "vertices" << (shown < v.size() ? " (truncated)" : "") << ":\n";
    for (std::size_t i = 0; i < shown; ++i) os << "  " << v[i].x << " " << v[i].y << "\n";
  }
  if (!oracle_ok) return kSelfCheck;
  return strip.pass ? kOk : kSelfCheck;
}

int cmd_area(const Options& opt, Int cap, std::ostream& out) {
  require_n(opt.n, cap);
  if (opt.n < 8) throw DomainError("area needs N >= 8 (N1 >= 2)");
  const auto per_edge = missed_area_q_per_edge(opt.n);
  const bool checked = opt.n <= kDualPathMaxN;
  AreaResult diff;
  bool agree = true;
  if (checked) {
    diff = missed_area_q_difference(opt.n);
    agree = std::abs(per_edge.value - diff.value) <= kDualPathRelTol * std::max(1.0, per_edge.value);
  }
  const auto aq = area_q(opt.n);
  const auto full = missed_area_range(opt.n, 1.0, static_cast<double>(opt.n));
  const double full_ratio = full.value / static_cast<double>(opt.n);
  bool oracle_ok = true;
  if (opt.oracle) {
    oracle_ok = oracle::brute_convex_hull(oracle::brute_q_lattice_points(opt.n)) == q_polygon(opt.n).vertices;
  }

  Sink sink(opt.out_path, out);
  auto& os = sink.stream();
  if (opt.format == "json") {
    json j;
    j["n"] = opt.n;
    j["a_n"] = per_edge.value;
    j["abs_error_bound"] = per_edge.abs_error_bound;
    j["area_q"] = aq.value;
    j["dual_path"] = {{"checked", checked}, {"difference", checked ? json(diff.value) : json(nullptr)}, {"agree", agree}};
    j["full_missed_area"] = full.value;
    j["full_ratio"] = full_ratio;
    if (opt.oracle) j["oracle_agree"] = oracle_ok;
    os << j.dump() << "\n";
  } else if (opt.format == "csv") {
    os << "N,A_N,abs_error_bound,area_Q,dual_path_agree,full_missed_area,full_ratio\n";
    os << opt.n << ',' << format_real(per_edge.value) << ',' << format_real(per_edge.abs_error_bound) << ','
       << format_real(aq.value) << ',' << (checked ? (agree ? "true" : "false") : "skipped") << ','
       << format_real(full.value) << ',' << format_real(full_ratio) << '\n';
  } else {
    os << "N = " << opt.n << "\n";
    os << "A_N = " << fixed(per_edge.value) << " (+/- " << format_real(per_edge.abs_error_bound) << ")\n";
    os << "Area(Q_N) = " << fixed(aq.value) << "\n";
    if (checked) {
      os << "difference route = " << fixed(diff.value) << " -> " << (agree ? "agree" : "DISAGREE") << "\n";
    } else {
      os << "difference route skipped (N > 10^9)\n";
    }
    os << "missed area over [1,N]^2 = " << fixed(full.value) << " (ratio to N " << fixed(full_ratio) << ")\n";
    if (opt.oracle) os << "oracle polygon: " << (oracle_ok ? "agree" : "DISAGREE") << "\n";
  }
  return (agree && oracle_ok) ? kOk : kSelfCheck;
}

int cmd_scan(const Options& opt, Int cap, std::ostream& out) {
  if (opt.n_max > cap) throw BoundError("--n-max exceeds the configured bound");
  const auto grid = geometric_grid(opt.n_min, opt.n_max, opt.points);
  const auto rows = run_scan(grid, opt.threads, opt.timings);
  {
    Sink sink(opt.out_path, out);
    sink.stream() << (opt.format == "json" ? to_json(rows) : to_csv(rows));
  }
  if (!opt.gnuplot_path.empty()) {
    std::ofstream gp(opt.gnuplot_path, std::ios::binary);
    if (!gp) throw DomainError("cannot open gnuplot output " + opt.gnuplot_path);
    gp << gnuplot_script(opt.out_path.empty() ? "scan.csv" : opt.out_path);
  }
  for (const auto& r : rows)
    if (r.f0_h > r.strip_lemma) return kSelfCheck;
  return kOk;
}

struct NtRow {
  std::string what;
  Int arg = 0;
  Int exact = 0;
  double main_term = 0.0;
  double allowance = 0.0;
  std::optional<Int> n_hi;
  std::optional<bool> oracle_agree;
};

int emit_nt(const Options& opt, const NtRow& row, std::ostream& out) {
  const double residual = static_cast<double>(row.exact) - row.main_term;
  Sink sink(opt.out_path, out);
  auto& os = sink.stream();
  if (opt.format == "json") {
    json j;
    j["kind"] = row.what;
    j["arg"] = row.arg;
    j["exact"] = row.exact;
    j["main_term"] = row.main_term;
    j["residual"] = residual;
    j["allowance"] = row.allowance;
    j["residual_over_allowance"] = residual / row.allowance;
    if (row.n_hi) j["n_hi"] = *row.n_hi;
    if (row.oracle_agree) j["oracle_agree"] = *row.oracle_agree;
    os << j.dump() << "\n";
  } else if (opt.format == "csv") {
    os << "kind,arg,exact,main_term,residual,allowance,residual_over_allowance\n";
    os << row.what << ',' << row.arg << ',' << row.exact << ',' << format_real(row.main_term) << ','
       << format_real(residual) << ',' << format_real(row.allowance) << ',' << format_real(residual / row.allowance)
       << '\n';
  } else {
    os << row.what << "(" << row.arg << ") = " << row.exact << "\n";
    if (row.n_hi) os << "window: N <= xy <= " << *row.n_hi << "\n";
    os << "main term = " << fixed(row.main_term, 6) << "\n";
    os << "residual = " << fixed(residual, 6) << "\n";
    os << "residual / allowance = " << fixed(residual / row.allowance, 6) << "\n";
    if (row.oracle_agree) os << "oracle: " << (*row.oracle_agree ? "agree" : "DISAGREE") << "\n";
  }
  return row.oracle_agree.value_or(true) ? kOk : kSelfCheck;
}

int cmd_nt(const std::string& sub, const Options& opt, Int cap, std::ostream& out) {
  NtRow row;
  if (sub == "dsum") {
    require_n(opt.m, cap);
    row.what = "D";
    row.arg = opt.m;
    row.exact = divisor_summatory(opt.m);
    row.main_term = dirichlet_main_term(static_cast<double>(opt.m));
    row.allowance = std::cbrt(static_cast<double>(opt.m));
  } else if (sub == "fw") {
    if (opt.w < 1) throw DomainError("--w must be positive");
    row.what = "F";
    row.arg = opt.w;
    row.exact = primitive_pair_count(opt.w);
    row.main_term = primitive_pair_main_term(static_cast<double>(opt.w));
    row.allowance = static_cast<double>(opt.w);
  } else {
    require_n(opt.n, cap);
    StripSpec spec;
    if (opt.delta == "narrow") {
      spec = strip_spec(opt.n, StripWidth::narrow);
    } else if (opt.delta == "lemma") {
      spec = strip_spec(opt.n, StripWidth::lemma);
    } else {
      char* end = nullptr;
      const double d = std::strtod(opt.delta.c_str(), &end);
      if (end == opt.delta.c_str() || *end != '\0') throw DomainError("--delta must be narrow, lemma or a number");
      spec = strip_spec(opt.n, d);
    }
    row.what = "strip";
    row.arg = opt.n;
    row.exact = strip_count(spec);
    row.n_hi = spec.n_hi;
    row.main_term = spec.delta * std::log(static_cast<double>(opt.n));
    row.allowance = std::cbrt(static_cast<double>(opt.n));
    if (opt.oracle) row.oracle_agree = oracle::brute_strip_count(spec.n, spec.n_hi) == row.exact;
  }
  return emit_nt(opt, row, out);
}

int cmd_caps(const Options& opt, Int cap, std::ostream& out) {
  require_n(opt.n, cap);
  const auto chain = chain_vertices(opt.n);
  const auto& v = chain.vertices;
  struct Row {
    CapGeometry cap;
    double area;
    WidthResult width;
    bool empty;
  };
  std::vector<Row> rows;
  bool all_ok = true;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    Row r{cap_from_edge(v[i], v[i + 1], opt.n), edge_cap_area(v[i], v[i + 1], opt.n).value, {}, false};
    r.width = cap_lattice_width(r.cap);
    r.empty = cap_is_empty(r.cap);
    all_ok = all_ok && r.empty && r.width.width <= kHurkensBound + 1e-6;
    rows.push_back(r);
  }
  Sink sink(opt.out_path, out);
  auto& os = sink.stream();
  if (opt.format == "json") {
    auto arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"a", r.cap.p.a()},
                     {"b", r.cap.p.b()},
                     {"k_edge", to_string(r.cap.k_edge)},
                     {"h", r.cap.h},
                     {"rho", r.cap.rho},
                     {"r", r.cap.r},
                     {"x_p", r.cap.x_p},
                     {"cap_area", r.area},
                     {"width", r.width.width},
                     {"width_direction", {r.width.u, r.width.v}},
                     {"empty", r.empty},
                     {"hurkens_margin", kHurkensBound - r.width.width},
                     {"half_chord_ratio", r.cap.half_chord_ratio()},
                     {"level_is_ceil_lambda", r.cap.level_is_ceil_lambda},
                     {"chord_at_least_p", r.cap.chord_at_least_p}});
    }
    os << json{{"n", opt.n}, {"edges", arr}}.dump() << "\n";
  } else {
    const bool csv = opt.format == "csv";
    const char* sep = csv ? "," : " ";
    os << (csv ? "" : "# ")
       << "a,b,k_edge,h,rho,r,cap_area,width,width_u,width_v,empty,hurkens_margin,half_chord_ratio\n";
    for (const auto& r : rows) {
      os << r.cap.p.a() << sep << r.cap.p.b() << sep << to_string(r.cap.k_edge) << sep << format_real(r.cap.h) << sep
         << format_real(r.cap.rho) << sep << format_real(r.cap.r) << sep << format_real(r.area) << sep
         << format_real(r.width.width) << sep << r.width.u << sep << r.width.v << sep
         << (r.empty ? "true" : "false") << sep << format_real(kHurkensBound - r.width.width) << sep
         << format_real(r.cap.half_chord_ratio()) << "\n";
    }
  }
  return all_ok ? kOk : kSelfCheck;
}

int cmd_oracle(const Options& opt, Int cap, std::ostream& out) {
  require_n(opt.n, cap);
  bool ok = true;
  Sink sink(opt.out_path, out);
  auto& os = sink.stream();
  auto report = [&](const std::string& name, bool agree) {
    ok = ok && agree;
    os << name << ": " << (agree ? "agree" : "DISAGREE") << "\n";
  };
  report("chain", oracle::brute_chain(opt.n).vertices == chain_vertices(opt.n).vertices);
  for (auto width : {StripWidth::narrow, StripWidth::lemma}) {
    const auto spec = strip_spec(opt.n, width);
    report(width == StripWidth::narrow ? "strip narrow" : "strip lemma",
           oracle::brute_strip_count(spec.n, spec.n_hi) == strip_count(spec));
  }
  if (opt.n >= 8) {
    report("q polygon", oracle::brute_convex_hull(oracle::brute_q_lattice_points(opt.n)) == q_polygon(opt.n).vertices);
  }
  return ok ? kOk : kSelfCheck;
}

}  // namespace

Environment environment_from_process() {
  Environment env;
  if (const char* v = std::getenv("HYPERHULL_MAX_N")) env.max_n = std::string(v);
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Integer hull of {xy >= N}: vertices, missed areas and asymptotic scans", "hyperhull"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::string> formats{"text", "csv", "json"};
  app.add_option("--max-n", opt.max_n, "Lower the accepted bound on N (also HYPERHULL_MAX_N)");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", opt.out_path, "Write output to this file");
  };

  auto* hull = app.add_subcommand("hull", "Vertex chain of I(H_N)");
  hull->add_option("--n", opt.n, "N")->required();
  hull->add_option("--limit", opt.limit, "Print at most this many vertices");
  hull->add_flag("--oracle", opt.oracle, "Cross-check against the brute-force chain");
  add_common(hull);

  auto* area = app.add_subcommand("area", "Missed area A_N of I(Q_N)");
  area->add_option("--n", opt.n, "N (>= 8)")->required();
  area->add_flag("--oracle", opt.oracle, "Cross-check q_polygon against brute force");
  add_common(area);

  auto* scan = app.add_subcommand("scan", "Asymptotic table over a geometric grid");
  scan->add_option("--n-min", opt.n_min, "Smallest N (>= 8)")->required();
  scan->add_option("--n-max", opt.n_max, "Largest N")->required();
  scan->add_option("--points", opt.points, "Grid size (>= 2)")->required();
  scan->add_option("--threads", opt.threads, "Worker threads");
  scan->add_flag("--timings", opt.timings, "Fill elapsed_ms (output is then not reproducible)");
  scan->add_option("--gnuplot", opt.gnuplot_path, "Write a gnuplot script for the CSV");
  add_common(scan);

  auto* nt = app.add_subcommand("nt", "Divisor sums, strip counts and F(w)");
  nt->require_subcommand(1);
  auto* dsum = nt->add_subcommand("dsum", "D(M) = sum of d(n), n <= M");
  dsum->add_option("--m", opt.m, "M")->required();
  add_common(dsum);
  auto* fw = nt->add_subcommand("fw", "F(w) = #coprime (a, b) with ab <= w");
  fw->add_option("--w", opt.w, "w")->required();
  add_common(fw);
  auto* strip = nt->add_subcommand("strip", "Lattice points with N <= xy <= N + Delta");
  strip->add_option("--n", opt.n, "N")->required();
  strip->add_option("--delta", opt.delta, "narrow, lemma or a real width");
  strip->add_flag("--oracle", opt.oracle, "Cross-check by direct counting");
  add_common(strip);

  auto* caps = app.add_subcommand("caps", "Per-edge cap geometry and flatness");
  caps->add_option("--n", opt.n, "N")->required();
  add_common(caps);

  auto* orc = app.add_subcommand("oracle", "Compare fast paths with brute force");
  orc->add_option("--n", opt.n, "N")->required();
  add_common(orc);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArgs;
  }

  try {
    const Int cap = effective_max_n(opt, env);
    if (*hull) return cmd_hull(opt, cap, out);
    if (*area) return cmd_area(opt, cap, out);
    if (*scan) return cmd_scan(opt, cap, out);
    if (*dsum) return cmd_nt("dsum", opt, cap, out);
    if (*fw) return cmd_nt("fw", opt, cap, out);
    if (*strip) return cmd_nt("strip", opt, cap, out);
    if (*caps) return cmd_caps(opt, cap, out);
    if (*orc) return cmd_oracle(opt, cap, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArgs;
  } catch (const BoundError& e) {
    err << "error: " << e.what() << "\n";
    return kBound;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kBound;
  } catch (const SelfCheckError& e) {
    err << "self-check failed: " << e.what() << "\n";
    return kSelfCheck;
  }
  return kInvalidArgs;
}

}  // namespace hyperhull::cli
