#pragma once

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphfx/bench/run_stats.hpp"

namespace graphfx {

struct RunRecord {
  std::size_t run = 0;
  std::optional<vertex_t> source;
  RunStats stats;
};

struct BenchmarkReport {
  std::string primitive;
  std::string graph;
  std::uint64_t num_vertices = 0;
  std::uint64_t num_edges = 0;
  std::string strategy;
  std::string direction;
  std::size_t threads = 1;
  std::size_t repetitions = 0;
  std::vector<RunRecord> runs;
  double mean_runtime_ms = 0;
  double mean_preprocessing_ms = 0;
  std::optional<double> mean_mteps;
};

struct SweepRow {
  double do_a = 0;
  double do_b = 0;
  std::size_t runs = 0;
  double mean_runtime_ms = 0;
  std::optional<double> mean_mteps;
};

enum class OutputFormat { Json, Csv, Table };

inline OutputFormat parse_output_format(std::string_view s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "table") return OutputFormat::Table;
  throw ConfigError("unknown output format '" + std::string(s) + "'");
}

inline bool operator==(const IterationStats& a, const IterationStats& b) {
  return a.iteration == b.iteration && a.frontier_in == b.frontier_in &&
         a.frontier_out == b.frontier_out && a.mode == b.mode && a.runtime_ms == b.runtime_ms &&
         a.unvisited_estimate == b.unvisited_estimate;
}

inline bool operator==(const RunStats& a, const RunStats& b) {
  return a.total_runtime_ms == b.total_runtime_ms && a.preprocessing_ms == b.preprocessing_ms &&
         a.per_iteration == b.per_iteration && a.edges_traversed == b.edges_traversed &&
         a.mteps == b.mteps && a.iterations == b.iterations &&
         a.direction_switches == b.direction_switches;
}

inline bool operator==(const RunRecord& a, const RunRecord& b) {
  return a.run == b.run && a.source == b.source && a.stats == b.stats;
}

inline bool operator==(const BenchmarkReport& a, const BenchmarkReport& b) {
  return a.primitive == b.primitive && a.graph == b.graph && a.num_vertices == b.num_vertices &&
         a.num_edges == b.num_edges && a.strategy == b.strategy && a.direction == b.direction &&
         a.threads == b.threads && a.repetitions == b.repetitions && a.runs == b.runs &&
         a.mean_runtime_ms == b.mean_runtime_ms &&
         a.mean_preprocessing_ms == b.mean_preprocessing_ms && a.mean_mteps == b.mean_mteps;
}

namespace detail {

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <typename T>
std::optional<T> json_optional(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const IterationStats& s) {
  j = {{"iteration", s.iteration},
       {"frontier_in", s.frontier_in},
       {"frontier_out", s.frontier_out},
       {"mode", std::string(to_string(s.mode))},
       {"runtime_ms", s.runtime_ms},
       {"unvisited_estimate", detail::optional_json(s.unvisited_estimate)}};
}

inline void from_json(const nlohmann::json& j, IterationStats& s) {
  s.iteration = j.at("iteration").get<std::size_t>();
  s.frontier_in = j.at("frontier_in").get<std::size_t>();
  s.frontier_out = j.at("frontier_out").get<std::size_t>();
  s.mode = j.at("mode").get<std::string>() == "pull" ? TraversalMode::Pull : TraversalMode::Push;
  s.runtime_ms = j.at("runtime_ms").get<double>();
  s.unvisited_estimate = detail::json_optional<double>(j.at("unvisited_estimate"));
}

inline void to_json(nlohmann::json& j, const RunStats& s) {
  j = {{"total_runtime_ms", s.total_runtime_ms},
       {"preprocessing_ms", s.preprocessing_ms},
       {"edges_traversed", s.edges_traversed},
       {"mteps", detail::optional_json(s.mteps)},
       {"iterations", s.iterations},
       {"direction_switches", s.direction_switches},
       {"per_iteration", s.per_iteration}};
}

inline void from_json(const nlohmann::json& j, RunStats& s) {
  s.total_runtime_ms = j.at("total_runtime_ms").get<double>();
  s.preprocessing_ms = j.at("preprocessing_ms").get<double>();
  s.edges_traversed = j.at("edges_traversed").get<std::uint64_t>();
  s.mteps = detail::json_optional<double>(j.at("mteps"));
  s.iterations = j.at("iterations").get<std::size_t>();
  s.direction_switches = j.at("direction_switches").get<std::size_t>();
  s.per_iteration = j.at("per_iteration").get<std::vector<IterationStats>>();
}

inline void to_json(nlohmann::json& j, const RunRecord& r) {
  j = {{"run", r.run}, {"source", detail::optional_json(r.source)}, {"stats", r.stats}};
}

inline void from_json(const nlohmann::json& j, RunRecord& r) {
  r.run = j.at("run").get<std::size_t>();
  r.source = detail::json_optional<vertex_t>(j.at("source"));
  r.stats = j.at("stats").get<RunStats>();
}

inline void to_json(nlohmann::json& j, const BenchmarkReport& r) {
  j = {{"primitive", r.primitive},
       {"graph", r.graph},
       {"num_vertices", r.num_vertices},
       {"num_edges", r.num_edges},
       {"strategy", r.strategy},
       {"direction", r.direction},
       {"threads", r.threads},
       {"repetitions", r.repetitions},
       {"mean_runtime_ms", r.mean_runtime_ms},
       {"mean_preprocessing_ms", r.mean_preprocessing_ms},
       {"mean_mteps", detail::optional_json(r.mean_mteps)},
       {"runs", r.runs}};
}

inline void from_json(const nlohmann::json& j, BenchmarkReport& r) {
  r.primitive = j.at("primitive").get<std::string>();
  r.graph = j.at("graph").get<std::string>();
  r.num_vertices = j.at("num_vertices").get<std::uint64_t>();
  r.num_edges = j.at("num_edges").get<std::uint64_t>();
  r.strategy = j.at("strategy").get<std::string>();
  r.direction = j.at("direction").get<std::string>();
  r.threads = j.at("threads").get<std::size_t>();
  r.repetitions = j.at("repetitions").get<std::size_t>();
  r.mean_runtime_ms = j.at("mean_runtime_ms").get<double>();
  r.mean_preprocessing_ms = j.at("mean_preprocessing_ms").get<double>();
  r.mean_mteps = detail::json_optional<double>(j.at("mean_mteps"));
  r.runs = j.at("runs").get<std::vector<RunRecord>>();
}

inline void to_json(nlohmann::json& j, const SweepRow& r) {
  j = {{"do_a", r.do_a},
       {"do_b", r.do_b},
       {"runs", r.runs},
       {"mean_runtime_ms", r.mean_runtime_ms},
       {"mean_mteps", detail::optional_json(r.mean_mteps)}};
}

inline constexpr const char* kRunCsvHeader =
    "primitive,graph,run,source,runtime_ms,preprocessing_ms,edges_traversed,mteps,iterations,"
    "direction_switches";
inline constexpr const char* kSweepCsvHeader = "do_a,do_b,runs,mean_runtime_ms,mean_mteps";

namespace detail {

inline std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

template <typename T>
std::string fmt_optional(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return fmt_double(*v);
  } else {
    return std::to_string(*v);
  }
}

/// Quotes a CSV field when it contains a separator, quote or newline.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// JSON: one object, pretty printed.
inline void emit_json(std::ostream& out, const BenchmarkReport& r) {
  out << nlohmann::json(r).dump(2) << '\n';
}

/// CSV: one row per run. Absent values (mteps for sssp, source for
/// source-free primitives) are empty fields.
inline void emit_csv(std::ostream& out, const BenchmarkReport& r) {
  out << kRunCsvHeader << '\n';
  for (const auto& run : r.runs) {
    out << detail::csv_field(r.primitive) << ',' << detail::csv_field(r.graph) << ',' << run.run
        << ',' << detail::fmt_optional(run.source) << ','
        << detail::fmt_double(run.stats.total_runtime_ms) << ','
        << detail::fmt_double(run.stats.preprocessing_ms) << ',' << run.stats.edges_traversed
        << ',' << detail::fmt_optional(run.stats.mteps) << ',' << run.stats.iterations << ','
        << run.stats.direction_switches << '\n';
  }
}

inline void emit_table(std::ostream& out, const BenchmarkReport& r) {
  out << r.primitive << " on " << r.graph << " (n=" << r.num_vertices << ", m=" << r.num_edges
      << ", strategy=" << r.strategy << ", direction=" << r.direction
      << ", threads=" << r.threads << ")\n";
  auto mteps = [](const std::optional<double>& v) {
    std::ostringstream os;
    if (v) {
      os << std::fixed << std::setprecision(2) << *v;
    } else {
      os << "n/a";
    }
    return os.str();
  };
  out << std::left << std::setw(6) << "run" << std::setw(12) << "source" << std::right
      << std::setw(14) << "runtime_ms" << std::setw(12) << "mteps" << std::setw(8) << "iters"
      << std::setw(16) << "edges" << '\n';
  out << std::fixed << std::setprecision(3);
  for (const auto& run : r.runs) {
    out << std::left << std::setw(6) << run.run << std::setw(12)
        << (run.source ? std::to_string(*run.source) : std::string("-")) << std::right
        << std::setw(14) << run.stats.total_runtime_ms << std::setw(12) << mteps(run.stats.mteps)
        << std::setw(8) << run.stats.iterations << std::setw(16) << run.stats.edges_traversed
        << '\n';
  }
  out << std::left << std::setw(18) << "mean" << std::right << std::setw(14) << r.mean_runtime_ms
      << std::setw(12) << mteps(r.mean_mteps) << '\n';
  out << std::defaultfloat;
}

inline void emit_report(std::ostream& out, const BenchmarkReport& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: emit_json(out, r); break;
    case OutputFormat::Csv: emit_csv(out, r); break;
    case OutputFormat::Table: emit_table(out, r); break;
  }
}

inline void emit_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& row : rows) {
    out << detail::fmt_double(row.do_a) << ',' << detail::fmt_double(row.do_b) << ',' << row.runs
        << ',' << detail::fmt_double(row.mean_runtime_ms) << ','
        << detail::fmt_optional(row.mean_mteps) << '\n';
  }
}

}  // namespace graphfx
