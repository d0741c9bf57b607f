#include "piqc/outputs.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace piqc::bench {

namespace {

using nlohmann::json;

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json config_echo(const std::string& text) {
  if (text.empty()) return json::object();
  return json::parse(text);
}

json problem_json(const LoadedProblem& p) {
  return {{"label", p.label},
          {"n_qubits", p.problem.hamiltonian.n_qubits()},
          {"n_terms", p.problem.hamiltonian.terms().size()},
          {"reference_energy", p.reference_energy},
          {"reference_source", p.reference_source}};
}

json run_json(const AlgorithmSpec& spec, const SeedRun& run) {
  return {{"algorithm", std::string(algorithm_name(spec.algorithm))},
          {"label", spec.label},
          {"seed", run.seed},
          {"final_energy", number_or_null(run.trace.final_energy)},
          {"deterministic_final_energy", number_or_null(run.trace.deterministic_final_energy)},
          {"error", number_or_null(run.error)},
          {"iterations", run.trace.rows.size()},
          {"q_eval", run.trace.q_eval_total()},
          {"diverged", run.trace.diverged},
          {"diagnostic", run.trace.diagnostic}};
}

json aggregate_json(const AlgorithmResult& ar) {
  json j = {{"algorithm", std::string(algorithm_name(ar.spec.algorithm))},
            {"label", ar.spec.label},
            {"q_eval", ar.spec.q_eval()}};
  if (ar.aggregate) {
    j["median_error"] = ar.aggregate->median_error;
    j["min_error"] = ar.aggregate->min_error;
    j["max_error"] = ar.aggregate->max_error;
    j["n_seeds"] = ar.aggregate->n_seeds;
    j["within_chemical_accuracy"] = ar.aggregate->within_chemical_accuracy;
  } else {
    j["median_error"] = nullptr;
    j["n_seeds"] = 0;
  }
  return j;
}

json result_json(const ExperimentResult& result) {
  json runs = json::array();
  json aggregates = json::array();
  for (const auto& ar : result.algorithms) {
    for (const auto& run : ar.runs) runs.push_back(run_json(ar.spec, run));
    aggregates.push_back(aggregate_json(ar));
  }
  return {{"problem", problem_json(result.problem)}, {"results", runs}, {"aggregates", aggregates}};
}

void write_traces(const std::string& label, const std::vector<SeedRun>& runs, const std::filesystem::path& dir) {
  for (const auto& run : runs) {
    write_text_file(dir / ("trace_" + label + "_" + std::to_string(run.seed) + ".csv"), trace_csv(run.trace));
  }
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
}

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string trace_csv(const OptimizationTrace& trace) {
  std::string out = "iteration,D,energy_min,energy_mean,energy_max,q_eval\n";
  for (const auto& row : trace.rows) {
    out += std::to_string(row.iteration);
    out += ',';
    if (row.noise_level) out += format_number(*row.noise_level);
    out += ',' + format_number(row.energy_min) + ',' + format_number(row.energy_mean) + ',' +
           format_number(row.energy_max) + ',' + std::to_string(row.q_eval) + '\n';
  }
  return out;
}

std::string summary_json(const ExperimentResult& result, const std::string& config_text) {
  json doc = result_json(result);
  doc["config"] = config_echo(config_text);
  return doc.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out.flush()) throw std::runtime_error("write failed for " + path.string());
}

void emit_outputs(const ExperimentResult& result, const std::string& config_text,
                  const std::filesystem::path& out_dir) {
  ensure_dir(out_dir);
  for (const auto& ar : result.algorithms) write_traces(ar.spec.label, ar.runs, out_dir);
  write_text_file(out_dir / "summary.json", summary_json(result, config_text));
}

void emit_sweep_outputs(const SweepResult& result, const std::vector<SweepPoint>& points,
                        const std::filesystem::path& out_dir) {
  ensure_dir(out_dir);
  std::string csv = "point,label,algorithm,median_error,min_error,max_error,n_seeds\n";
  json doc = {{"points", json::array()}};
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    const auto& point = result.points[i];
    for (const auto& ar : point.algorithms) {
      csv += std::to_string(i) + ',' + result.labels[i] + ',' + ar.spec.label + ',';
      if (ar.aggregate) {
        csv += format_number(ar.aggregate->median_error) + ',' + format_number(ar.aggregate->min_error) + ',' +
               format_number(ar.aggregate->max_error) + ',' + std::to_string(ar.aggregate->n_seeds);
      } else {
        csv += ",,,0";
      }
      csv += '\n';
    }
    json p = result_json(point);
    p["label"] = result.labels[i];
    p["config"] = config_echo(points[i].config.source_text);
    doc["points"].push_back(std::move(p));
    emit_outputs(point, points[i].config.source_text, out_dir / ("point_" + std::to_string(i)));
  }
  write_text_file(out_dir / "sweep.csv", csv);
  write_text_file(out_dir / "sweep.json", doc.dump(2) + "\n");
}

void emit_anneal_outputs(const AnnealComparison& result, const std::string& config_text,
                         const std::filesystem::path& out_dir) {
  ensure_dir(out_dir);
  std::string csv = "iteration";
  for (const auto& c : result.columns) csv += ',' + c;
  csv += '\n';
  for (std::size_t i = 0; i < result.median_error.size(); ++i) {
    csv += std::to_string(i);
    for (double v : result.median_error[i]) {
      csv += ',';
      if (std::isfinite(v)) csv += format_number(v);
    }
    csv += '\n';
  }
  write_text_file(out_dir / "compare_anneal.csv", csv);

  json columns = json::array();
  for (std::size_t c = 0; c < result.columns.size(); ++c) {
    json runs = json::array();
    for (const auto& run : result.runs[c]) {
      runs.push_back({{"seed", run.seed},
                      {"final_energy", number_or_null(run.trace.final_energy)},
                      {"error", number_or_null(run.error)},
                      {"diverged", run.trace.diverged}});
    }
    const std::string tag = c == 0 ? "annealed" : "fixed_" + std::to_string(c);
    columns.push_back({{"column", result.columns[c]},
                       {"noise_level", number_or_null(result.noise_levels[c])},
                       {"trace_tag", tag},
                       {"final_median_error", number_or_null(result.final_median_error[c])},
                       {"runs", runs}});
    write_traces(tag, result.runs[c], out_dir);
  }
  json doc = {{"config", config_echo(config_text)}, {"problem", problem_json(result.problem)}, {"columns", columns}};
  write_text_file(out_dir / "compare_anneal.json", doc.dump(2) + "\n");
}

}  // namespace piqc::bench
