#pragma once

#include <filesystem>
#include <string>

#include "piqc/experiment.hpp"
#include "piqc/trace.hpp"

namespace piqc::bench {

/// Formats a double with 17 significant digits.
std::string format_number(double value);

/// CSV with header iteration,D,energy_min,energy_mean,energy_max,q_eval. The
/// D column is empty for SPSA rows.
std::string trace_csv(const OptimizationTrace& trace);

/// Summary document: config echo, reference energy, per-seed results and
/// per-algorithm aggregates.
std::string summary_json(const ExperimentResult& result, const std::string& config_text);

/// Writes trace_<label>_<seed>.csv for every run plus summary.json into
/// `out_dir` (created if needed). Throws std::runtime_error if unwritable.
void emit_outputs(const ExperimentResult& result, const std::string& config_text,
                  const std::filesystem::path& out_dir);

/// sweep.csv (one row per point and algorithm) and sweep.json; each point's
/// own outputs go to point_<i>/.
void emit_sweep_outputs(const SweepResult& result, const std::vector<SweepPoint>& points,
                        const std::filesystem::path& out_dir);

/// compare_anneal.csv: iteration then one median-error column per D setting;
/// traces for every column and seed; compare_anneal.json with final medians.
void emit_anneal_outputs(const AnnealComparison& result, const std::string& config_text,
                         const std::filesystem::path& out_dir);

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace piqc::bench
