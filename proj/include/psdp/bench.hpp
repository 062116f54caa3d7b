#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "psdp/baselines.hpp"
#include "psdp/problem_gen.hpp"

namespace psdp {

enum class Method { OptPSDP, Grad, FGM };
const char* to_string(Method m);
std::optional<Method> method_from_string(std::string_view s);

/// One benchmark experiment: a generator family, the solver's γ, the methods
/// to compare, and how many seeded repetitions to average over. Repetition i
/// generates its instance with derive_seed(master_seed, i); all methods in a
/// repetition share the instance and the start X₀.
struct ExperimentSpec {
  std::string label;
  Index n = 0;
  Index m = 0;
  ProblemKind problem = ProblemKind::P1;
  OptimumKind optimum = OptimumKind::ProjectedRandom;
  double gamma = 0.85;
  std::vector<Method> methods{Method::OptPSDP, Method::Grad, Method::FGM};
  int reps = 50;
  std::uint64_t master_seed = 0;

  void validate() const;
};

/// Named presets E1..E18 matching the published experiment grid. E13..E18
/// use the rank-deficient optimum construction.
ExperimentSpec preset(const std::string& label);
std::vector<std::string> preset_labels();

struct RunOptions {
  BBRule bb_rule = BBRule::BB1;
  bool use_fastpath = true;
  bool record_first_trace = false;  // keep the rep-0 OptPSDP trace
};

/// Per-method aggregate over the successful repetitions of one experiment.
/// Failed repetitions (non-finite objective) are counted, never averaged in.
struct AggregateRow {
  std::string label;
  Method method = Method::OptPSDP;
  Index n = 0;
  Index m = 0;
  int problem = 1;
  double gamma = 0.0;
  double nitr_mean = 0.0;
  double nfe_mean = 0.0;
  double time_mean_s = 0.0;
  double xerr_mean = 0.0;
  double fval_mean = 0.0;
  std::optional<double> global_error_mean;
  std::optional<double> fastpath_rate;  // Cholesky shortcut hits / projections
  int reps = 0;
  int failures = 0;
};

struct ExperimentResult {
  std::vector<AggregateRow> rows;
  std::vector<TraceRow> first_trace;
};

ExperimentResult run_experiment(const ExperimentSpec& spec,
                                const RunOptions& opts = {});

enum class OutputFormat { Csv, Json, Markdown };
std::optional<OutputFormat> format_from_string(std::string_view s);

/// csv: fixed 13-column layout
///   label,method,n,m,problem,gamma,nitr,nfe,time_s,xerr,fval,global_error,fastpath_rate
/// markdown: one table per experiment label, mirroring the published layout.
/// json: list of row objects, full double precision.
std::string emit(const std::vector<AggregateRow>& rows, OutputFormat format);

}  // namespace psdp
