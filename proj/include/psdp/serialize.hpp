#pragma once

#include <iosfwd>

#include <json.hpp>

#include "psdp/bench.hpp"

namespace psdp {

/// Instance fixture format: {label, n, m, A, B, X_star?} with matrices as
/// row-major flat arrays.
nlohmann::json to_json(const ProblemInstance& inst);
ProblemInstance instance_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SolveReport& report);

nlohmann::json to_json(const ExperimentSpec& spec);
ExperimentSpec experiment_from_json(const nlohmann::json& j);
/// A batch file is a JSON list of experiment objects.
std::vector<ExperimentSpec> experiment_batch_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AggregateRow& row);
AggregateRow aggregate_row_from_json(const nlohmann::json& j);

/// Iteration trace as CSV with columns k,tau,C,Q,fval,trials,fastpath.
void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& trace);

}  // namespace psdp
