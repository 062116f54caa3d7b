#include "psdp/serialize.hpp"

#include <ostream>
#include <set>
#include <stdexcept>

namespace psdp {

namespace {

nlohmann::json matrix_to_json(const Matrix& M) {
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(M.size()));
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j) flat.push_back(M(i, j));
  return flat;
}

Matrix matrix_from_json(const nlohmann::json& j, Index rows, Index cols) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(rows * cols))
    throw std::invalid_argument("matrix field has wrong length");
  Matrix M(rows, cols);
  std::size_t k = 0;
  for (Index i = 0; i < rows; ++i)
    for (Index c = 0; c < cols; ++c) M(i, c) = j[k++].get<double>();
  return M;
}

int problem_to_int(ProblemKind k) { return static_cast<int>(k); }

ProblemKind problem_from_int(int p) {
  if (p < 1 || p > 3) throw std::invalid_argument("problem must be 1, 2 or 3");
  return static_cast<ProblemKind>(p);
}

const char* optimum_to_string(OptimumKind k) {
  return k == OptimumKind::RankDeficient ? "rank_deficient" : "projected_random";
}

OptimumKind optimum_from_string(const std::string& s) {
  if (s == "projected_random") return OptimumKind::ProjectedRandom;
  if (s == "rank_deficient") return OptimumKind::RankDeficient;
  throw std::invalid_argument("unknown optimum kind: " + s);
}

}  // namespace

nlohmann::json to_json(const ProblemInstance& inst) {
  nlohmann::json j{{"label", inst.label},
                   {"n", inst.n()},
                   {"m", inst.m()},
                   {"A", matrix_to_json(inst.A)},
                   {"B", matrix_to_json(inst.B)}};
  if (inst.known_optimum)
    j["X_star"] = matrix_to_json(inst.known_optimum->matrix());
  return j;
}

ProblemInstance instance_from_json(const nlohmann::json& j) {
  ProblemInstance inst;
  inst.label = j.at("label").get<std::string>();
  const Index n = j.at("n").get<Index>();
  const Index m = j.at("m").get<Index>();
  inst.A = matrix_from_json(j.at("A"), n, m);
  inst.B = matrix_from_json(j.at("B"), n, m);
  if (j.contains("X_star"))
    inst.known_optimum = PsdMatrix::checked(matrix_from_json(j.at("X_star"), n, n));
  inst.validate();
  return inst;
}

nlohmann::json to_json(const SolveReport& report) {
  nlohmann::json j{{"n", report.X_hat.rows()},
                   {"X_hat", matrix_to_json(report.X_hat)},
                   {"nitr", report.nitr},
                   {"nfe", report.nfe},
                   {"wall_time_s", report.wall_time_s},
                   {"fval", report.fval},
                   {"xerr", report.xerr},
                   {"termination", to_string(report.termination)},
                   {"fastpath_hits", report.fastpath_hits},
                   {"projections", report.projections}};
  if (report.global_error) j["global_error"] = *report.global_error;
  return j;
}

nlohmann::json to_json(const ExperimentSpec& spec) {
  nlohmann::json methods = nlohmann::json::array();
  for (Method m : spec.methods) methods.push_back(to_string(m));
  return {{"label", spec.label},
          {"n", spec.n},
          {"m", spec.m},
          {"problem", problem_to_int(spec.problem)},
          {"optimum", optimum_to_string(spec.optimum)},
          {"gamma", spec.gamma},
          {"methods", methods},
          {"reps", spec.reps},
          {"master_seed", spec.master_seed}};
}

ExperimentSpec experiment_from_json(const nlohmann::json& j) {
  ExperimentSpec spec;
  spec.label = j.at("label").get<std::string>();
  spec.n = j.at("n").get<Index>();
  spec.m = j.at("m").get<Index>();
  spec.problem = problem_from_int(j.at("problem").get<int>());
  if (j.contains("optimum"))
    spec.optimum = optimum_from_string(j.at("optimum").get<std::string>());
  spec.gamma = j.at("gamma").get<double>();
  if (j.contains("methods")) {
    spec.methods.clear();
    for (const auto& name : j.at("methods")) {
      const auto m = method_from_string(name.get<std::string>());
      if (!m)
        throw std::invalid_argument("unknown method: " +
                                    name.get<std::string>());
      spec.methods.push_back(*m);
    }
  }
  if (j.contains("reps")) spec.reps = j.at("reps").get<int>();
  if (j.contains("master_seed"))
    spec.master_seed = j.at("master_seed").get<std::uint64_t>();
  spec.validate();
  return spec;
}

std::vector<ExperimentSpec> experiment_batch_from_json(const nlohmann::json& j) {
  if (!j.is_array())
    throw std::invalid_argument("batch file must be a JSON list of experiments");
  std::vector<ExperimentSpec> specs;
  std::set<std::string> labels;
  for (const auto& item : j) {
    ExperimentSpec spec = experiment_from_json(item);
    if (!labels.insert(spec.label).second)
      throw std::invalid_argument("duplicate experiment label: " + spec.label);
    specs.push_back(std::move(spec));
  }
  return specs;
}

nlohmann::json to_json(const AggregateRow& row) {
  nlohmann::json j{{"label", row.label},
                   {"method", to_string(row.method)},
                   {"n", row.n},
                   {"m", row.m},
                   {"problem", row.problem},
                   {"gamma", row.gamma},
                   {"nitr", row.nitr_mean},
                   {"nfe", row.nfe_mean},
                   {"time_s", row.time_mean_s},
                   {"xerr", row.xerr_mean},
                   {"fval", row.fval_mean},
                   {"reps", row.reps},
                   {"failures", row.failures}};
  if (row.global_error_mean) j["global_error"] = *row.global_error_mean;
  if (row.fastpath_rate) j["fastpath_rate"] = *row.fastpath_rate;
  return j;
}

AggregateRow aggregate_row_from_json(const nlohmann::json& j) {
  AggregateRow row;
  row.label = j.at("label").get<std::string>();
  const auto m = method_from_string(j.at("method").get<std::string>());
  if (!m) throw std::invalid_argument("unknown method in row");
  row.method = *m;
  row.n = j.at("n").get<Index>();
  row.m = j.at("m").get<Index>();
  row.problem = j.at("problem").get<int>();
  row.gamma = j.at("gamma").get<double>();
  row.nitr_mean = j.at("nitr").get<double>();
  row.nfe_mean = j.at("nfe").get<double>();
  row.time_mean_s = j.at("time_s").get<double>();
  row.xerr_mean = j.at("xerr").get<double>();
  row.fval_mean = j.at("fval").get<double>();
  row.reps = j.at("reps").get<int>();
  row.failures = j.at("failures").get<int>();
  if (j.contains("global_error"))
    row.global_error_mean = j.at("global_error").get<double>();
  if (j.contains("fastpath_rate"))
    row.fastpath_rate = j.at("fastpath_rate").get<double>();
  return row;
}

void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& trace) {
  os << "k,tau,C,Q,fval,trials,fastpath\n";
  char buf[128];
  for (const TraceRow& r : trace) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%d,%d\n", r.k,
                  r.tau, r.C, r.Q, r.fval, r.trials, r.fastpath ? 1 : 0);
    os << buf;
  }
}

}  // namespace psdp
