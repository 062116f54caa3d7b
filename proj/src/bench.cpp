#include "psdp/bench.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "psdp/serialize.hpp"

namespace psdp {

const char* to_string(Method m) {
  switch (m) {
    case Method::OptPSDP: return "OptPSDP";
    case Method::Grad: return "Grad";
    case Method::FGM: return "FGM";
  }
  return "?";
}

std::optional<Method> method_from_string(std::string_view s) {
  std::string lower(s);
  for (char& c : lower) c = static_cast<char>(std::tolower(c));
  if (lower == "optpsdp") return Method::OptPSDP;
  if (lower == "grad") return Method::Grad;
  if (lower == "fgm") return Method::FGM;
  return std::nullopt;
}

std::optional<OutputFormat> format_from_string(std::string_view s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  if (s == "markdown") return OutputFormat::Markdown;
  return std::nullopt;
}

void ExperimentSpec::validate() const {
  if (label.empty())
    throw std::invalid_argument("ExperimentSpec: label must not be empty");
  if (n < 1 || m < 1)
    throw std::invalid_argument("ExperimentSpec: dimensions must be positive");
  if (reps < 1) throw std::invalid_argument("ExperimentSpec: reps must be >= 1");
  if (!(gamma >= 0.0 && gamma < 1.0))
    throw std::invalid_argument("ExperimentSpec: gamma must be in [0,1)");
  if (methods.empty())
    throw std::invalid_argument("ExperimentSpec: no methods selected");
  if (optimum == OptimumKind::RankDeficient && n < 3)
    throw std::invalid_argument(
        "ExperimentSpec: rank-deficient optimum needs n >= 3");
}

namespace {

struct PresetDef {
  const char* label;
  Index n;
  Index m;
  int problem;
  double gamma;
  bool rank_deficient;
};

// E1..E4 well conditioned, E5..E8 and E9..E12 ill conditioned, E13..E18 the
// mixed grid with the rank-deficient optimum.
constexpr PresetDef kPresets[] = {
    {"E1", 100, 70, 1, 0.80, false},   {"E2", 150, 100, 1, 0.85, false},
    {"E3", 1000, 100, 1, 0.85, false}, {"E4", 1500, 1500, 1, 0.85, false},
    {"E5", 30, 10, 2, 0.85, false},    {"E6", 100, 50, 2, 0.55, false},
    {"E7", 60, 60, 2, 0.85, false},    {"E8", 120, 120, 2, 0.55, false},
    {"E9", 50, 10, 3, 0.55, false},    {"E10", 100, 10, 3, 0.55, false},
    {"E11", 100, 100, 3, 0.55, false}, {"E12", 150, 150, 3, 0.55, false},
    {"E13", 10, 70, 1, 0.55, true},    {"E14", 1000, 1000, 1, 0.85, true},
    {"E15", 60, 30, 2, 0.85, true},    {"E16", 100, 100, 2, 0.55, true},
    {"E17", 60, 30, 3, 0.55, true},    {"E18", 120, 120, 3, 0.55, true},
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

ProblemKind kind_from_int(int p) {
  switch (p) {
    case 1: return ProblemKind::P1;
    case 2: return ProblemKind::P2;
    case 3: return ProblemKind::P3;
  }
  throw std::invalid_argument("problem must be 1, 2 or 3");
}

}  // namespace

ExperimentSpec preset(const std::string& label) {
  for (const PresetDef& p : kPresets) {
    if (label == p.label) {
      ExperimentSpec spec;
      spec.label = p.label;
      spec.n = p.n;
      spec.m = p.m;
      spec.problem = kind_from_int(p.problem);
      spec.optimum = p.rank_deficient ? OptimumKind::RankDeficient
                                      : OptimumKind::ProjectedRandom;
      spec.gamma = p.gamma;
      return spec;
    }
  }
  throw std::invalid_argument("unknown preset label: " + label);
}

std::vector<std::string> preset_labels() {
  std::vector<std::string> out;
  for (const PresetDef& p : kPresets) out.emplace_back(p.label);
  return out;
}

ExperimentResult run_experiment(const ExperimentSpec& spec,
                                const RunOptions& opts) {
  spec.validate();

  struct Accum {
    double nitr = 0, nfe = 0, time = 0, xerr = 0, fval = 0, gerr = 0;
    long long fastpath_hits = 0, projections = 0;
    int gerr_count = 0, ok = 0, failed = 0;
  };
  std::vector<Accum> acc(spec.methods.size());
  ExperimentResult result;

  for (int rep = 0; rep < spec.reps; ++rep) {
    GeneratorSpec gen;
    gen.n = spec.n;
    gen.m = spec.m;
    gen.problem = spec.problem;
    gen.optimum = spec.optimum;
    gen.seed = derive_seed(spec.master_seed, static_cast<std::uint64_t>(rep));
    GeneratedInstance g = make_instance(gen);
    g.instance.label = spec.label;

    for (std::size_t mi = 0; mi < spec.methods.size(); ++mi) {
      const Method method = spec.methods[mi];
      try {
        SolveReport rep_out;
        if (method == Method::OptPSDP) {
          SolverConfig cfg;
          cfg.gamma = spec.gamma;
          cfg.bb_rule = opts.bb_rule;
          cfg.use_fastpath = opts.use_fastpath;
          cfg.record_trace = opts.record_first_trace && rep == 0;
          rep_out = solve(g.instance, g.X0, cfg);
          if (cfg.record_trace) result.first_trace = std::move(rep_out.trace);
        } else {
          BaselineConfig cfg;
          rep_out = method == Method::Grad ? grad_solve(g.instance, g.X0, cfg)
                                           : fgm_solve(g.instance, g.X0, cfg);
        }
        Accum& a = acc[mi];
        a.nitr += rep_out.nitr;
        a.nfe += rep_out.nfe;
        a.time += rep_out.wall_time_s;
        a.xerr += rep_out.xerr;
        a.fval += rep_out.fval;
        if (rep_out.global_error) {
          a.gerr += *rep_out.global_error;
          a.gerr_count += 1;
        }
        a.fastpath_hits += rep_out.fastpath_hits;
        a.projections += rep_out.projections;
        a.ok += 1;
      } catch (const NonFiniteError&) {
        acc[mi].failed += 1;
      }
    }
  }

  for (std::size_t mi = 0; mi < spec.methods.size(); ++mi) {
    const Accum& a = acc[mi];
    AggregateRow row;
    row.label = spec.label;
    row.method = spec.methods[mi];
    row.n = spec.n;
    row.m = spec.m;
    row.problem = static_cast<int>(spec.problem);
    row.gamma = spec.gamma;
    row.reps = a.ok;
    row.failures = a.failed;
    if (a.ok > 0) {
      row.nitr_mean = a.nitr / a.ok;
      row.nfe_mean = a.nfe / a.ok;
      row.time_mean_s = a.time / a.ok;
      row.xerr_mean = a.xerr / a.ok;
      row.fval_mean = a.fval / a.ok;
      if (a.gerr_count == a.ok) row.global_error_mean = a.gerr / a.ok;
    }
    if (spec.methods[mi] == Method::OptPSDP && a.projections > 0)
      row.fastpath_rate = static_cast<double>(a.fastpath_hits) /
                          static_cast<double>(a.projections);
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::string emit(const std::vector<AggregateRow>& rows, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Csv: {
      os << "label,method,n,m,problem,gamma,nitr,nfe,time_s,xerr,fval,"
            "global_error,fastpath_rate\n";
      for (const AggregateRow& r : rows) {
        os << r.label << ',' << to_string(r.method) << ',' << r.n << ','
           << r.m << ',' << r.problem << ',' << fmt(r.gamma) << ','
           << fmt(r.nitr_mean) << ',' << fmt(r.nfe_mean) << ','
           << fmt(r.time_mean_s) << ',' << fmt(r.xerr_mean) << ','
           << fmt(r.fval_mean) << ','
           << (r.global_error_mean ? fmt(*r.global_error_mean) : "") << ','
           << (r.fastpath_rate ? fmt(*r.fastpath_rate) : "") << '\n';
      }
      break;
    }
    case OutputFormat::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const AggregateRow& r : rows) arr.push_back(to_json(r));
      os << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::Markdown: {
      std::string current;
      for (const AggregateRow& r : rows) {
        if (r.label != current) {
          current = r.label;
          os << "\n### " << r.label << ": n = " << r.n << ", m = " << r.m
             << ", problem = " << r.problem << ", gamma = " << fmt(r.gamma)
             << "\n\n"
             << "| Method | Nitr | Nfe | Time | XErr | Fval | Global Error | "
                "Fastpath |\n"
             << "|--------|-----:|----:|-----:|-----:|-----:|-------------:|"
                "---------:|\n";
        }
        os << "| " << to_string(r.method) << " | " << fmt(r.nitr_mean)
           << " | " << fmt(r.nfe_mean) << " | " << fmt(r.time_mean_s)
           << " | " << fmt(r.xerr_mean) << " | " << fmt(r.fval_mean) << " | "
           << (r.global_error_mean ? fmt(*r.global_error_mean) : "-")
           << " | " << (r.fastpath_rate ? fmt(*r.fastpath_rate) : "-")
           << " |\n";
      }
      break;
    }
  }
  return os.str();
}

}  // namespace psdp
