#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "psdp/bench.hpp"
#include "psdp/serialize.hpp"

using namespace psdp;

TEST_CASE("preset table matches the published grid") {
  const ExperimentSpec e1 = preset("E1");
  CHECK(e1.n == 100);
  CHECK(e1.m == 70);
  CHECK(e1.problem == ProblemKind::P1);
  CHECK(e1.gamma == doctest::Approx(0.8));
  CHECK(e1.optimum == OptimumKind::ProjectedRandom);
  CHECK(e1.reps == 50);

  const ExperimentSpec e6 = preset("E6");
  CHECK(e6.n == 100);
  CHECK(e6.m == 50);
  CHECK(e6.problem == ProblemKind::P2);
  CHECK(e6.gamma == doctest::Approx(0.55));

  const ExperimentSpec e10 = preset("E10");
  CHECK(e10.n == 100);
  CHECK(e10.m == 10);
  CHECK(e10.problem == ProblemKind::P3);
  CHECK(e10.gamma == doctest::Approx(0.55));

  const ExperimentSpec e14 = preset("E14");
  CHECK(e14.optimum == OptimumKind::RankDeficient);
  CHECK(e14.n == 1000);
  CHECK(e14.m == 1000);

  CHECK(preset_labels().size() == 18);
  for (const std::string& label : preset_labels()) {
    const ExperimentSpec spec = preset(label);
    CHECK_NOTHROW(spec.validate());
    // the rank-deficient optimum belongs to the mixed grid only
    const int index = std::stoi(label.substr(1));
    CHECK((spec.optimum == OptimumKind::RankDeficient) == (index >= 13));
  }
  CHECK_THROWS_AS(preset("E19"), std::invalid_argument);
}

TEST_CASE("run_experiment is deterministic and shares X0 across methods") {
  ExperimentSpec spec;
  spec.label = "tiny";
  spec.n = 12;
  spec.m = 8;
  spec.problem = ProblemKind::P1;
  spec.gamma = 0.8;
  spec.reps = 2;
  spec.master_seed = 7;

  const ExperimentResult a = run_experiment(spec);
  const ExperimentResult b = run_experiment(spec);
  REQUIRE(a.rows.size() == 3);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].nitr_mean == b.rows[i].nitr_mean);
    CHECK(a.rows[i].fval_mean == b.rows[i].fval_mean);
    CHECK(a.rows[i].xerr_mean == b.rows[i].xerr_mean);
    CHECK(a.rows[i].reps == 2);
    CHECK(a.rows[i].failures == 0);
  }
  const std::string csv_a = emit(a.rows, OutputFormat::Csv);
  const std::string csv_b = emit(b.rows, OutputFormat::Csv);
  // identical modulo the time_s column, which is the 9th field
  std::istringstream sa(csv_a), sb(csv_b);
  std::string la, lb;
  while (std::getline(sa, la) && std::getline(sb, lb)) {
    auto strip_time = [](const std::string& line) {
      std::string out;
      int field = 0;
      for (char c : line) {
        if (c == ',') ++field;
        if (field != 8 || c == ',') out += c;
      }
      return out;
    };
    CHECK(strip_time(la) == strip_time(lb));
  }
}

TEST_CASE("per-method results do not depend on the method order") {
  // all methods inside a repetition share the generated instance and X0
  ExperimentSpec spec;
  spec.label = "tiny";
  spec.n = 10;
  spec.m = 7;
  spec.problem = ProblemKind::P1;
  spec.gamma = 0.8;
  spec.reps = 2;
  spec.master_seed = 11;
  spec.methods = {Method::OptPSDP, Method::Grad};
  const ExperimentResult ab = run_experiment(spec);
  spec.methods = {Method::Grad, Method::OptPSDP};
  const ExperimentResult ba = run_experiment(spec);
  CHECK(ab.rows[0].nitr_mean == ba.rows[1].nitr_mean);
  CHECK(ab.rows[0].fval_mean == ba.rows[1].fval_mean);
  CHECK(ab.rows[1].nitr_mean == ba.rows[0].nitr_mean);
  CHECK(ab.rows[1].xerr_mean == ba.rows[0].xerr_mean);
}

TEST_CASE("run_experiment records the rep-0 trace on request") {
  ExperimentSpec spec;
  spec.label = "tiny";
  spec.n = 10;
  spec.m = 6;
  spec.problem = ProblemKind::P2;
  spec.gamma = 0.85;
  spec.reps = 1;
  spec.methods = {Method::OptPSDP};
  RunOptions opts;
  opts.record_first_trace = true;
  const ExperimentResult result = run_experiment(spec, opts);
  CHECK(result.first_trace.size() ==
        static_cast<std::size_t>(result.rows[0].nitr_mean));
}

TEST_CASE("fastpath rate is reported for the spectral method only") {
  ExperimentSpec spec;
  spec.label = "tiny";
  spec.n = 10;
  spec.m = 6;
  spec.problem = ProblemKind::P1;
  spec.gamma = 0.8;
  spec.reps = 1;
  const ExperimentResult result = run_experiment(spec);
  for (const AggregateRow& row : result.rows) {
    if (row.method == Method::OptPSDP) {
      REQUIRE(row.fastpath_rate.has_value());
      CHECK(*row.fastpath_rate >= 0.0);
      CHECK(*row.fastpath_rate <= 1.0);
    } else {
      CHECK_FALSE(row.fastpath_rate.has_value());
    }
  }
}

TEST_CASE("csv emit layout") {
  CHECK(emit({}, OutputFormat::Csv) ==
        "label,method,n,m,problem,gamma,nitr,nfe,time_s,xerr,fval,"
        "global_error,fastpath_rate\n");

  AggregateRow row;
  row.label = "E1";
  row.method = Method::Grad;
  row.n = 100;
  row.m = 70;
  row.problem = 1;
  row.gamma = 0.8;
  row.nitr_mean = 746;
  row.nfe_mean = 747;
  row.time_mean_s = 0.808;
  row.xerr_mean = 9.96e-6;
  row.fval_mean = 1.06e-6;
  row.global_error_mean = 17.3;
  const std::string text = emit({row}, OutputFormat::Csv);
  std::istringstream ss(text);
  std::string header, line;
  std::getline(ss, header);
  std::getline(ss, line);
  CHECK(std::count(line.begin(), line.end(), ',') == 12);  // 13 fields
  CHECK(line.substr(0, 8) == "E1,Grad,");
  CHECK(line.back() == ',');  // absent fastpath rate stays empty
}

TEST_CASE("markdown emit groups rows per experiment") {
  AggregateRow a;
  a.label = "E1";
  a.method = Method::OptPSDP;
  a.n = 100;
  a.m = 70;
  a.problem = 1;
  a.gamma = 0.8;
  AggregateRow b = a;
  b.method = Method::Grad;
  AggregateRow c = a;
  c.label = "E2";
  const std::string md = emit({a, b, c}, OutputFormat::Markdown);
  CHECK(md.find("### E1: n = 100, m = 70, problem = 1, gamma = 0.8") !=
        std::string::npos);
  CHECK(md.find("### E2") != std::string::npos);
  CHECK(md.find("| OptPSDP |") != std::string::npos);
  CHECK(md.find("| Grad |") != std::string::npos);
}

TEST_CASE("json emit round-trips the rows") {
  AggregateRow row;
  row.label = "E5";
  row.method = Method::FGM;
  row.n = 30;
  row.m = 10;
  row.problem = 2;
  row.gamma = 0.85;
  row.nitr_mean = 1289.04;
  row.nfe_mean = 1290.04;
  row.time_mean_s = 0.251;
  row.xerr_mean = 9.96e-6;
  row.fval_mean = 3.55e-9;
  row.global_error_mean = 16.5;
  row.reps = 50;

  AggregateRow row2 = row;
  row2.method = Method::OptPSDP;
  row2.fastpath_rate = 0.25;
  row2.global_error_mean.reset();

  const std::string text = emit({row, row2}, OutputFormat::Json);
  const nlohmann::json parsed = nlohmann::json::parse(text);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    const AggregateRow back = aggregate_row_from_json(parsed[i]);
    const AggregateRow& orig = i == 0 ? row : row2;
    CHECK(back.label == orig.label);
    CHECK(back.method == orig.method);
    CHECK(back.n == orig.n);
    CHECK(back.m == orig.m);
    CHECK(back.problem == orig.problem);
    CHECK(back.gamma == orig.gamma);
    CHECK(back.nitr_mean == orig.nitr_mean);
    CHECK(back.nfe_mean == orig.nfe_mean);
    CHECK(back.time_mean_s == orig.time_mean_s);
    CHECK(back.xerr_mean == orig.xerr_mean);
    CHECK(back.fval_mean == orig.fval_mean);
    CHECK(back.global_error_mean == orig.global_error_mean);
    CHECK(back.fastpath_rate == orig.fastpath_rate);
    CHECK(back.reps == orig.reps);
    CHECK(back.failures == orig.failures);
  }
}

TEST_CASE("experiment spec validation") {
  ExperimentSpec spec;
  spec.label = "x";
  spec.n = 10;
  spec.m = 5;
  spec.reps = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.reps = 1;
  spec.methods.clear();
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("method and format parsing") {
  CHECK(method_from_string("optpsdp") == Method::OptPSDP);
  CHECK(method_from_string("OptPSDP") == Method::OptPSDP);
  CHECK(method_from_string("grad") == Method::Grad);
  CHECK(method_from_string("fgm") == Method::FGM);
  CHECK_FALSE(method_from_string("partan").has_value());
  CHECK(format_from_string("csv") == OutputFormat::Csv);
  CHECK_FALSE(format_from_string("xml").has_value());
}
