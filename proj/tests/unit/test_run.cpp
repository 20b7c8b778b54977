#include <doctest.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "uavplace/error.hpp"
#include "uavplace/reproduce.hpp"
#include "uavplace/run.hpp"

using namespace uavplace;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("uavplace_test_run_" + name);
    fs::remove_all(dir);
    return dir;
}

Scenario small_scenario() {
    Scenario s;
    s.building = Building{20, 50, 50, 5};
    s.pso.maxit = 30;
    return s;
}

}  // namespace

TEST_CASE("trace csv uses the documented header and round-trip numbers") {
    PlacementResult r;
    r.trace = {{0, 0.1}, {1, 1.0 / 3.0}, {2, 76990.29937154941}};
    const std::string csv = format_trace_csv(r);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "iteration,global_best_cost_db");
    int rows = 0;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        double value = 0.0;
        std::from_chars(line.data() + comma + 1, line.data() + line.size(), value);
        CHECK(value == r.trace[static_cast<std::size_t>(rows)].best_cost);
        ++rows;
    }
    CHECK(rows == 3);
    CHECK(csv.find("0.1\n") != std::string::npos);
}

TEST_CASE("run record reproduces its best cost on re-evaluation") {
    for (SolverKind solver : {SolverKind::Pso, SolverKind::GradientDescent, SolverKind::Grid}) {
        Scenario s = small_scenario();
        s.solver = solver;
        s.grid.coarse = 5.0;
        const RunRecord r = run_scenario(s);
        CHECK(r.feasible());
        CHECK(r.report.total_loss_db == r.result.best_cost);
        CHECK(build_objective(s)(r.result.best_location) == r.result.best_cost);
        CHECK(exit_code_for(r) == 0);
    }
}

TEST_CASE("radio config adds total power to the record") {
    Scenario s = small_scenario();
    s.radio = RadioConfig{20e6, 1e5, 1e-13, 100.0, 200};
    const RunRecord r = run_scenario(s);
    REQUIRE(r.report.total_power_w.has_value());
    CHECK(*r.report.total_power_w == doctest::Approx(total_power(r.report, *s.radio)));
}

TEST_CASE("unreachable loss cap yields an infeasible record and exit code 2") {
    for (SolverKind solver : {SolverKind::Pso, SolverKind::GradientDescent}) {
        Scenario s = small_scenario();
        s.solver = solver;
        s.bounds.l_max = 1000.0;
        const RunRecord r = run_scenario(s);
        CHECK_FALSE(r.feasible());
        CHECK(r.report.total_loss_db > 1000.0);
        CHECK(exit_code_for(r) == 2);
    }
}

TEST_CASE("result.json is identical across reruns apart from the timestamp") {
    const Scenario s = small_scenario();
    const fs::path a = scratch("a");
    const fs::path b = scratch("b");
    write_run_artifacts(run_scenario(s), s, a);
    write_run_artifacts(run_scenario(s), s, b);
    auto strip = [](const fs::path& p) {
        auto j = nlohmann::json::parse(slurp(p / "result.json"));
        CHECK(j.contains("timestamp"));
        j.erase("timestamp");
        return j.dump();
    };
    CHECK(strip(a) == strip(b));
    CHECK(slurp(a / "trace.csv") == slurp(b / "trace.csv"));

    const auto j = nlohmann::json::parse(slurp(a / "result.json"));
    CHECK(j["solver"] == "pso");
    CHECK(j["report"]["per_user_loss"].size() == 200);
    CHECK(j["scenario_digest"] == scenario_digest(s));
    CHECK(parse_scenario(j["scenario"].dump()) == s);
}

TEST_CASE("sweep writes one summary row per (value, solver)") {
    const fs::path out = scratch("sweep");
    Scenario base = small_scenario();
    const SweepSummary summary =
        run_sweep(base, SweepAxis::Height, {30, 50}, {SolverKind::Pso, SolverKind::GradientDescent}, out);
    CHECK_FALSE(summary.error.has_value());
    REQUIRE(summary.rows.size() == 4);
    CHECK(summary.rows[0].z_b == 30);
    CHECK(summary.rows[0].solver == SolverKind::Pso);
    CHECK(summary.rows[1].solver == SolverKind::GradientDescent);
    CHECK(summary.rows[3].z_b == 50);

    const std::string csv = slurp(out / "summary.csv");
    CHECK(csv.starts_with("solver,distribution,z_b,x_b,y_b,best_x,best_y,best_z,total_loss_db\n"));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    CHECK(fs::exists(out / "height_30_pso" / "result.json"));
    CHECK(fs::exists(out / "height_50_gd" / "trace.csv"));
}

TEST_CASE("sweep over widths and an empty sweep") {
    Scenario base = small_scenario();
    const SweepSummary widths = run_sweep(base, SweepAxis::Width, {10, 30}, {SolverKind::GradientDescent}, std::nullopt);
    REQUIRE(widths.rows.size() == 2);
    CHECK(widths.rows[1].x_b == 30);
    const SweepSummary empty = run_sweep(base, SweepAxis::Height, {}, {SolverKind::Pso}, scratch("empty"));
    CHECK(empty.rows.empty());
    CHECK_FALSE(empty.error.has_value());
}

TEST_CASE("sweep stops at the first failing run and keeps earlier rows") {
    Scenario base = small_scenario();
    const SweepSummary s =
        run_sweep(base, SweepAxis::Height, {30, 37, 50}, {SolverKind::GradientDescent}, std::nullopt);
    CHECK(s.rows.size() == 1);
    REQUIRE(s.error.has_value());
    CHECK(s.error->find("floor_height") != std::string::npos);
    CHECK(format_summary_csv(s).find("# partial") != std::string::npos);
}

TEST_CASE("published table has the 18 rows with matching solver pairs") {
    const auto& rows = published_results();
    REQUIRE(rows.size() == 18);
    for (std::size_t i = 0; i < rows.size(); i += 2) {
        CHECK(rows[i].solver == SolverKind::GradientDescent);
        CHECK(rows[i + 1].solver == SolverKind::Pso);
        CHECK(rows[i].z_b == rows[i + 1].z_b);
        CHECK(rows[i].x_b == rows[i + 1].x_b);
        CHECK(rows[i].distribution == rows[i + 1].distribution);
    }
}

TEST_CASE("linear cost unit marks totals as not comparable") {
    ReproduceOptions o;
    o.cost_unit = CostUnit::LinearSum;
    o.symmetric_only = true;
    const ReproduceReport r = reproduce(o);
    CHECK_FALSE(r.passed("total"));
    CHECK(format_report(r).find("not comparable") != std::string::npos);
}
