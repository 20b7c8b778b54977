#include "uavplace/reproduce.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <tuple>

namespace uavplace {

namespace {

using enum SolverKind;

constexpr Distribution kSym = Distribution::SymmetricGrid;
constexpr Distribution kUni = Distribution::UniformPerFloor;

std::string fmt(const char* format, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

std::string row_label(const PublishedRow& r) {
    return fmt("%s/%s z_b=%g x_b=%g", std::string(to_string(r.solver)).c_str(),
               std::string(to_string(r.distribution)).c_str(), r.z_b, r.x_b);
}

const RowOutcome* find(const std::vector<RowOutcome>& rows, SolverKind solver,
                       Distribution distribution, double z_b, double x_b) {
    for (const RowOutcome& r : rows) {
        const PublishedRow& p = r.published;
        if (p.solver == solver && p.distribution == distribution && p.z_b == z_b && p.x_b == x_b) {
            return &r;
        }
    }
    return nullptr;
}

void trend_check(ReproduceReport& report, const std::string& label, SolverKind solver,
                 Distribution distribution, const std::vector<std::pair<double, double>>& keys,
                 bool increasing) {
    std::string detail = "|x*| =";
    bool pass = true;
    double previous = 0.0;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const RowOutcome* r = find(report.rows, solver, distribution, keys[i].first, keys[i].second);
        if (r == nullptr) return;
        const double value = std::abs(r->best.x);
        detail += fmt(" %.3f", value);
        if (i > 0) pass = pass && (increasing ? value > previous : value < previous);
        previous = value;
    }
    report.checks.push_back({label + " " + std::string(to_string(solver)), detail, pass});
}

}  // namespace

const std::vector<PublishedRow>& published_results() {
    static const std::vector<PublishedRow> rows = {
        {GradientDescent, kSym, 200, 20, 50, {-24.7967, 25, 100}, 7.6733e4},
        {Pso, kSym, 200, 20, 50, {-24.7491, 24.9419, 100.0491}, 7.6733e4},
        {GradientDescent, kSym, 250, 20, 50, {-35.2978, 25, 125}, 9.7381e4},
        {Pso, kSym, 250, 20, 50, {-35.3077, 24.9162, 125.0544}, 9.7381e4},
        {GradientDescent, kSym, 300, 20, 50, {-45.1131, 25, 150}, 1.1837e5},
        {Pso, kSym, 300, 20, 50, {-45.1352, 25.0371, 149.7681}, 1.1837e5},
        {GradientDescent, kUni, 200, 20, 50, {-24.7254, 25, 100}, 7.8853e4},
        {Pso, kUni, 200, 20, 50, {-21.7995, 37.3891, 111.7901}, 7.8645e4},
        {GradientDescent, kUni, 250, 20, 50, {-33.8180, 25, 125}, 9.9855e4},
        {Pso, kUni, 250, 20, 50, {-32.9212, 28.7125, 124.0291}, 9.9725e4},
        {GradientDescent, kUni, 300, 20, 50, {-43.1170, 25, 150}, 1.2154e5},
        {Pso, kUni, 300, 20, 50, {-46.5898, 31.5061, 143.8588}, 1.2117e5},
        {GradientDescent, kUni, 250, 10, 50, {-38.5210, 25, 125}, 9.7413e4},
        {Pso, kUni, 250, 10, 50, {-32.1042, 21.0174, 129.2663}, 9.7252e4},
        {GradientDescent, kUni, 250, 30, 50, {-29.3930, 25, 125}, 1.0275e5},
        {Pso, kUni, 250, 30, 50, {-25.5294, 4.9387, 138.7650}, 1.0211e5},
        {GradientDescent, kUni, 250, 50, 50, {-22.7119, 25, 125}, 1.0753e5},
        {Pso, kUni, 250, 50, 50, {-14.5488, 17.3082, 131.8940}, 1.0696e5},
    };
    return rows;
}

Scenario published_scenario(const PublishedRow& row, const ReproduceOptions& options) {
    Scenario s;
    s.name = row_label(row);
    s.building = Building{row.x_b, row.y_b, row.z_b, 5.0};
    s.users.distribution = row.distribution;
    s.users.users_per_floor = 20;
    s.seed = options.seed;
    s.conventions = options.conventions;
    s.cost_unit = options.cost_unit;
    s.solver = row.solver;
    return s;
}

bool ReproduceReport::passed() const {
    for (const Check& c : checks) {
        if (!c.pass) return false;
    }
    return !checks.empty();
}

bool ReproduceReport::passed(std::string_view prefix) const {
    bool any = false;
    for (const Check& c : checks) {
        if (c.label.starts_with(prefix)) {
            any = true;
            if (!c.pass) return false;
        }
    }
    return any;
}

ReproduceReport reproduce(const ReproduceOptions& options) {
    ReproduceReport report;
    report.options = options;
    const bool comparable = options.cost_unit == CostUnit::DbSum;

    for (const PublishedRow& row : published_results()) {
        if (options.symmetric_only && row.distribution != kSym) continue;
        const RunRecord record = run_scenario(published_scenario(row, options));
        RowOutcome outcome{row, record.result.best_location, record.result.best_cost};
        report.rows.push_back(outcome);

        const std::string label = row_label(row);
        const double rel = outcome.total / row.total_loss_db - 1.0;
        if (row.distribution == kSym) {
            const Vec3 err = outcome.best - row.placement;
            const bool placed = std::abs(err.x) <= kPlacementTolM &&
                                std::abs(err.y) <= kPlacementTolM &&
                                std::abs(err.z) <= kPlacementTolM;
            report.checks.push_back(
                {"placement " + label,
                 fmt("(%.3f, %.3f, %.3f) vs (%.4f, %.4f, %.4f), tol %.1f m", outcome.best.x,
                     outcome.best.y, outcome.best.z, row.placement.x, row.placement.y,
                     row.placement.z, kPlacementTolM),
                 placed});
        }
        const double tol = row.distribution == kSym ? kSymmetricTotalRelTol : kUniformTotalRelTol;
        if (comparable) {
            report.checks.push_back({"total " + label,
                                     fmt("%.1f vs %.4g dB (%+.3f%%, tol %.1f%%)", outcome.total,
                                         row.total_loss_db, 100.0 * rel, 100.0 * tol),
                                     std::abs(rel) <= tol});
        } else {
            report.checks.push_back(
                {"total " + label,
                 fmt("%.6g (linear units, not comparable to published dB totals)", outcome.total),
                 false});
        }
    }

    // Ordering: swarm result no worse than the baseline on every uniform case.
    for (const RowOutcome& r : report.rows) {
        const PublishedRow& p = r.published;
        if (p.distribution != kUni || p.solver != Pso) continue;
        const RowOutcome* gd = find(report.rows, GradientDescent, kUni, p.z_b, p.x_b);
        if (gd == nullptr) continue;
        report.checks.push_back({fmt("ordering uniform z_b=%g x_b=%g", p.z_b, p.x_b),
                                 fmt("pso %.3f <= gd %.3f", r.total, gd->total),
                                 r.total <= gd->total});
    }

    for (SolverKind solver : {GradientDescent, Pso}) {
        trend_check(report, "trend height", solver, kSym, {{200, 20}, {250, 20}, {300, 20}}, true);
        if (!options.symmetric_only) {
            trend_check(report, "trend width", solver, kUni, {{250, 10}, {250, 30}, {250, 50}},
                        false);
        }
    }
    return report;
}

std::string format_report(const ReproduceReport& report) {
    std::string out = fmt("conventions: theta=%s indoor=%s  cost unit: %s  seed: %llu\n",
                          std::string(to_string(report.options.conventions.theta)).c_str(),
                          std::string(to_string(report.options.conventions.indoor)).c_str(),
                          std::string(to_string(report.options.cost_unit)).c_str(),
                          static_cast<unsigned long long>(report.options.seed));
    std::size_t failed = 0;
    for (const Check& c : report.checks) {
        out += fmt("%-4s  %-40s  %s\n", c.pass ? "PASS" : "FAIL", c.label.c_str(), c.detail.c_str());
        failed += c.pass ? 0 : 1;
    }
    out += fmt("%zu/%zu checks passed\n", report.checks.size() - failed, report.checks.size());
    return out;
}

}  // namespace uavplace
