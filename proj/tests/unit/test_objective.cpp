#include <doctest.h>

#include <cmath>
#include <limits>

#include "support/property.hpp"
#include "uavplace/error.hpp"
#include "uavplace/objective.hpp"

using namespace uavplace;
using doctest::Approx;

namespace {

const Building kTall{20.0, 50.0, 200.0, 5.0};

// tests/oracles/compute_oracles.py
constexpr double kLoss40m = 89.461799739838872;
constexpr double kMinPower40m = 8.834459293458463e-5;
constexpr double kSym200TotalDb = 77011.956687141948;
constexpr double kSym200PowerW = 10.898654992805321;

RadioConfig unit_exponent_radio(double noise) {
    // v M / B = 1.
    return RadioConfig{1e6, 1e4, noise, 1.0, 100};
}

}  // namespace

TEST_CASE("single-user total") {
    const UserSet one({{10, 25, 102.5}}, Distribution::UniformPerFloor, 1, 0);
    const CostReport r = total_loss({-30, 25, 102.5}, one, kTall);
    CHECK(r.total_loss_db == Approx(kLoss40m).epsilon(1e-9));
    REQUIRE(r.per_user_loss.size() == 1);
    CHECK(r.feasible);
}

TEST_CASE("800-user symmetric total matches the independent summation") {
    const UserSet users = generate_symmetric_users(kTall, 20);
    const CostReport r = total_loss({-24.7967, 25, 100}, users, kTall);
    CHECK(r.per_user_loss.size() == 800);
    CHECK(r.total_loss_db == Approx(kSym200TotalDb).epsilon(1e-9));

    double sum = 0.0;
    for (double l : r.per_user_loss) sum += l;
    CHECK(sum == r.total_loss_db);

    // B = 20 MHz, v = 100 kbit/s, M = 800 gives v M / B = 4.
    const RadioConfig radio{20e6, 1e5, 1e-13, 100.0, 800};
    CHECK(total_power(r, radio) == Approx(kSym200PowerW).epsilon(1e-9));
}

TEST_CASE("duplicating users doubles the total exactly") {
    const UserSet users = generate_uniform_users(kTall, 20, 5);
    const Vec3 uav{-30, 20, 90};
    const double single = total_loss(uav, users, kTall).total_loss_db;
    const double twice = total_loss(uav, users.duplicated(), kTall).total_loss_db;
    CHECK(twice == Approx(2.0 * single).epsilon(1e-12));
}

TEST_CASE("feasibility flags") {
    const UserSet users = generate_symmetric_users(kTall, 20);
    SearchBounds bounds;
    CHECK(total_loss({-30, 25, 100}, users, kTall, {}, {}, &bounds).feasible);
    bounds.upper.z = 50;
    CHECK_FALSE(total_loss({-30, 25, 100}, users, kTall, {}, {}, &bounds).feasible);
    bounds = {};
    bounds.l_max = 1000.0;
    CHECK_FALSE(total_loss({-30, 25, 100}, users, kTall, {}, {}, &bounds).feasible);
    const UserSet empty({}, Distribution::UniformPerFloor, 1, 0);
    CHECK_THROWS_AS(total_loss({-30, 25, 100}, empty, kTall), ConfigError);
}

TEST_CASE("minimum power per user") {
    CHECK(min_power_per_user(0.0, unit_exponent_radio(1.0)) == Approx(1.0).epsilon(1e-12));
    CHECK(min_power_per_user(kLoss40m, unit_exponent_radio(1e-13)) ==
          Approx(kMinPower40m).epsilon(1e-9));
    RadioConfig silent = unit_exponent_radio(1.0);
    silent.rate_v = 0.0;
    CHECK(min_power_per_user(80.0, silent) == 0.0);
    RadioConfig greedy = unit_exponent_radio(1.0);
    greedy.rate_v = 1e12;
    CHECK_THROWS_AS(min_power_per_user(80.0, greedy), ConfigError);
}

TEST_CASE("total power sums per-user powers") {
    const RadioConfig radio = unit_exponent_radio(1e-13);
    CostReport one;
    one.per_user_loss = {kLoss40m};
    CHECK(total_power(one, radio) == min_power_per_user(kLoss40m, radio));
    CostReport two;
    two.per_user_loss = {kLoss40m, kLoss40m};
    CHECK(total_power(two, radio) == 2.0 * total_power(one, radio));
}

TEST_CASE("rate") {
    const RadioConfig radio = unit_exponent_radio(1e-13);
    CHECK(rate(kLoss40m, 0.0, radio) == 0.0);
    const double per_user_bandwidth = radio.bandwidth_b / radio.num_users_m;
    CHECK(rate(kLoss40m, kMinPower40m, radio) == Approx(per_user_bandwidth).epsilon(1e-9));
    CHECK(rate(kLoss40m, min_power_per_user(kLoss40m, radio), radio) ==
          Approx(radio.rate_v).epsilon(1e-12));
}

TEST_CASE("property: rate inverts the minimum power") {
    testing::for_all(1000, 31, [](testing::Gen& gen) {
        RadioConfig radio;
        radio.bandwidth_b = gen.uniform(1e5, 1e8);
        radio.num_users_m = gen.integer(1, 2000);
        radio.rate_v = gen.uniform(0.01, 20.0) * radio.bandwidth_b / radio.num_users_m;
        radio.noise_n = std::pow(10.0, gen.uniform(-16, -8));
        radio.p_t_max = 1.0;
        const double loss = gen.uniform(40, 160);
        const double p = min_power_per_user(loss, radio);
        CHECK(rate(loss, p, radio) == Approx(radio.rate_v).epsilon(1e-9));
    });
}

TEST_CASE("property: power and linear-loss sums pick the same candidate") {
    const UserSet users = generate_uniform_users(kTall, 20, 9);
    const RadioConfig radio{20e6, 1e5, 1e-13, 100.0, 800};
    testing::for_all(20, 32, [&](testing::Gen& gen) {
        std::size_t best_power = 0;
        std::size_t best_linear = 0;
        double min_power = std::numeric_limits<double>::infinity();
        double min_linear = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < 8; ++k) {
            const Vec3 uav{gen.uniform(-200, -1), gen.uniform(-50, 100), gen.uniform(0, 250)};
            const CostReport r = total_loss(uav, users, kTall);
            const double p = total_power(r, radio);
            double lin = 0.0;
            for (double l : r.per_user_loss) lin += std::pow(10.0, l / 10.0);
            if (p < min_power) {
                min_power = p;
                best_power = k;
            }
            if (lin < min_linear) {
                min_linear = lin;
                best_linear = k;
            }
        }
        CHECK(best_power == best_linear);
    });
}

TEST_CASE("placement objective: infinite outside the box, above l_max, and on a user") {
    const UserSet users = generate_symmetric_users(kTall, 20);
    SearchBounds bounds;
    bounds.lower = {-100, -100, -100};
    bounds.upper = {100, 100, 300};
    const PlacementObjective objective(users, kTall, {}, bounds);
    CHECK(std::isfinite(objective({-30, 25, 100})));
    CHECK(std::isinf(objective({-101, 25, 100})));
    CHECK(std::isinf(objective(users.users()[0])));

    SearchBounds capped = bounds;
    capped.l_max = 1000.0;
    const PlacementObjective tight(users, kTall, {}, capped);
    CHECK(std::isinf(tight({-30, 25, 100})));
    CHECK_FALSE(tight.report({-30, 25, 100}).feasible);
}

TEST_CASE("placement objective reproduces the report total bit for bit") {
    const UserSet users = generate_uniform_users(kTall, 20, 77);
    const PlacementObjective objective(users, kTall);
    const Vec3 p{-31.25, 22.5, 97.0};
    CHECK(objective(p) == objective.report(p).total_loss_db);
}

TEST_CASE("linear cost unit sums power ratios") {
    const UserSet users = generate_symmetric_users(Building{10, 10, 10, 5}, 1);
    const PlacementObjective linear(users, Building{10, 10, 10, 5}, {}, {}, {}, CostUnit::LinearSum);
    const Vec3 p{-20, 5, 5};
    const CostReport r = linear.report(p);
    double expected = 0.0;
    for (double l : r.per_user_loss) expected += std::pow(10.0, l / 10.0);
    CHECK(linear(p) == Approx(expected).epsilon(1e-12));
}

TEST_CASE("radio config helpers") {
    const RadioConfig radio{20e6, 1e5, 1e-13, 100.0, 800};
    CHECK_NOTHROW(radio.validate());
    CHECK(radio.snr_factor() == Approx(15.0).epsilon(1e-12));
    CHECK(radio.l_max_db() == Approx(10.0 * std::log10(100.0 / (15.0 * 1e-13))).epsilon(1e-12));
    CHECK_THROWS_AS((RadioConfig{0, 1, 1, 1, 1}.validate()), ConfigError);
    CHECK(parse_cost_unit("db") == CostUnit::DbSum);
    CHECK(parse_cost_unit("linear") == CostUnit::LinearSum);
    CHECK_FALSE(parse_cost_unit("watts").has_value());
}
