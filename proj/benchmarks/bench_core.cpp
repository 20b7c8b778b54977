#include <benchmark/benchmark.h>

#include "uavplace/geometry.hpp"
#include "uavplace/objective.hpp"
#include "uavplace/solvers.hpp"

using namespace uavplace;

namespace {

const Building kBuilding{};

void BM_LinkGeometry(benchmark::State& state) {
    const Vec3 uav{-25, 25, 100};
    const Vec3 user{17.5, 45, 197.5};
    for (auto _ : state) benchmark::DoNotOptimize(link_geometry(uav, user, kBuilding));
}
BENCHMARK(BM_LinkGeometry);

void BM_ObjectiveSymmetric200(benchmark::State& state) {
    const UserSet users = generate_symmetric_users(kBuilding, 20);
    const PlacementObjective objective(users, kBuilding);
    for (auto _ : state) benchmark::DoNotOptimize(objective({-25, 25, 100}));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(users.size()));
}
BENCHMARK(BM_ObjectiveSymmetric200);

void BM_PsoSymmetric200(benchmark::State& state) {
    const UserSet users = generate_symmetric_users(kBuilding, 20);
    const PlacementObjective objective(users, kBuilding);
    PsoConfig config;
    config.maxit = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pso_solve(objective, config));
}
BENCHMARK(BM_PsoSymmetric200)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
