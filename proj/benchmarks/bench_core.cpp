#include <benchmark/benchmark.h>

#include <random>

#include "ramseylab/coloring.hpp"
#include "ramseylab/construction.hpp"
#include "ramseylab/forcing.hpp"
#include "ramseylab/halting.hpp"
#include "ramseylab/io.hpp"
#include "ramseylab/reduction.hpp"
#include "ramseylab/tree.hpp"

using namespace ramseylab;

namespace {

void BM_Homogeneity(benchmark::State& st) {
    const Nat n = static_cast<Nat>(st.range(0));
    const Coloring f = random_stable_coloring(7, n, n / 4);
    NatSet h;
    for (Nat x = 0; x < n; x += 3) h.insert(x);
    for (auto _ : st) {
        benchmark::DoNotOptimize(check_homogeneity(f, h, HomogeneityKind::kHomogeneous));
        benchmark::DoNotOptimize(check_homogeneity(f, h, HomogeneityKind::kLimitHomogeneous));
    }
}
BENCHMARK(BM_Homogeneity)->Arg(16)->Arg(64)->Arg(256);

void BM_LimitToHomogeneous(benchmark::State& st) {
    const Nat n = static_cast<Nat>(st.range(0));
    const Coloring f = random_stable_coloring(11, n, 8);
    NatSet l;
    for (Nat x = 0; x < n; ++x) {
        if (f.limit(x)->color == 1) l.insert(x);
    }
    for (auto _ : st) benchmark::DoNotOptimize(limit_to_homogeneous(f, l, 1));
}
BENCHMARK(BM_LimitToHomogeneous)->Arg(64)->Arg(256);

void BM_CodingColoring(benchmark::State& st) {
    const Nat horizon = static_cast<Nat>(st.range(0));
    std::vector<NatSet> stages{NatSet{}};
    for (Nat s = 1; s < 30; ++s) {
        NatSet next = stages.back();
        if (s % 3 == 0) next.insert(s % 20);
        stages.push_back(next);
    }
    const CEApproximation a(20, stages);
    for (auto _ : st) benchmark::DoNotOptimize(build_coding_coloring(a, horizon));
}
BENCHMARK(BM_CodingColoring)->Arg(60)->Arg(200);

void BM_PressButton(benchmark::State& st) {
    const Nat n = static_cast<Nat>(st.range(0));
    const ButtonTriple t{0, 1, n};
    const Condition base(0);
    for (auto _ : st) benchmark::DoNotOptimize(extend_pressing(base, t, n + 2));
}
BENCHMARK(BM_PressButton)->Arg(4)->Arg(10)->Arg(20);

void BM_BuildAndLabelTree(benchmark::State& st) {
    TreeParams p;
    p.k = 1;
    p.reservoir = {3, 4, 5, 6, 7, 8};
    p.arity = st.range(0) == 2 ? Arity::kTwo : Arity::kThree;
    p.depth_cap = 4;
    p.gamma = OracleFunctional({Axiom{query_input(p.variant, 0, 1), {}, {}, 1}});
    for (auto _ : st) {
        const LabeledTree tree = build_tree(p);
        if (!depth_exhausted_path(tree)) benchmark::DoNotOptimize(label_tree(tree));
    }
}
BENCHMARK(BM_BuildAndLabelTree)->Arg(2)->Arg(3);

void BM_RunSchedule(benchmark::State& st) {
    const Schedule s =
        schedule_from_json(read_json_file(std::string(RAMSEYLAB_BENCH_DATA) + "/construction/05_a21.json"));
    for (auto _ : st) benchmark::DoNotOptimize(run_stages(s));
}
BENCHMARK(BM_RunSchedule)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
