#include "sweil/builders.hpp"
#include "sweil/cohomology.hpp"
#include "sweil/sca.hpp"
#include "sweil/verify.hpp"

#include <benchmark/benchmark.h>

using namespace sweil;

namespace {

const algebra::GradedBackend& sl2() {
    static const auto b = algebra::parse_backend("loop:sl2");
    return b;
}

std::vector<fock::Monomial> box(int emax, int b0max, bool relative) {
    return fock::enumerate_box(sl2().dim(), fock::Box{emax, b0max, relative, std::nullopt, std::nullopt});
}

void BM_EnumerateBox(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(box(static_cast<int>(st.range(0)), 2, false));
}
BENCHMARK(BM_EnumerateBox)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

// d applied to every monomial of the box
void BM_ApplyDifferential(benchmark::State& st) {
    const auto d = fieldops::build_differential_d(sl2()).d;
    const auto states = box(static_cast<int>(st.range(0)), 2, false);
    for (auto _ : st)
        for (const auto& m : states) benchmark::DoNotOptimize(d.apply(m));
    st.SetItemsProcessed(st.iterations() * static_cast<long long>(states.size()));
}
BENCHMARK(BM_ApplyDifferential)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_N2Suite(benchmark::State& st) {
    verify::Settings s;
    s.window = 2;
    s.box = {static_cast<int>(st.range(0)), 1, false};
    s.jobs = 1;
    for (auto _ : st) benchmark::DoNotOptimize(verify::check_n2(sl2(), s));
}
BENCHMARK(BM_N2Suite)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_SuperJacobi(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(sca::check_super_jacobi(algebra::Scalar::frac(1, 2), static_cast<int>(st.range(0))));
}
BENCHMARK(BM_SuperJacobi)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

// sparse elimination against the dense oracle on one differential matrix
void BM_Rank(benchmark::State& st) {
    const auto d = fieldops::build_differential_d(sl2()).d;
    const auto p = cohomology::absolute_piece(sl2(), 1, 0, -1), q = cohomology::absolute_piece(sl2(), 1, 0, 0);
    const auto m = cohomology::assemble_matrix(d, p, q);
    const bool dense = st.range(0) != 0;
    const auto md = cohomology::to_dense(m);
    for (auto _ : st) benchmark::DoNotOptimize(dense ? cohomology::dense_rank(md) : cohomology::exact_rank(m));
    st.SetLabel(std::to_string(m.rows) + "x" + std::to_string(m.cols) + (dense ? " dense" : " sparse"));
}
BENCHMARK(BM_Rank)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RelativeTable(benchmark::State& st) {
    cohomology::Ranges r;
    r.emax = static_cast<int>(st.range(0));
    r.relative = true;
    const auto d = fieldops::build_differential_d(sl2()).d;
    for (auto _ : st) benchmark::DoNotOptimize(cohomology::cohomology_table(sl2(), d, r));
}
BENCHMARK(BM_RelativeTable)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
