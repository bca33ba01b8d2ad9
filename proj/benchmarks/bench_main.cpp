// SPDX-License-Identifier: MIT
#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lprl/buchi.hpp"
#include "lprl/mc.hpp"
#include "lprl/sat.hpp"

using namespace lprl;

namespace {

std::string read_text(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::filesystem::path kRoot = LPRL_SOURCE_DIR;

const char* kFormulas[] = {
    "G F p", "p U (q & X !p)", "G (p -> F q)", "(F G p) | (G F q)", "X X X (p U q)",
};

void BM_LtlToBa(benchmark::State& state)
{
    Alphabet pq({"p", "q"});
    auto phi = parse_ltl(kFormulas[state.range(0)], pq);
    for (auto _ : state)
        benchmark::DoNotOptimize(ltl_to_ba(phi, pq));
    state.SetLabel(kFormulas[state.range(0)]);
}
BENCHMARK(BM_LtlToBa)->DenseRange(0, 4);

const char* kSatCorpus[] = {"od_2props", "od_3props", "ni_3props", "gni_3props", "con_liveness", "path_mixed"};

void BM_Sat(benchmark::State& state)
{
    const char* name = kSatCorpus[state.range(0)];
    auto s = normalize(parse_sentence(read_text(kRoot / "corpus/sat" / (std::string(name) + ".lprl"))));
    for (auto _ : state)
        benchmark::DoNotOptimize(check_sat(s));
    state.SetLabel(name);
}
BENCHMARK(BM_Sat)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

const char* kMcCorpus[] = {"forall_gf_holds", "forall_exists_neq_holds", "od_holds", "od_fails"};

void BM_Mc(benchmark::State& state)
{
    const auto dir = kRoot / "corpus/mc" / kMcCorpus[state.range(0)];
    auto s = normalize(parse_sentence(read_text(dir / "sentence.lprl")));
    KripkeFamily fam;
    for (std::size_t i = 1; i <= s.width(); ++i)
        fam.push_back(load_kripke((dir / ("k" + std::to_string(i) + ".json")).string()));
    McResult r;
    for (auto _ : state)
        benchmark::DoNotOptimize(r = check_mc(fam, s));
    state.counters["macro_states"] = static_cast<double>(r.stats.macro_states);
    state.SetLabel(kMcCorpus[state.range(0)]);
}
BENCHMARK(BM_Mc)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
