#include <benchmark/benchmark.h>

#include <memory>
#include <random>
#include <vector>

#include "tautgm/gmmodel.hpp"
#include "tautgm/mck.hpp"
#include "tautgm/qlinalg.hpp"
#include "tautgm/schubert.hpp"
#include "tautgm/tautring.hpp"

namespace {

const tautgm::gmmodel::ModelParams kParams{};

tautgm::tautring::Word fixed_word(std::mt19937& rng, int m, int len) {
    using tautgm::tautring::Gen;
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> factor(0, m - 1);
    tautgm::tautring::Word w;
    for (int g = 0; g < len; ++g) {
        switch (kind(rng)) {
            case 0: w.push_back(Gen::h(factor(rng))); break;
            case 1: w.push_back(Gen::c(factor(rng))); break;
            case 2: w.push_back(Gen::o(factor(rng))); break;
            default: {
                const int i = factor(rng);
                int j = factor(rng);
                while (j == i) j = factor(rng);
                w.push_back(Gen::tau(i, j));
                break;
            }
        }
    }
    return w;
}

void BM_SchubertSquare(benchmark::State& state) {
    using tautgm::schubert::SchubElem;
    SchubElem a = SchubElem::unit(3);
    for (int i = 0; i < 3; ++i)
        a = tautgm::schubert::mult(a, SchubElem::single({1, 0, 3}));
    for (auto _ : state) benchmark::DoNotOptimize(tautgm::schubert::mult(a, a));
}

void BM_NormalizeWords(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    std::mt19937 rng(4242);
    std::vector<tautgm::tautring::Word> words;
    for (int i = 0; i < 32; ++i) words.push_back(fixed_word(rng, m, 6));
    for (auto _ : state)
        for (const auto& w : words)
            benchmark::DoNotOptimize(tautgm::tautring::normalize(kParams, m, w));
    state.SetItemsProcessed(state.iterations() * 32);
}

void BM_GramMiddle(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(tautgm::tautring::gram(kParams, m, 3 * m));
}

void BM_GramRank(benchmark::State& state) {
    const auto g = tautgm::tautring::gram(kParams, 2, 6);
    for (auto _ : state) benchmark::DoNotOptimize(tautgm::qlinalg::rank(g));
}

void BM_BuildCK(benchmark::State& state) {
    const auto basis = std::make_shared<const tautgm::gmmodel::XBasis>(kParams);
    for (auto _ : state) benchmark::DoNotOptimize(tautgm::mck::build_ck(basis));
}

void BM_VerifyMCK(benchmark::State& state) {
    const auto basis = std::make_shared<const tautgm::gmmodel::XBasis>(kParams);
    const auto d = tautgm::mck::build_ck(basis);
    for (auto _ : state) benchmark::DoNotOptimize(tautgm::mck::verify_mck(d));
}

}  // namespace

BENCHMARK(BM_SchubertSquare);
BENCHMARK(BM_NormalizeWords)->Arg(2)->Arg(3);
BENCHMARK(BM_GramMiddle)->Arg(1)->Arg(2);
BENCHMARK(BM_GramRank);
BENCHMARK(BM_BuildCK);
BENCHMARK(BM_VerifyMCK);

BENCHMARK_MAIN();
